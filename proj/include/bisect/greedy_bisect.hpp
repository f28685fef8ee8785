// Pair construction, greedy pair splitting, and the bisections built on them.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bisect/graph.hpp"
#include "bisect/matching.hpp"
#include "bisect/rational.hpp"
#include "bisect/report.hpp"

namespace bisect {

enum class PairKind { edge, p, q };

const char* to_string(PairKind k);

struct VertexPair {
    Vertex a = 0;
    Vertex b = 0;
    PairKind kind = PairKind::edge;
};

struct PairSequence {
    std::vector<VertexPair> pairs;
    std::vector<Vertex> remainder;    // W-vertices left after p-pairing, sorted
    std::vector<Vertex> common_free;  // their shared free-neighbour set
    std::optional<Vertex> singleton;  // last remainder vertex when n is odd
    int s = 0;                        // edge pairs
    int r_prime = 0;                  // p-pairs
    int t = 0;                        // q-pairs
};

/// Edge pairs in matching order; p-pairs formed from W by repeatedly pairing
/// the two largest groups of equal free-neighbour sets, each slotted right
/// after the first matched edge that exactly one of its vertices has a free
/// neighbour in; q-pairs from the remainder appended at the end.
PairSequence build_pairs(const Graph& g, const Matching& m, const FreeInfo& info);

struct SplitTrace {
    std::vector<int> increments;  // x_i - x_{i-1}
    std::vector<int> new_edges;   // edges revealed at step i
    std::vector<bool> gain;       // step i is an edge pair or has odd back-degree sum
    int gain_steps = 0;
};

/// Splits every pair across the two sides, choosing the orientation with the
/// larger crossing increment; ties put the smaller vertex on side 1. A
/// singleton goes to the side with more neighbours (side 1 on ties). When n is
/// odd the labels are swapped if needed so that side 1 is the larger side.
std::pair<Bipartition, SplitTrace> greedy_split(const Graph& g, const PairSequence& seq);

/// Side 1 gets the extra vertex for odd n; swapping labels keeps the cut.
Bipartition normalize_sides(Bipartition part);

struct TightBisection {
    Bipartition part;
    BoundReport report;
    PairSequence pairs;
    SplitTrace trace;
};

/// Bisection of size at least m/2 + (n - max(tau, Delta - 1))/4.
TightBisection tight_bisection(const Graph& g);

struct AlphaBisection {
    Bipartition part;
    BoundReport report;
    int case_taken = 1;
    int min_side_floor = 0;
};

/// Cut of size at least m/2 + alpha*n with both sides at least
/// floor((1/2 - alpha) n). Requires no isolated vertices and 0 <= alpha <= 1/6.
AlphaBisection alpha_bisection(const Graph& g, const Rational& alpha);

}  // namespace bisect
