// Coloring-based bisections for bounded-degree and regular graphs.
#pragma once

#include <cstdint>
#include <vector>

#include "bisect/graph.hpp"
#include "bisect/parallel.hpp"
#include "bisect/report.hpp"
#include "bisect/rng.hpp"

namespace bisect {

struct Coloring {
    int k = 0;
    std::vector<int> color;        // vertex -> class in 0..k-1
    std::vector<int> class_sizes;  // per class
};

Json to_json(const Coloring& c);

bool is_proper(const Graph& g, const Coloring& c);
bool is_equitable(const Coloring& c);

/// Greedy into the smallest admissible class, then moves along paths of the
/// class accessibility digraph (X -> Y when some vertex of X has no neighbour
/// in Y) from the largest classes to the smallest, with seeded neutral moves
/// when no path exists. Exhaustive search for n <= 12 if that stalls.
/// Throws PreconditionError when k <= max degree, std::runtime_error if no
/// equitable coloring was found.
Coloring equitable_coloring(const Graph& g, int k, std::uint64_t seed = kDefaultSeed);

/// (r+1)/(2r) for odd r, (r+2)/(2(r+1)) for even r.
Rational degree_cut_fraction(int r);

struct ClassSplit {
    Bipartition part;
    int crossing = 0;
    Rational bound;  // (k+1)/(2k) m for odd k, k/(2(k-1)) m for even k, k = used classes
    long long options = 0;
    bool sampled = false;
};

/// Best split of the color classes with floor(k/2) classes on side 1, over
/// all subsets when there are at most 10^4 of them, else over 256 seeded
/// samples. Lowest option index wins ties.
ClassSplit chromatic_split(const Graph& g, const Coloring& c, Execution ex = Execution::parallel,
                           std::uint64_t seed = kDefaultSeed);

struct ColoringBisection {
    Bipartition part;
    BoundReport report;
    Coloring coloring;
    int gap = 0;
    long long options = 0;
    bool sampled = false;
    int special_class = -1;  // even r: the class split across both sides
};

/// Near-bisection from an equitable (r+1)-coloring: odd r takes (r+1)/2
/// classes; even r also splits one special class W_k, placing its vertices
/// by their neighbour counts on each side and trying both parities. Bound
/// degree_cut_fraction(r) m with size gap <= r/2 + 1. Throws PreconditionError
/// when the maximum degree exceeds r.
ColoringBisection bounded_degree_bisection(const Graph& g, int r, Execution ex = Execution::parallel,
                                           std::uint64_t seed = kDefaultSeed);

struct BalanceResult {
    Bipartition part;
    BoundReport report;
    int moved = 0;
    int previous = 0;  // crossing before balancing
};

/// Moves vertices of the larger side, each time the one losing the fewest
/// crossing edges (lowest index on ties), until the sides differ by at most
/// one. Reports against degree_cut_fraction(r) m - r(r+1)/4 (odd r) or
/// - r(r+2)/4 (even r).
BalanceResult balance_to_bisection(const Graph& g, Bipartition part, int r);

struct RegularBisection {
    Bipartition part;
    BoundReport report;
    int r = 0;
    int free_moves = 0;    // moves that did not decrease the cut
    int forced_moves = 0;  // moves after no such vertex was left
    bool monotone = true;  // the cut never dropped during free moves
    long long certificate = 0;  // ceil(n/2) (floor(r/2)+1) when forced moves happen
};

/// Chromatic split of an (r+1)-coloring, then free moves of larger-side
/// vertices with at least half of their neighbours on their own side (largest
/// gain first), then forced moves. Throws PreconditionError unless g is regular.
RegularBisection regular_bisection(const Graph& g, Execution ex = Execution::parallel);

}  // namespace bisect
