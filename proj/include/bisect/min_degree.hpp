// Judicious bisections under a minimum-degree condition: high-degree
// extraction, the optimal split of the high-degree set, and the pipeline that
// dispatches to the variance, star and greedy schemes.
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bisect/graph.hpp"
#include "bisect/rational.hpp"
#include "bisect/report.hpp"
#include "bisect/rng.hpp"

namespace bisect {

/// Vertices with degree >= n^exponent, decided in integers
/// (d^q >= n^p for exponent p/q).
std::vector<Vertex> high_degree_set(const Graph& g, const Rational& exponent = Rational(3, 4));

struct WeightSplit {
    std::vector<bool> first;  // item -> in the heavier part
    long long heavy = 0;      // weight of the heavier part
    long long light = 0;
    long long gap() const { return heavy - light; }
};

/// Splits the weights into two parts with the smallest possible difference.
/// Subset-sum DP over the total weight when it is at most `dp_limit`,
/// otherwise meet-in-the-middle for up to 40 items; throws
/// std::invalid_argument beyond that. Among optimal splits the heavier part's
/// weight is fixed and its items come from the DP's first-reach order.
WeightSplit min_gap_split(std::span<const long long> weights, long long dp_limit = 4'000'000);

/// Brute force over all 2^k assignments, k <= 24; reference for tests.
long long min_gap_brute(std::span<const long long> weights);

struct HighDegreeSplit {
    std::vector<Vertex> A, A1, A2;
    std::vector<long long> abar_degree;  // parallel to A
    long long e1 = 0;                    // e(A1, V\A)
    long long e2 = 0;                    // e(A2, V\A)
    long long theta = 0;                 // e1 - e2
    int alpha = 0;                       // A-vertices with V\A-degree >= theta
    long long rho = 0;                   // V\A-degrees of the other A-vertices
    long long m1 = 0;                    // e(A, V\A)
    long long m2 = 0;                    // e(V\A)
    long long eA = 0;                    // e(A)
    int nprime = 0;                      // |V\A|
};

/// Fills every field for a given split; A1 must be the side with e1 >= e2.
HighDegreeSplit make_split(const Graph& g, std::span<const Vertex> a1, std::span<const Vertex> a2);

/// Optimal split of A by V\A-degree sums.
HighDegreeSplit optimal_split(const Graph& g, std::span<const Vertex> A);

struct StructureReport {
    bool triggered = false;  // theta > m/(delta+1)
    int kappa = 0;           // delta/2
    Rational lambda;         // e1 / m1
    bool part_i = true;      // all V\A-degrees in A1 >= theta
    bool part_ii = true;     // at most delta-1 vertices of V\A-degree >= theta
    bool part_iii = true;    // rho <= n' - theta
    bool kappa_size = true;  // |A1| <= kappa
    bool kappa_huge = true;  // A2 has at most kappa-1 vertices of V\A-degree >= theta
    bool no_middle_sum = true;  // no subset sum strictly between e2 and e1
    std::vector<std::string> defects;
    bool ok() const { return defects.empty(); }
};

/// Checks the structure that optimality forces when the gap is large. Not
/// triggered means nothing is asserted. delta must be even and positive.
StructureReport verify_split_structure(const HighDegreeSplit& split, int delta, long long m);

Json to_json(const HighDegreeSplit& s);
Json to_json(const StructureReport& r);

/// Kernighan-Lin passes of vertex swaps on the key (max side, e(V_1) + e(V_2)).
/// Each pass makes up to n/2 best swaps among unlocked vertices, taking the
/// `candidates` vertices per side with the most same-side neighbours, and
/// keeps the best prefix. Side sizes are preserved and the key never grows.
Bipartition judicious_refine(const Graph& g, Bipartition part, int candidates = 32, int max_passes = 50);

struct PipelineOptions {
    Rational eps{1, 20};
    std::uint64_t seed = kDefaultSeed;
    int max_trials = 64;
    Rational exponent{3, 4};
    bool refine = true;  // judicious_refine on the scheme's output
    // extra judicious_refine runs from seeded random bisections; a run
    // replaces the refined scheme output only if its key is strictly smaller
    int restarts = 8;
};

struct PipelineReport {
    std::string branch;  // dense, bounded-degree, small-gap, delta2-case1, delta2-case2, general
    int delta = 0;       // effective even delta
    int delta_input = 0;
    Rational eps;
    long long theta = 0;
    int alpha = 0;
    long long rho = 0;
    int tau = 0;  // tight components of G[V\A]
    Rational target_fraction;
    int achieved1 = 0;
    int achieved2 = 0;
    bool satisfied = false;  // both sides <= (target + eps) m
    int scheme1 = 0;  // sides before refinement
    int scheme2 = 0;
    // theta + tau/2 <= n/2 + m/(delta+1) with this run's numbers
    Rational main_lhs, main_rhs;
    StructureReport structure;
    Json inner = Json::object();  // report of the scheme the branch called
};

Json to_json(const PipelineReport& r);

struct MinDegreeResult {
    Bipartition part;
    PipelineReport pipeline;
    BoundReport report;
    HighDegreeSplit split;
};

/// Throws PreconditionError when the minimum degree is below delta or
/// delta < 2. Odd delta uses the target of delta - 1.
MinDegreeResult min_degree_bisection(const Graph& g, int delta, const PipelineOptions& opt = {});

}  // namespace bisect
