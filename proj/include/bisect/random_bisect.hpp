// Randomized judicious bisections: the paired variance scheme and the star
// scheme, both run as seeded trials with explicit acceptance predicates.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bisect/graph.hpp"
#include "bisect/parallel.hpp"
#include "bisect/rational.hpp"
#include "bisect/report.hpp"
#include "bisect/rng.hpp"

namespace bisect {

using Pairing = std::vector<std::pair<Vertex, Vertex>>;

struct LambdaBound {
    Rational lambda;          // (3m + sum d^2) / 16
    Rational lambda_refined;  // (3|F| + sum d^2) / 16, F = edges not inside a pair
    double cap = 0;           // m/4 + sqrt(2 lambda)
};

/// Throws std::invalid_argument unless the pairs are disjoint and cover all
/// vertices except at most one.
LambdaBound lambda_bound(const Graph& g, const Pairing& pairing);

/// Maximum-matching edges first, then the remaining vertices in index order.
/// For odd n the last vertex stays unpaired.
Pairing default_pairing(const Graph& g);

/// Each pair split across the sides with an independent fair coin; an
/// unpaired vertex goes to side 1.
Bipartition paired_random_bisection(const Graph& g, std::uint64_t seed);
Bipartition paired_random_bisection(const Graph& g, const Pairing& pairing, Rng& rng);

struct VarianceResult {
    Bipartition part;
    BoundReport report;
    LambdaBound lambda;
    int trials_used = 0;
    bool accepted = false;
    bool sparse_fallback = false;  // m < n/4: isolated vertices placed last
};

/// Accepts the lowest-index trial with both e(V_i) <= m/4 + sqrt(2 Lambda)
/// (checked exactly in integers). Without an accepted trial, returns the
/// trial with the smallest larger side and reports satisfied = false.
VarianceResult judicious_bisection_variance(const Graph& g, std::uint64_t seed = kDefaultSeed,
                                            int max_trials = 64, Execution ex = Execution::parallel);

struct Star {
    Vertex apex = 0;
    std::vector<Vertex> members;  // sorted, includes the apex
};

struct StarSystem {
    std::vector<Star> stars;
    std::vector<Vertex> residual;  // T
    int nonfree = 0;               // non-free W-vertices in T
    int heavy = 0;                 // free W-vertices of degree >= C/eps in T
};

/// max(1, m/n)
Rational default_density(const Graph& g);

/// eps^4 / (1024 C^3)
double gamma_of(const Rational& eps, const Rational& C);

/// Builds the star system of G[V \ A] where A is given by `in_a` (empty span:
/// no prepartition). Degrees are taken in the full graph. With
/// `enforce_degree_hypothesis`, throws PreconditionError when a vertex outside
/// A has degree above gamma*n.
StarSystem star_decomposition(const Graph& g, std::span<const bool> in_a, const Rational& C,
                              const Rational& eps, bool enforce_degree_hypothesis = false);

struct StarOptions {
    Rational eps{1, 20};
    std::optional<Rational> C;  // default_density when empty
    std::uint64_t seed = kDefaultSeed;
    int max_trials = 64;
    bool enforce_degree_hypothesis = true;
    Execution ex = Execution::parallel;
};

struct BudgetLedger {
    // allowances and the amounts consumed by the returned partition
    Rational expectation_budget, concentration_budget, rebalance_budget;
    Rational expectation_used, concentration_used, rebalance_used;
};

struct JudiciousReport {
    Rational eps;
    Rational C;
    double gamma = 0;
    int tau = 0;
    Rational cap1, cap2;
    double balance_tol = 0;  // on |V_1 \ A_1| - |V \ A|/2
    int achieved1 = 0;
    int achieved2 = 0;
    int trials_used = 0;
    bool accepted = false;
    bool degree_hypothesis = false;  // every vertex outside A has degree <= gamma n
    bool vacuous = false;            // a negative cap met by an empty side
    bool satisfied = false;
    int rebalance_cap = 0;
    int moved = 0;
    int a_moved = 0;  // prepartitioned vertices moved when A alone blocks balancing
    BudgetLedger budget_ledger;
};

Json to_json(const BudgetLedger& b);
Json to_json(const JudiciousReport& r);

struct JudiciousResult {
    Bipartition part;
    BoundReport report;
    JudiciousReport detail;
    StarSystem stars;
};

/// Star scheme: each apex on a random side with the rest of its star opposite,
/// residual vertices uniform. A trial is accepted when both
/// e(V_i) <= m/4 - (n - tau)/8 + eps n/2 and |V_1| is within eps n/(16C) of
/// n/2; the partition is then rebalanced by moving vertices of degree below 8C
/// (the cap doubles if they run out). Final caps add eps n.
JudiciousResult judicious_tight_bisection(const Graph& g, const StarOptions& opt = {});

/// Same scheme on G[V \ A] with A_1 on side 1 and A_2 on side 2. Caps are
/// e(A_i) + e(A_i, V\A)/2 + e(V\A)/4 - (n - tau)/8 + eps n with tau counted in
/// G[V \ A]. Throws std::invalid_argument when A_1 and A_2 intersect.
JudiciousResult judicious_with_prepartition(const Graph& g, std::span<const Vertex> a1,
                                            std::span<const Vertex> a2, const StarOptions& opt = {});

struct StarTrialSample {
    int trials = 0;
    int accepted = 0;  // trials meeting the pre-rebalance acceptance predicate
};

/// Evaluates trials 0..trials-1 of the unpartitioned star scheme without
/// stopping at the first success; used to measure the acceptance rate.
StarTrialSample sample_star_trials(const Graph& g, const StarOptions& opt, int trials);

}  // namespace bisect
