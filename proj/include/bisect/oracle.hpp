// Exhaustive oracles for small graphs.
#pragma once

#include <span>
#include <stdexcept>

#include "bisect/graph.hpp"
#include "bisect/parallel.hpp"

namespace bisect {

struct OracleResult {
    long long optimum = 0;
    Bipartition witness;
    long long instances_enumerated = 0;
};

class OracleTooLarge : public std::invalid_argument {
public:
    OracleTooLarge(const char* what, int n, int limit);
};

inline constexpr int kBisectionOracleLimit = 20;
inline constexpr int kCutOracleLimit = 24;

/// Maximum crossing over all bisections (side 1 holds ceil(n/2) vertices).
/// Ties resolve to the numerically smallest side-1 bitmask.
OracleResult brute_max_bisection(const Graph& g, Execution ex = Execution::parallel);

/// Minimum over bisections of max(e(V1), e(V2)).
OracleResult brute_judicious_optimum(const Graph& g, Execution ex = Execution::parallel);

/// Maximum cut over all bipartitions (no balance constraint).
OracleResult brute_max_cut(const Graph& g, Execution ex = Execution::parallel);

/// Literal tightness test: enumerates every perfect matching of T - v for
/// each v in T. |component| <= 12.
bool brute_tight_check(const Graph& g, std::span<const Vertex> component);

/// Maximum matching size by subset recursion; n <= 20.
int brute_max_matching(const Graph& g);

/// Largest number of free uncovered vertices over all maximum matchings; n <= 14.
int brute_max_free_count(const Graph& g);

}  // namespace bisect
