// Command-line front end: gen, solve, oracle, verify, audit, bench, tightenum.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bisect/graph.hpp"
#include "bisect/rational.hpp"
#include "bisect/report.hpp"
#include "bisect/rng.hpp"

namespace bisect {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;         // invalid configuration
inline constexpr int kExitPrecondition = 3;  // input outside the algorithm's hypotheses
inline constexpr int kExitOracleOverrun = 4;
inline constexpr int kExitInput = 5;         // unreadable or malformed input

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline const std::vector<std::string> kAlgorithms{"tight", "alpha", "variance", "star", "mindeg", "bounded", "regular"};

struct SolveParams {
    std::string algo;
    std::optional<Rational> eps;
    std::optional<int> delta;
    std::optional<Rational> alpha;
    std::optional<int> r;
    std::uint64_t seed = kDefaultSeed;
    std::optional<int> max_trials;
    bool lenient = false;  // star: report the degree hypothesis instead of enforcing it
};

/// Throws UsageError for unknown algorithms or parameters the algorithm
/// does not take.
void validate(const SolveParams& p);

struct SolveOutcome {
    Bipartition part;
    BoundReport report;
    Json detail = Json::object();
};

SolveOutcome solve_graph(const Graph& g, const SolveParams& p);

/// Full solve report as printed by `solve --format json`.
Json solve_report(const Graph& g, const std::string& source, const SolveParams& p, const SolveOutcome& o);

/// Reads a partition as a JSON array of 1/2, a solve report with a
/// "partition" field, or whitespace-separated 1/2 tokens.
Bipartition parse_partition(const std::string& text);

/// Parses args (without the program name) and runs one subcommand. Returns
/// the process exit code.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace bisect
