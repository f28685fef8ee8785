// Serial vs parallel timings for the exhaustive and sampling kernels.
// Argument 0 = serial, 1 = parallel.

#include <benchmark/benchmark.h>

#include "bisect/audit.hpp"
#include "bisect/coloring.hpp"
#include "bisect/enumerate.hpp"
#include "bisect/generators.hpp"
#include "bisect/min_degree.hpp"
#include "bisect/oracle.hpp"
#include "bisect/random_bisect.hpp"
#include "bisect/tight.hpp"

using namespace bisect;

namespace {

Execution mode(const benchmark::State& st) { return st.range(0) ? Execution::parallel : Execution::serial; }

void BM_MaxBisectionOracle(benchmark::State& st) {
    const Graph g = gnm(20, 60, 1);
    for (auto _ : st) benchmark::DoNotOptimize(brute_max_bisection(g, mode(st)).optimum);
}

void BM_JudiciousOracle(benchmark::State& st) {
    const Graph g = random_min_degree(20, 50, 2, 2);
    for (auto _ : st) benchmark::DoNotOptimize(brute_judicious_optimum(g, mode(st)).optimum);
}

void BM_InequalityAudit(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(inequality_audit(4, 100, mode(st)));
}

void BM_VarianceTrials(benchmark::State& st) {
    const Graph g = random_no_isolated(2000, 6000, 3);
    for (auto _ : st) benchmark::DoNotOptimize(judicious_bisection_variance(g, 7, 64, mode(st)));
}

void BM_BoundedDegreeBisection(benchmark::State& st) {
    const Graph g = random_bounded(3000, 4, 6000, 4);
    for (auto _ : st) benchmark::DoNotOptimize(bounded_degree_bisection(g, 4, mode(st)));
}

void BM_TightCensus(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(tight_census(6, mode(st)));
}

void BM_Enumerate(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(nonisomorphic_graphs(7, false, mode(st)).size());
}

void BM_MinDegreePipeline(benchmark::State& st) {
    const Graph g = random_min_degree(2000, 8000, 4, 5);
    for (auto _ : st) benchmark::DoNotOptimize(min_degree_bisection(g, 4).report.achieved);
}

}  // namespace

BENCHMARK(BM_MaxBisectionOracle)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JudiciousOracle)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InequalityAudit)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VarianceTrials)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BoundedDegreeBisection)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TightCensus)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Enumerate)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinDegreePipeline)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
