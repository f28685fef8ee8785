#include <algorithm>

#include "bisect/generators.hpp"
#include "bisect/min_degree.hpp"
#include "bisect/oracle.hpp"
#include "bisect/rng.hpp"
#include "doctest.h"

using namespace bisect;

namespace {

// A-vertices 0..k-1, vertex i joined to the first w[i] vertices of V\A, plus
// a cycle through V\A when `ring` is set.
Graph planted(const std::vector<long long>& w, int nprime, bool ring = false) {
    const int k = static_cast<int>(w.size());
    std::vector<Edge> es;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < w[i]; ++j) es.push_back({i, k + j});
    if (ring && nprime >= 3)
        for (int j = 0; j < nprime; ++j) es.push_back({k + j, k + (j + 1) % nprime});
    return Graph(k + nprime, es);
}

std::vector<Vertex> first_k(int k) {
    std::vector<Vertex> v(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) v[i] = i;
    return v;
}

Graph wheel(int n) {
    std::vector<Edge> es;
    for (int i = 1; i < n; ++i) {
        es.push_back({0, i});
        es.push_back({i, i + 1 < n ? i + 1 : 1});
    }
    return Graph(n, es);
}

}  // namespace

TEST_CASE("high-degree set examples") {
    CHECK(high_degree_set(cycle(40)).empty());
    CHECK(high_degree_set(star(256)) == std::vector<Vertex>{0});
    CHECK(high_degree_set(complete_bipartite(3, 253)) == std::vector<Vertex>{0, 1, 2});
    // n = 16: threshold 16^{3/4} = 8 exactly
    Graph g = planted({8, 7}, 14);
    CHECK(high_degree_set(g) == std::vector<Vertex>{0});
    CHECK(high_degree_set(g, Rational(1, 2)) == std::vector<Vertex>{0, 1});
}

TEST_CASE("min-gap split examples") {
    std::vector<long long> a{5, 3, 2};
    WeightSplit s = min_gap_split(a);
    CHECK(s.gap() == 0);
    CHECK(s.first == std::vector<bool>{true, false, false});

    std::vector<long long> b{9, 1, 1};
    s = min_gap_split(b);
    CHECK(s.heavy == 9);
    CHECK(s.gap() == 7);
    CHECK(s.first == std::vector<bool>{true, false, false});

    std::vector<long long> c{4};
    s = min_gap_split(c);
    CHECK(s.gap() == 4);

    std::vector<long long> none;
    CHECK(min_gap_split(none).gap() == 0);
}

TEST_CASE("min-gap split matches brute force, DP and meet-in-the-middle agree") {
    Rng rng(11);
    for (int it = 0; it < 300; ++it) {
        const int k = 1 + static_cast<int>(rng.below(16));
        std::vector<long long> w(static_cast<std::size_t>(k));
        for (auto& x : w) x = static_cast<long long>(rng.below(it % 3 == 0 ? 1000 : 30));
        const WeightSplit dp = min_gap_split(w);
        const WeightSplit mitm = min_gap_split(w, 0);
        CHECK(dp.gap() == min_gap_brute(w));
        CHECK(mitm.gap() == dp.gap());
        CHECK(dp.heavy >= dp.light);
        long long sum = 0;
        for (int i = 0; i < k; ++i)
            if (dp.first[i]) sum += w[i];
        CHECK(sum == dp.heavy);
    }
}

TEST_CASE("optimal split examples on graphs") {
    HighDegreeSplit s = optimal_split(star(5), std::vector<Vertex>{0});
    CHECK(s.theta == 4);
    CHECK(s.alpha == 1);
    CHECK(s.rho == 0);
    CHECK(s.A1 == std::vector<Vertex>{0});

    Graph g = planted({9, 1, 1}, 9);
    s = optimal_split(g, first_k(3));
    CHECK(s.theta == 7);
    CHECK(s.A1 == std::vector<Vertex>{0});
    CHECK(s.alpha == 1);
    CHECK(s.rho == 2);
    CHECK(s.m1 == 11);
    CHECK(s.nprime == 9);

    g = planted({5, 3, 2}, 5);
    s = optimal_split(g, first_k(3));
    CHECK(s.theta == 0);
    CHECK(s.A1 == std::vector<Vertex>{0});
    CHECK(s.alpha == 3);
}

TEST_CASE("optimal split gap equals brute force over random planted graphs") {
    Rng rng(5);
    for (int it = 0; it < 60; ++it) {
        const int k = 1 + static_cast<int>(rng.below(20));
        std::vector<long long> w(static_cast<std::size_t>(k));
        for (auto& x : w) x = 1 + static_cast<long long>(rng.below(25));
        Graph g = planted(w, 30, true);
        HighDegreeSplit s = optimal_split(g, first_k(k));
        CHECK(s.theta == min_gap_brute(w));
        CHECK(s.e1 >= s.e2);
        CHECK(s.m1 == s.e1 + s.e2);
        CHECK(s.m2 == 30);
    }
}

TEST_CASE("structure check") {
    // gap too small to trigger
    Graph g = planted({5, 3, 2}, 5);
    StructureReport r = verify_split_structure(optimal_split(g, first_k(3)), 2, g.size());
    CHECK_FALSE(r.triggered);
    CHECK(r.ok());

    // K_{3,253}: one full V\A-degree gap, exactly at the threshold
    Graph k3 = complete_bipartite(3, 253);
    HighDegreeSplit s = optimal_split(k3, high_degree_set(k3));
    CHECK(s.theta == 253);
    CHECK(s.A1.size() == 2);
    r = verify_split_structure(s, 2, k3.size());
    CHECK_FALSE(r.triggered);
    CHECK(s.theta * 3 == k3.size());

    // optimal and triggered
    g = planted({10, 1, 1, 1}, 10);
    s = optimal_split(g, first_k(4));
    CHECK(s.theta == 7);
    r = verify_split_structure(s, 2, g.size());
    CHECK(r.triggered);
    CHECK(r.ok());
    CHECK(r.lambda == Rational(10, 13));

    // adversarial hand-built split
    s = make_split(g, std::vector<Vertex>{0, 1}, std::vector<Vertex>{2, 3});
    CHECK(s.theta == 9);
    r = verify_split_structure(s, 2, g.size());
    CHECK(r.triggered);
    CHECK_FALSE(r.ok());
    CHECK_FALSE(r.part_i);
    CHECK_FALSE(r.kappa_size);
    CHECK_FALSE(r.no_middle_sum);

    CHECK_THROWS_AS(verify_split_structure(s, 3, g.size()), std::invalid_argument);
    CHECK_THROWS_AS(make_split(g, std::vector<Vertex>{1}, std::vector<Vertex>{0}), std::invalid_argument);
}

TEST_CASE("optimal splits never show structural defects") {
    Rng rng(23);
    int triggered = 0;
    for (int it = 0; it < 400; ++it) {
        const int k = 1 + static_cast<int>(rng.below(9));
        std::vector<long long> w(static_cast<std::size_t>(k));
        for (auto& x : w) x = 1 + static_cast<long long>(rng.below(it % 2 ? 40 : 6));
        if (it % 4 == 0) w[0] = 60 + static_cast<long long>(rng.below(40));
        const int nprime = static_cast<int>(*std::max_element(w.begin(), w.end()));
        Graph g = planted(w, nprime, it % 3 == 0);
        HighDegreeSplit s = optimal_split(g, first_k(k));
        for (int delta : {2, 4, 6}) {
            StructureReport r = verify_split_structure(s, delta, g.size());
            triggered += r.triggered;
            CHECK(r.ok());
        }
    }
    CHECK(triggered > 50);
}

TEST_CASE("pipeline preconditions") {
    CHECK_THROWS_AS(min_degree_bisection(path(6), 2), PreconditionError);
    CHECK_THROWS_AS(min_degree_bisection(cycle(6), 1), PreconditionError);
    CHECK_THROWS_AS(min_degree_bisection(cycle(6), 3), PreconditionError);
}

TEST_CASE("pipeline examples") {
    MinDegreeResult k3 = min_degree_bisection(complete_graph(3), 2);
    CHECK(k3.pipeline.achieved1 <= 1);
    CHECK(k3.pipeline.achieved2 <= 1);
    CHECK(is_bisection(complete_graph(3), k3.part));

    // miniature of the first extremal family
    CHECK(brute_judicious_optimum(family1(2, 1, 1)).optimum == 2);

    Graph f = family1(2, 4, 3);
    MinDegreeResult r = min_degree_bisection(f, 2);
    CHECK(r.pipeline.target_fraction == Rational(1, 3));
    CHECK(r.pipeline.satisfied);
    CHECK(Rational(std::max(r.pipeline.achieved1, r.pipeline.achieved2)) <=
          (Rational(1, 3) + r.pipeline.eps) * Rational(f.size()));

    Graph big = random_min_degree(2000, 3000, 2, 99);
    r = min_degree_bisection(big, 2);
    CHECK(r.pipeline.branch == "bounded-degree");
    CHECK(r.pipeline.satisfied);
    CHECK(Rational(r.report.achieved) <= (Rational(1, 3) + Rational(1, 20)) * Rational(3000));
}

TEST_CASE("pipeline branches") {
    PipelineOptions half;
    half.eps = Rational(1, 2);
    MinDegreeResult r = min_degree_bisection(complete_graph(10), 2, half);
    CHECK(r.pipeline.branch == "dense");

    r = min_degree_bisection(cycle(50), 2);
    CHECK(r.pipeline.branch == "bounded-degree");

    Graph kb = complete_bipartite(4, 252);
    r = min_degree_bisection(kb, 4);
    CHECK(r.pipeline.branch == "small-gap");
    CHECK(r.pipeline.theta == 0);
    CHECK(r.pipeline.target_fraction == Rational(6, 20));

    Graph w = wheel(300);
    r = min_degree_bisection(w, 2);
    CHECK(r.pipeline.branch == "delta2-case2");
    CHECK(r.pipeline.structure.triggered);
    CHECK(r.pipeline.structure.ok());
    CHECK(r.pipeline.satisfied);
    CHECK(is_bisection(w, r.part));

    // odd delta falls back to the even target below it
    Graph k6 = complete_graph(6);
    r = min_degree_bisection(k6, 5);
    CHECK(r.pipeline.delta == 4);
    CHECK(r.pipeline.delta_input == 5);

    // K_{5,251}, delta = 5: split 3/2 leaves theta = 251 = m/5, still a small gap
    Graph k5 = complete_bipartite(5, 251);
    r = min_degree_bisection(k5, 5);
    CHECK(r.pipeline.theta == 251);
    CHECK(r.pipeline.branch == "small-gap");

    // hub over a 4-regular circulant: theta = 299 > m/5
    std::vector<Edge> es;
    for (int i = 1; i < 300; ++i) {
        es.push_back({0, i});
        es.push_back({i, 1 + i % 299});
        es.push_back({i, 1 + (i + 1) % 299});
    }
    Graph hub(300, es);
    r = min_degree_bisection(hub, 4);
    CHECK(r.pipeline.theta == 299);
    CHECK(r.pipeline.branch == "general");
    CHECK(r.pipeline.structure.ok());
    CHECK(r.pipeline.structure.triggered);
}

TEST_CASE("pipeline reports recomputed values and is deterministic") {
    Rng rng(3);
    for (int it = 0; it < 20; ++it) {
        const int n = 20 + static_cast<int>(rng.below(60));
        const long long m = n + static_cast<long long>(rng.below(static_cast<std::uint64_t>(n)));
        Graph g = random_min_degree(n, m, 2, 1000 + it);
        MinDegreeResult a = min_degree_bisection(g, 2);
        MinDegreeResult b = min_degree_bisection(g, 2);
        CHECK(a.part == b.part);
        CHECK(to_json(a.report).dump() == to_json(b.report).dump());
        CHECK(is_bisection(g, a.part));
        CutStats st = cut_stats(g, a.part);
        CHECK(st.inside1 == a.pipeline.achieved1);
        CHECK(st.inside2 == a.pipeline.achieved2);
        CHECK(a.pipeline.structure.ok());
    }
}

TEST_CASE("pipeline report JSON fields") {
    MinDegreeResult r = min_degree_bisection(cycle(12), 2);
    Json j = to_json(r.pipeline);
    for (const char* key : {"branch", "delta", "eps", "theta", "alpha", "rho", "tau", "target_fraction", "achieved1",
                            "achieved2", "satisfied"})
        CHECK(j.contains(key));
    CHECK(j["target_fraction"] == "1/3");
}

TEST_CASE("refinement keeps sizes and never worsens the larger side") {
    Rng rng(41);
    for (int it = 0; it < 200; ++it) {
        const int n = 4 + static_cast<int>(rng.below(12));
        Graph g = gnm(n, static_cast<long long>(rng.below(static_cast<std::uint64_t>(n * (n - 1) / 2 + 1))), 500 + it);
        Bipartition p(n);
        for (Vertex v = 0; v < n; ++v) p[v] = v % 2 ? Side::two : Side::one;
        Rng sh(it);
        sh.shuffle(p.side.begin(), p.side.end());
        const CutStats before = cut_stats(g, p);
        Bipartition q = judicious_refine(g, p);
        const CutStats after = cut_stats(g, q);
        CHECK(after.size1 == before.size1);
        CHECK(after.max_inside() <= before.max_inside());
        CHECK(after.max_inside() >= brute_judicious_optimum(g, Execution::serial).optimum);
    }
}

TEST_CASE("pipeline with refinement stays close to the judicious optimum on small graphs") {
    Rng rng(8);
    for (int it = 0; it < 300; ++it) {
        const int n = 3 + static_cast<int>(rng.below(10));
        const long long top = 1LL * n * (n - 1) / 2;
        const long long m = n + static_cast<long long>(rng.below(static_cast<std::uint64_t>(top - n + 1)));
        Graph g = random_min_degree(n, m, 2, 70 + it);
        MinDegreeResult r = min_degree_bisection(g, 2);
        CHECK(r.report.achieved <= brute_judicious_optimum(g, Execution::serial).optimum + 2);
        CHECK(std::max(r.pipeline.achieved1, r.pipeline.achieved2) <=
              std::max(r.pipeline.scheme1, r.pipeline.scheme2));
    }
}
