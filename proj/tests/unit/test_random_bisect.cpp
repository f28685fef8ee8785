#include <cmath>

#include "bisect/generators.hpp"
#include "bisect/matching.hpp"
#include "bisect/random_bisect.hpp"
#include "bisect/tight.hpp"
#include "doctest.h"

using namespace bisect;

namespace {

StarOptions lenient(Rational eps, std::uint64_t seed = kDefaultSeed) {
    StarOptions o;
    o.eps = eps;
    o.seed = seed;
    o.enforce_degree_hypothesis = false;
    return o;
}

// two triangles plus a vertex adjacent to all six
Graph two_triangles_dominated() {
    std::vector<Edge> e = triangles(2).edges();
    for (Vertex v = 0; v < 6; ++v) e.push_back({v, 6});
    return Graph(7, e);
}

}  // namespace

TEST_CASE("lambda examples") {
    CHECK(lambda_bound(complete_graph(3), default_pairing(complete_graph(3))).lambda == Rational(21, 16));
    LambdaBound e = lambda_bound(empty_graph(4), default_pairing(empty_graph(4)));
    CHECK(e.lambda == Rational(0));
    CHECK(e.cap == 0.0);
    LambdaBound k4 = lambda_bound(complete_graph(4), default_pairing(complete_graph(4)));
    CHECK(k4.lambda == Rational(27, 8));
    CHECK(k4.lambda_refined < k4.lambda);
    CHECK_THROWS_AS(lambda_bound(complete_graph(4), Pairing{{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(lambda_bound(complete_graph(4), Pairing{{0, 1}, {1, 2}}), std::invalid_argument);
}

TEST_CASE("paired random bisection") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        Graph g = gnm(20, 40, seed);
        Bipartition p = paired_random_bisection(g, seed);
        CHECK(p.count(Side::one) == 10);
        CHECK(p == paired_random_bisection(g, seed));
        // matched pairs are never internal
        for (auto [a, b] : default_pairing(g))
            if (g.adjacent(a, b)) CHECK(p[a] != p[b]);
    }
    Bipartition odd = paired_random_bisection(path(5), 3);
    CHECK(odd.count(Side::one) == 3);
}

TEST_CASE("paired scheme mean stays below m/4") {
    Graph g = gnm(30, 90, 4);
    Pairing pairing = default_pairing(g);
    const int trials = 10000;
    double sum = 0, sumsq = 0;
    for (int t = 0; t < trials; ++t) {
        Rng rng(99, static_cast<std::uint64_t>(t));
        double y = cut_stats(g, paired_random_bisection(g, pairing, rng)).inside1;
        sum += y;
        sumsq += y * y;
    }
    double mean = sum / trials;
    double sd = std::sqrt(std::max(0.0, sumsq / trials - mean * mean));
    CHECK(mean <= g.size() / 4.0 + 3 * sd / std::sqrt(trials));
    // variance never exceeds lambda
    CHECK(sd * sd <= to_double(lambda_bound(g, pairing).lambda));
}

TEST_CASE("variance scheme examples") {
    VarianceResult e = judicious_bisection_variance(empty_graph(6));
    CHECK(e.accepted);
    CHECK(e.report.satisfied);

    VarianceResult k = judicious_bisection_variance(complete_graph(4));
    CHECK(k.trials_used == 1);
    CHECK(k.report.achieved == 1);
    CHECK(k.report.bound_value == doctest::Approx(1.5 + std::sqrt(27.0 / 4)));

    // dense: m >= eps^-2 n with eps = 1/4
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        Graph g = gnm(60, 1000, seed);
        VarianceResult r = judicious_bisection_variance(g, seed);
        CutStats st = cut_stats(g, r.part);
        CHECK(is_bisection(g, r.part));
        CHECK(r.report.satisfied);
        CHECK(st.max_inside() <= (0.25 + 0.25) * g.size());
    }
    CHECK_THROWS_AS(judicious_bisection_variance(complete_graph(4), 1, 0), std::invalid_argument);
}

TEST_CASE("variance scheme sparse fallback and determinism") {
    Graph g = disjoint_union(triangles(2), empty_graph(30));
    VarianceResult r = judicious_bisection_variance(g, 5);
    CHECK(r.sparse_fallback);
    CHECK(is_bisection(g, r.part));
    CHECK(r.report.satisfied);
    Graph h = gnm(40, 100, 2);
    VarianceResult a = judicious_bisection_variance(h, 7, 64, Execution::serial);
    VarianceResult b = judicious_bisection_variance(h, 7, 64, Execution::parallel);
    CHECK(a.part == b.part);
    CHECK(a.trials_used == b.trials_used);
}

TEST_CASE("star decomposition examples") {
    StarSystem pm = star_decomposition(perfect_matching_graph(8), {}, Rational(1), Rational(1, 10));
    CHECK(pm.stars.size() == 4);
    CHECK(pm.residual.empty());
    for (const Star& s : pm.stars) CHECK(s.members.size() == 2);

    StarSystem t = star_decomposition(triangles(2), {}, Rational(1), Rational(1, 10));
    CHECK(t.stars.size() == 2);
    CHECK(t.residual.size() == 2);
    CHECK(t.nonfree == 2);

    StarSystem s = star_decomposition(star(6), {}, Rational(1), Rational(1, 10));
    REQUIRE(s.stars.size() == 1);
    CHECK(s.stars[0].apex == 0);
    CHECK(s.stars[0].members.size() == 6);
    CHECK(s.residual.empty());

    // C/eps <= 5 pushes the leaves into T
    StarSystem heavy = star_decomposition(complete_bipartite(2, 6), {}, Rational(1), Rational(1, 2));
    CHECK(heavy.heavy == 4);
    CHECK(heavy.residual.size() == 4);

    CHECK_THROWS_AS(star_decomposition(star(6), {}, Rational(1), Rational(1, 10), true), PreconditionError);
}

TEST_CASE("star systems are induced stars partitioning the vertices") {
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
        Graph g = gnm(40, 30 + static_cast<long long>(seed % 40), seed);
        Rational eps(1, 10);
        Rational C = default_density(g);
        StarSystem sys = star_decomposition(g, {}, C, eps);
        std::vector<int> seen(40, 0);
        for (const Star& s : sys.stars) {
            REQUIRE(std::binary_search(s.members.begin(), s.members.end(), s.apex));
            for (Vertex u : s.members) {
                ++seen[u];
                if (u != s.apex) CHECK(g.adjacent(u, s.apex));
                for (Vertex w : s.members)
                    if (u != s.apex && w != s.apex) CHECK_FALSE(g.adjacent(u, w));
            }
        }
        for (Vertex w : sys.residual) ++seen[w];
        for (int c : seen) CHECK(c == 1);
        int tau = count_tight_definitional(g);
        CHECK(Rational(static_cast<long long>(sys.residual.size())) <= Rational(tau) + Rational(2) * eps * Rational(40));
        CHECK(sys.nonfree == tau);
    }
}

TEST_CASE("star scheme on 100 triangles") {
    Graph g = triangles(100);
    JudiciousResult r = judicious_tight_bisection(g, lenient(Rational(1, 50), 1));
    CHECK(r.detail.cap1 == Rational(56));
    CHECK(r.detail.tau == 100);
    CHECK_FALSE(r.detail.degree_hypothesis);
    CHECK(is_bisection(g, r.part));
    CutStats st = cut_stats(g, r.part);
    CHECK(st.inside1 == r.detail.achieved1);
    CHECK(st.inside2 == r.detail.achieved2);
    if (r.detail.accepted) {
        CHECK(r.report.satisfied);
        CHECK(r.detail.moved == 0);
    }
    CHECK(r.detail.budget_ledger.expectation_used <= r.detail.budget_ledger.expectation_budget);
    Json j = to_json(r.detail);
    for (const char* key : {"eps", "C", "gamma", "tau", "cap1", "cap2", "achieved1", "achieved2", "trials_used",
                            "budget_ledger"})
        CHECK(j.contains(key));

    StarOptions strict;
    strict.eps = Rational(1, 50);
    CHECK_THROWS_AS(judicious_tight_bisection(g, strict), PreconditionError);
}

TEST_CASE("star scheme on perfect matchings and empty graphs") {
    Graph pm = perfect_matching_graph(40);
    JudiciousResult r = judicious_tight_bisection(pm, lenient(Rational(1, 10)));
    CHECK(r.detail.achieved1 == 0);
    CHECK(r.detail.achieved2 == 0);
    CHECK(r.report.satisfied);
    CHECK_FALSE(r.detail.vacuous);

    JudiciousResult e = judicious_tight_bisection(empty_graph(16), lenient(Rational(1, 20)));
    // isolated vertices are tight components, so tau = n and the cap is eps n
    CHECK(e.detail.tau == 16);
    CHECK(e.detail.cap1 == Rational(4, 5));
    CHECK(e.report.satisfied);
    CHECK_FALSE(e.detail.vacuous);
}

TEST_CASE("accepted trials meet the final caps after rebalancing") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        Graph g = random_bounded(300, 3, 350, seed);
        JudiciousResult r = judicious_tight_bisection(g, lenient(Rational(1, 5), seed));
        REQUIRE(is_bisection(g, r.part));
        CutStats st = cut_stats(g, r.part);
        CHECK(st.inside1 == r.detail.achieved1);
        if (r.detail.accepted) {
            CHECK(r.report.satisfied);
            CHECK(r.detail.budget_ledger.rebalance_used <= r.detail.budget_ledger.rebalance_budget);
        }
    }
}

TEST_CASE("acceptance frequency on a compliant input") {
    // eps = 1/2, C = 1: gamma n >= 2 once n >= 32768
    Graph g = random_bounded(40000, 2, 30000, 17);
    StarOptions o;
    o.eps = Rational(1, 2);
    o.C = Rational(1);
    JudiciousResult r = judicious_tight_bisection(g, o);
    CHECK(r.detail.degree_hypothesis);
    CHECK(r.report.satisfied);
    StarTrialSample s = sample_star_trials(g, o, 1000);
    CHECK(s.accepted * 4 > s.trials);
}

TEST_CASE("prepartitioned scheme") {
    Graph s = star(8);
    std::vector<Vertex> a1{0}, none;
    JudiciousResult r = judicious_with_prepartition(s, a1, none, lenient(Rational(1, 20)));
    CHECK(r.part[0] == Side::one);
    CHECK(is_bisection(s, r.part));
    CHECK(r.detail.tau == 7);
    CHECK(r.detail.cap1 == Rational(7, 2) - Rational(1, 8) + Rational(2, 5));
    CHECK(r.report.satisfied);

    Graph d = two_triangles_dominated();
    std::vector<Vertex> top{6};
    JudiciousResult q = judicious_with_prepartition(d, top, none, lenient(Rational(1, 10), 3));
    CHECK(q.part[6] == Side::one);
    // e(A1) = 0, e(A1, rest) = 6, e(rest) = 6, tau = 2
    CHECK(q.detail.cap1 == Rational(3) + Rational(6, 4) - Rational(5, 8) + Rational(7, 10));
    CHECK(q.detail.cap2 == Rational(6, 4) - Rational(5, 8) + Rational(7, 10));
    CutStats st = cut_stats(d, q.part);
    CHECK(st.inside1 == q.detail.achieved1);

    JudiciousResult plain = judicious_with_prepartition(triangles(3), none, none, lenient(Rational(1, 10), 4));
    JudiciousResult direct = judicious_tight_bisection(triangles(3), lenient(Rational(1, 10), 4));
    CHECK(plain.part == direct.part);
    CHECK_THROWS_AS(judicious_with_prepartition(s, a1, a1, lenient(Rational(1, 10))), std::invalid_argument);
}

TEST_CASE("star scheme determinism") {
    Graph g = random_bounded(500, 4, 700, 3);
    StarOptions a = lenient(Rational(1, 10), 11);
    StarOptions b = a;
    a.ex = Execution::serial;
    JudiciousResult x = judicious_tight_bisection(g, a);
    JudiciousResult y = judicious_tight_bisection(g, b);
    CHECK(x.part == y.part);
    CHECK(x.report.params.dump() == y.report.params.dump());
}
