#include "bisect/generators.hpp"
#include "bisect/greedy_bisect.hpp"
#include "bisect/oracle.hpp"
#include "bisect/rng.hpp"
#include "bisect/tight.hpp"
#include "doctest.h"

using namespace bisect;

namespace {

PairSequence pairs_of(const Graph& g) {
    Matching m = maximize_free_vertices(g, maximum_matching(g));
    return build_pairs(g, m, compute_free_info(g, m));
}

std::vector<PairKind> kinds(const PairSequence& s) {
    std::vector<PairKind> out;
    for (const auto& p : s.pairs) out.push_back(p.kind);
    return out;
}

}  // namespace

TEST_CASE("pair sequences for the small examples") {
    PairSequence t = pairs_of(triangles(2));
    CHECK(kinds(t) == std::vector<PairKind>{PairKind::edge, PairKind::edge, PairKind::q});
    CHECK(t.s == 2);
    CHECK(t.r_prime == 0);

    PairSequence s = pairs_of(star(6));
    CHECK(kinds(s) == std::vector<PairKind>{PairKind::edge, PairKind::q, PairKind::q});
    CHECK(s.s == 1);
    CHECK(s.r_prime == 0);
    CHECK(s.common_free == std::vector<Vertex>{0});

    PairSequence c = pairs_of(cycle(4));
    CHECK(kinds(c) == std::vector<PairKind>{PairKind::edge, PairKind::edge});
}

TEST_CASE("pair sequence structure") {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        Graph g = gnm(13, 14, seed);
        Matching m = maximize_free_vertices(g, maximum_matching(g));
        FreeInfo fi = compute_free_info(g, m);
        PairSequence seq = build_pairs(g, m, fi);
        std::vector<int> seen(13, 0);
        for (const auto& p : seq.pairs) {
            ++seen[p.a];
            ++seen[p.b];
            if (p.kind == PairKind::edge) CHECK(m.mate[p.a] == p.b);
            if (p.kind == PairKind::p) CHECK(fi.free_neighbors[p.a] != fi.free_neighbors[p.b]);
        }
        if (seq.singleton) ++seen[*seq.singleton];
        for (int c : seen) CHECK(c == 1);
        for (Vertex r : seq.remainder) CHECK(fi.free_neighbors[r] == seq.common_free);
        // unpaired W-vertices are bounded by max(tau, Delta - 1)
        int k = static_cast<int>(seq.remainder.size());
        CHECK(k <= std::max(count_tight_definitional(g), g.max_degree() - 1));
    }
}

TEST_CASE("greedy split examples") {
    Graph k2 = complete_graph(2);
    auto [p, tr] = greedy_split(k2, pairs_of(k2));
    CHECK(cut_stats(k2, p).crossing == 1);
    CHECK(tr.gain_steps == 1);

    Graph t = triangles(2);
    auto [pt, trt] = greedy_split(t, pairs_of(t));
    CHECK(cut_stats(t, pt).crossing >= 4);
    CHECK(is_bisection(t, pt));

    Graph e = empty_graph(4);
    PairSequence seq;
    seq.pairs = {{0, 1, PairKind::q}, {2, 3, PairKind::q}};
    auto [pe, tre] = greedy_split(e, seq);
    CHECK(cut_stats(e, pe).crossing == 0);
    CHECK(tre.gain_steps == 0);
    CHECK(pe[0] == Side::one);
    CHECK(pe[2] == Side::one);
}

TEST_CASE("greedy split ledger") {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        Graph g = gnm(21, 40, seed);
        PairSequence seq = pairs_of(g);
        auto [p, tr] = greedy_split(g, seq);
        CHECK(is_bisection(g, p));
        CHECK(p.count(Side::one) == 11);
        int total = 0, revealed = 0;
        for (std::size_t i = 0; i < tr.increments.size(); ++i) {
            total += tr.increments[i];
            revealed += tr.new_edges[i];
            CHECK(2 * tr.increments[i] >= tr.new_edges[i] + (tr.gain[i] ? 1 : 0));
        }
        CHECK(revealed == g.size());
        CHECK(total == cut_stats(g, p).crossing);
        CHECK(2 * total >= g.size() + tr.gain_steps);
    }
}

TEST_CASE("tight bisection examples") {
    TightBisection t = tight_bisection(triangles(2));
    CHECK(t.report.bound == Rational(4));
    CHECK(t.report.achieved == 4);
    CHECK(t.report.satisfied);

    TightBisection s = tight_bisection(star(6));
    CHECK(s.report.bound == Rational(3));
    CHECK(s.report.achieved == 3);

    TightBisection k = tight_bisection(complete_graph(4));
    CHECK(k.report.bound == Rational(7, 2));
    CHECK(k.report.achieved == 4);
    CHECK(brute_max_bisection(complete_graph(4)).optimum == 4);
}

TEST_CASE("tight bisection meets its bound and the corollaries") {
    Rng pick(3);
    for (int i = 0; i < 300; ++i) {
        int n = 4 + static_cast<int>(pick.below(40));
        long long m = static_cast<long long>(pick.below(static_cast<std::uint64_t>(3 * n))) + 1;
        m = std::min<long long>(m, 1LL * n * (n - 1) / 2);
        Graph g = gnm(n, m, 700 + i);
        TightBisection t = tight_bisection(g);
        REQUIRE(is_bisection(g, t.part));
        REQUIRE(t.report.satisfied);
        Rational crossing(t.report.achieved);
        if (connected_components(g).size() == 1)
            CHECK(crossing >= Rational(m, 2) + Rational(n + 1 - g.max_degree(), 4));
        if (g.min_degree() > 0 && 3 * g.max_degree() <= n + 3)
            CHECK(crossing >= Rational(m, 2) + Rational(n, 6));
    }
}

TEST_CASE("alpha bisection examples") {
    AlphaBisection a0 = alpha_bisection(triangles(2), Rational(0));
    CHECK(is_bisection(triangles(2), a0.part));
    CHECK(a0.report.achieved >= 3);

    AlphaBisection a = alpha_bisection(triangles(2), Rational(1, 6));
    CHECK(a.report.achieved >= 4);
    CHECK(a.report.satisfied);
    CutStats st = cut_stats(triangles(2), a.part);
    CHECK(std::min(st.size1, st.size2) >= 2);

    Graph s = star(8);
    AlphaBisection b = alpha_bisection(s, Rational(1, 6));
    CutStats sb = cut_stats(s, b.part);
    CHECK(b.case_taken == 2);
    CHECK(sb.crossing >= 5);
    CHECK(std::min(sb.size1, sb.size2) >= 3);
    CHECK(b.report.satisfied);

    CHECK_THROWS_AS(alpha_bisection(empty_graph(3), Rational(0)), PreconditionError);
    CHECK_THROWS_AS(alpha_bisection(triangles(1), Rational(1, 5)), PreconditionError);
}

TEST_CASE("alpha bisection contract on random graphs") {
    Rng pick(8);
    for (int i = 0; i < 200; ++i) {
        int n = 2 + static_cast<int>(pick.below(40));
        long long m = static_cast<long long>(pick.below(static_cast<std::uint64_t>(2 * n))) + n / 2;
        m = std::min<long long>(m, 1LL * n * (n - 1) / 2);
        Graph g = random_no_isolated(n, m, 300 + i);
        for (Rational alpha : {Rational(0), Rational(1, 12), Rational(1, 6)}) {
            AlphaBisection a = alpha_bisection(g, alpha);
            CutStats st = cut_stats(g, a.part);
            REQUIRE(std::min(st.size1, st.size2) >= a.min_side_floor);
            REQUIRE(Rational(st.crossing) >= Rational(g.size(), 2) + alpha * Rational(n));
        }
    }
}
