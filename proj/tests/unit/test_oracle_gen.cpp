#include "bisect/bounds.hpp"
#include "bisect/generators.hpp"
#include "bisect/oracle.hpp"
#include "doctest.h"

using namespace bisect;

TEST_CASE("max bisection oracle examples") {
    CHECK(brute_max_bisection(triangles(2)).optimum == 4);
    CHECK(brute_max_bisection(star(6)).optimum == 3);
    OracleResult k24 = brute_max_bisection(complete_bipartite(2, 4));
    CHECK(k24.optimum == 6);
    CHECK(cut_stats(complete_bipartite(2, 4), k24.witness).crossing == 6);
    CHECK(k24.instances_enumerated == 20);
}

TEST_CASE("judicious oracle examples") {
    CHECK(brute_judicious_optimum(complete_bipartite(2, 4)).optimum == 2);
    CHECK(brute_judicious_optimum(star(6)).optimum == 2);
    Graph f = family1(2, 1, 1);
    CHECK(f.order() == 6);
    CHECK(f.size() == 9);
    OracleResult r = brute_judicious_optimum(f);
    CHECK(Rational(r.optimum) >= judicious_floor(2, 9));
    CHECK(r.optimum == 2);
    CutStats st = cut_stats(f, r.witness);
    CHECK(std::max(st.inside1, st.inside2) == r.optimum);
}

TEST_CASE("serial and parallel enumeration agree including the witness") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = gnm(16, 30, seed);
        OracleResult a = brute_max_bisection(g, Execution::serial);
        OracleResult b = brute_max_bisection(g, Execution::parallel);
        CHECK(a.optimum == b.optimum);
        CHECK(a.witness == b.witness);
        OracleResult c = brute_judicious_optimum(g, Execution::serial);
        OracleResult d = brute_judicious_optimum(g, Execution::parallel);
        CHECK(c.optimum == d.optimum);
        CHECK(c.witness == d.witness);
        OracleResult e = brute_max_cut(g, Execution::serial);
        OracleResult f = brute_max_cut(g, Execution::parallel);
        CHECK(e.optimum == f.optimum);
        CHECK(e.witness == f.witness);
    }
}

TEST_CASE("oracles refuse large inputs") {
    CHECK_THROWS_AS(brute_max_bisection(empty_graph(21)), OracleTooLarge);
    CHECK_THROWS_AS(brute_judicious_optimum(empty_graph(21)), OracleTooLarge);
    std::vector<Vertex> big(13);
    for (int i = 0; i < 13; ++i) big[i] = i;
    CHECK_THROWS_AS(brute_tight_check(complete_graph(13), big), OracleTooLarge);
}

TEST_CASE("brute tight check examples") {
    std::vector<Vertex> five{0, 1, 2, 3, 4};
    CHECK(brute_tight_check(complete_graph(5), five));
    CHECK_FALSE(brute_tight_check(cycle(5), five));
    CHECK(brute_tight_check(bowtie(), five));
}

TEST_CASE("generator examples") {
    Graph t = generate(parse_generator_spec("triangles:t=2"));
    CHECK(t.order() == 6);
    CHECK(t.size() == 6);
    Graph f1 = generate(parse_generator_spec("family1:delta=2,x=1,y=1"));
    CHECK(f1.order() == 6);
    CHECK(f1.size() == 9);
    Graph f2 = generate(parse_generator_spec("family2:delta=2,n=6"));
    CHECK(f2.size() == 9);
    CHECK(f2.max_degree() == 3);
    CHECK_THROWS_AS(family1(2, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(family2(2, 7), std::invalid_argument);
    CHECK_THROWS_AS(parse_generator_spec("star:n=x"), std::invalid_argument);
    CHECK_THROWS_AS(generate(parse_generator_spec("nosuch")), std::invalid_argument);
    CHECK(to_string(parse_generator_spec("family1:y=3,delta=2,x=4")) == "family1:delta=2,x=4,y=3");
}

TEST_CASE("random generators satisfy their contracts") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        Graph g = random_min_degree(200, 300, 2, seed, 1 + static_cast<int>(seed % 5));
        CHECK(g.min_degree() >= 2);
        CHECK(g.size() == 300);
        Graph h = random_min_degree(60, 150, 4, seed);
        CHECK(h.min_degree() >= 4);
        Graph r = random_regular(20, 3, seed);
        CHECK(r.min_degree() == 3);
        CHECK(r.max_degree() == 3);
        Graph b = random_bounded(40, 3, 50, seed);
        CHECK(b.max_degree() <= 3);
        Graph ni = random_no_isolated(30, 10, seed);
        CHECK(ni.min_degree() >= 1);
    }
    CHECK(gnm(30, 40, 5).edges() == gnm(30, 40, 5).edges());
}

TEST_CASE("edwards bound") {
    CHECK(edwards_bound(0) == 0);
    CHECK(edwards_bound(6) == 4);
    CHECK(edwards_bound(1) == 1);
    CHECK(edwards_bound(3) == 2);
    for (int n = 3; n <= 8; ++n) {
        Graph k = complete_graph(n);
        CHECK(brute_max_cut(k).optimum == edwards_bound(k.size()));
    }
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        Graph g = gnm(12, 5 + static_cast<long long>(seed), seed);
        CHECK(brute_max_cut(g).optimum >= edwards_bound(g.size()));
    }
    // exact integer check against a large range
    for (long long m = 0; m <= 20000; ++m) {
        long long c = edwards_bound(m);
        auto fits = [m](long long x) {
            long long lhs = 8 * x - 4 * m + 1;
            return lhs >= 0 && lhs * lhs >= 8 * m + 1;
        };
        REQUIRE(fits(c));
        if (c > 0) REQUIRE_FALSE(fits(c - 1));
    }
}

TEST_CASE("judicious floor and analytic bounds") {
    CHECK(judicious_floor(2, 9) == Rational(2));
    AnalyticBounds b = analytic_bounds(complete_graph(4), 0);
    CHECK(b.edwards == 4);
    CHECK(b.tight_bisection == Rational(7, 2));
    CHECK(b.connected);
    CHECK(b.no_isolated);
}

TEST_CASE("family 2 judicious optimum in closed form") {
    // x of the delta+1 small-side vertices on side 1: e(V1) = x(n/2 - x)
    for (int d : {2, 4})
        for (int n = 2 * d + 2; n <= 16; n += 2) {
            const Graph g = family2(d, n);
            long long best = -1;
            for (int x = 0; x <= d + 1; ++x) {
                const int y = d + 1 - x;
                if (x > n / 2 || y > n / 2) continue;
                const long long v = std::max(1LL * x * (n / 2 - x), 1LL * y * (n / 2 - y));
                if (best < 0 || v < best) best = v;
            }
            INFO("delta=" << d << " n=" << n);
            CHECK(brute_judicious_optimum(g).optimum == best);
            // the floor needs the larger small-side share to stay the minimizer
            CHECK((Rational(best) >= judicious_floor(d, g.size())) == (n >= 3 * d + 4));
        }
}
