#include <numeric>

#include "bisect/generators.hpp"
#include "bisect/graph.hpp"
#include "bisect/report.hpp"
#include "doctest.h"

using namespace bisect;

namespace {

Bipartition sides(std::initializer_list<int> labels) {
    Bipartition p;
    for (int l : labels) p.side.push_back(l == 1 ? Side::one : Side::two);
    return p;
}

}  // namespace

TEST_CASE("edge list parses a triangle") {
    Graph g = parse_graph("3 3\n0 1\n1 2\n0 2");
    CHECK(g.order() == 3);
    CHECK(g.size() == 3);
    CHECK(g.degree(0) == 2);
    CHECK(g.adjacent(2, 0));
}

TEST_CASE("self-loop is rejected with its line number") {
    try {
        parse_graph("2 1\n0 0");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("self-loop") != std::string::npos);
    }
}

TEST_CASE("DIMACS input is converted to 0-indexed") {
    Graph g = parse_graph("c a path\np edge 3 2\ne 1 2\ne 2 3\n");
    CHECK(g.order() == 3);
    CHECK(g.size() == 2);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 2));
    CHECK_FALSE(g.adjacent(0, 2));
}

TEST_CASE("parse errors carry line numbers") {
    auto line_of = [](const char* text) {
        try {
            parse_graph(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1;
    };
    CHECK(line_of("3 2\n0 1\n1 0\n") == 3);       // duplicate
    CHECK(line_of("3 1\n0 3\n") == 2);            // out of range
    CHECK(line_of("3 1\n0 x\n") == 2);            // malformed
    CHECK(line_of("3 2\n0 1\n") == 2);            // count mismatch reported at end
    CHECK(line_of("p edge 3 1\ne 1\n") == 2);
    CHECK(line_of("") == 1);
}

TEST_CASE("edge list round trip and hash") {
    Graph g = petersen();
    Graph h = parse_graph(to_edge_list(g));
    CHECK(h.edges() == g.edges());
    CHECK(graph_hash(g) == graph_hash(h));
    CHECK(graph_hash(g).size() == 16);
    CHECK(graph_hash(g) != graph_hash(cycle(10)));
}

TEST_CASE("cut_stats examples") {
    CHECK(cut_stats(complete_graph(3), sides({1, 2, 2})) == CutStats{2, 0, 1, 1, 2});
    CHECK(cut_stats(complete_graph(4), sides({1, 1, 2, 2})) == CutStats{4, 1, 1, 2, 2});
    // star K_{1,5}: centre + 2 leaves vs 3 leaves
    CHECK(cut_stats(star(6), sides({1, 1, 1, 2, 2, 2})) == CutStats{3, 2, 0, 3, 3});
}

TEST_CASE("cut_stats partitions the edge set and is symmetric under swapping sides") {
    Graph g = gnm(10, 20, 3);
    for (unsigned mask = 0; mask < (1U << 10); ++mask) {
        Bipartition p(10);
        for (int v = 0; v < 10; ++v) p[v] = (mask >> v) & 1U ? Side::two : Side::one;
        CutStats a = cut_stats(g, p);
        REQUIRE(a.inside1 + a.inside2 + a.crossing == g.size());
        REQUIRE(a.size1 + a.size2 == 10);
        for (auto& s : p.side) s = opposite(s);
        CutStats b = cut_stats(g, p);
        REQUIRE(b.crossing == a.crossing);
        REQUIRE(b.inside1 == a.inside2);
        REQUIRE(b.size1 == a.size2);
    }
}

TEST_CASE("is_bisection") {
    Graph g6 = empty_graph(6), g7 = empty_graph(7);
    CHECK(is_bisection(g6, sides({1, 1, 1, 2, 2, 2})));
    CHECK(is_bisection(g7, sides({1, 1, 1, 1, 2, 2, 2})));
    CHECK_FALSE(is_bisection(g6, sides({1, 1, 1, 1, 2, 2})));
}

TEST_CASE("rebalance_low_degree") {
    // 8 vertices, sizes (5,3); side 1 has two degree-1 vertices
    Graph g(8, {{0, 5}, {1, 6}, {2, 3}, {2, 4}, {3, 4}, {2, 7}, {3, 7}, {4, 7}});
    Bipartition p = sides({1, 1, 1, 1, 1, 2, 2, 2});
    Bipartition q = rebalance_low_degree(g, p, 1);
    CHECK(q.count(Side::one) == 4);
    CHECK(moved_vertices(p, q) == 1);
    CHECK(rebalance_low_degree(g, q, 1) == q);
    Bipartition big = sides({1, 1, 1, 1, 1, 1, 1, 2});
    CHECK_THROWS_AS(rebalance_low_degree(g, big, 0), InsufficientLowDegree);

    Bipartition two_moves = sides({1, 1, 1, 1, 1, 2, 2, 1});
    Bipartition r = rebalance_low_degree(g, two_moves, 1);
    CHECK(r.count(Side::one) == 4);
    CHECK(r[0] == Side::two);
    CHECK(r[1] == Side::two);

    Bipartition all_high = sides({1, 1, 1, 1, 1, 2, 2, 1});
    CHECK_THROWS_AS(rebalance_low_degree(complete_graph(8), all_high, 3), InsufficientLowDegree);
}

TEST_CASE("rebalance changes crossing by at most cap per move") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        Graph g = gnm(20, 30, seed);
        Bipartition p(20, Side::one);
        for (int v = 14; v < 20; ++v) p[v] = Side::two;
        int cap = g.max_degree();
        Bipartition q = rebalance_low_degree(g, p, cap);
        CHECK(is_bisection(g, q));
        int moved = moved_vertices(p, q);
        int diff = std::abs(cut_stats(g, q).crossing - cut_stats(g, p).crossing);
        CHECK(diff <= cap * moved);
    }
}

TEST_CASE("pinned vertices never move") {
    Graph g = empty_graph(6);
    Bipartition p(6, Side::one);
    bool pinned[6] = {true, true, true, false, false, false};
    Bipartition q = rebalance_low_degree(g, p, 0, pinned);
    CHECK(q[0] == Side::one);
    CHECK(q.count(Side::two) == 3);
}

TEST_CASE("induced subgraph and components") {
    Graph g = disjoint_union(triangles(1), path(3));
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[1] == std::vector<Vertex>{3, 4, 5});
    auto sub = induced_subgraph(g, {5, 0, 1, 4});
    CHECK(sub.graph.order() == 4);
    CHECK(sub.graph.size() == 2);
    CHECK(sub.to_parent == std::vector<Vertex>{0, 1, 4, 5});
    std::vector<Vertex> two{0, 4};
    CHECK_FALSE(is_connected_set(g, two));
}

TEST_CASE("cut stats json keys") {
    Json j = to_json(CutStats{1, 2, 3, 4, 5});
    CHECK(j.dump() == R"({"crossing":1,"inside1":2,"inside2":3,"size1":4,"size2":5})");
}

TEST_CASE("graph invariants") {
    Graph g = gnm(30, 80, 9);
    int sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        sum += g.degree(v);
        for (Vertex u : g.neighbors(v)) CHECK(g.adjacent(u, v));
    }
    CHECK(sum == 2 * g.size());
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), GraphError);
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), GraphError);
}
