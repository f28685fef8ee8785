#include <numeric>

#include "bisect/enumerate.hpp"
#include "bisect/generators.hpp"
#include "bisect/rng.hpp"
#include "doctest.h"

using namespace bisect;

namespace {

Graph relabel(const Graph& g, Rng& rng) {
    std::vector<Vertex> p(static_cast<std::size_t>(g.order()));
    std::iota(p.begin(), p.end(), 0);
    rng.shuffle(p.begin(), p.end());
    std::vector<Edge> es;
    for (const Edge& e : g.edges()) es.push_back({std::min(p[e.u], p[e.v]), std::max(p[e.u], p[e.v])});
    return Graph(g.order(), es);
}

}  // namespace

TEST_CASE("graph counts up to isomorphism") {
    // OEIS A000088 and A001349
    const long long all[] = {1, 2, 4, 11, 34, 156, 1044, 12346};
    const long long connected[] = {1, 1, 2, 6, 21, 112, 853, 11117};
    for (int n = 1; n <= 8; ++n) {
        CHECK(nonisomorphic_graphs(n).size() == static_cast<std::size_t>(all[n - 1]));
        CHECK(nonisomorphic_graphs(n, true).size() == static_cast<std::size_t>(connected[n - 1]));
    }
    CHECK_THROWS(nonisomorphic_graphs(10));
}

TEST_CASE("canonical code is a complete invariant on small graphs") {
    Rng rng(11);
    for (const Graph& g : nonisomorphic_graphs(7)) {
        const std::uint64_t c = canonical_code(g);
        CHECK(canonical_code(relabel(g, rng)) == c);
        CHECK(canonical_code(graph_from_code(7, c)) == c);
    }
    CHECK(canonical_code(cycle(6)) != canonical_code(triangles(2)));
    CHECK(canonical_code(petersen()) == canonical_code(relabel(petersen(), rng)));
}

TEST_CASE("serial and parallel enumeration agree") {
    auto a = nonisomorphic_graphs(6, false, Execution::serial);
    auto b = nonisomorphic_graphs(6, false, Execution::parallel);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].edges() == b[i].edges());
}
