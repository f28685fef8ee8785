#include "bisect/tight.hpp"

#include <algorithm>

#include "bisect/matching.hpp"

namespace bisect {

TightDisagreement::TightDisagreement(int m, int d)
    : std::logic_error("tight component count mismatch: matching gives " + std::to_string(m) +
                       ", definition gives " + std::to_string(d)),
      by_matching(m),
      by_definition(d) {}

bool is_tight_component(const Graph& g, std::span<const Vertex> component) {
    if (!is_connected_set(g, component)) throw GraphError("component is not connected");
    const std::size_t k = component.size();
    if (k == 1) return true;
    if (k % 2 == 0) return false;

    std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : component) in[v] = 1;
    // deleting v leaves a perfect matching whose edges see v 0 or 2 times,
    // so every internal degree is even
    for (Vertex v : component) {
        int d = 0;
        for (Vertex u : g.neighbors(v)) d += in[u];
        if (d % 2) return false;
    }
    if (!is_factor_critical(g, component)) return false;

    std::vector<Edge> inner;
    for (Vertex a : component)
        for (Vertex b : g.neighbors(a))
            if (b > a && in[b]) inner.push_back({a, b});
    std::vector<Vertex> sub;
    sub.reserve(k);
    for (Vertex v : component)
        for (const auto& e : inner) {
            if (e.u == v || e.v == v) continue;
            if (g.adjacent(v, e.u) == g.adjacent(v, e.v)) continue;
            sub.clear();
            for (Vertex x : component)
                if (x != v && x != e.u && x != e.v) sub.push_back(x);
            if (has_perfect_matching(g, sub)) return false;
        }
    return true;
}

int count_tight_definitional(const Graph& g) {
    int tau = 0;
    for (const auto& comp : connected_components(g)) tau += is_tight_component(g, comp);
    return tau;
}

int count_tight_by_matching(const Graph& g) {
    Matching m = maximize_free_vertices(g, maximum_matching(g));
    return count_nonfree(g, m, compute_free_info(g, m));
}

TightReport count_tight_components(const Graph& g) {
    TightReport rep;
    for (auto& comp : connected_components(g)) {
        bool t = is_tight_component(g, comp);
        rep.tau += t;
        rep.components.push_back({std::move(comp), t});
    }
    int by_matching = count_tight_by_matching(g);
    if (by_matching != rep.tau) throw TightDisagreement(by_matching, rep.tau);
    return rep;
}

DegreeSequence degree_sequence(const Graph& g) {
    DegreeSequence seq;
    for (Vertex v = 0; v < g.order(); ++v) ++seq[g.degree(v)];
    return seq;
}

Rational tau_upper_by_degrees(const DegreeSequence& seq) {
    Rational total(0);
    for (const auto& [deg, count] : seq)
        if (deg % 2 == 0) total += Rational(count, deg + 1);
    return total;
}

Rational tau_upper_by_rho(long long nprime, long long rho, long long delta, long long alpha) {
    if (alpha >= delta + 1) throw std::invalid_argument("alpha must be below delta + 1");
    return Rational(nprime + rho, delta - alpha + 1);
}

namespace {

struct BlockWalk {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<Edge> stack;
    int clock = 0;
    bool ok = true;

    explicit BlockWalk(const Graph& graph)
        : g(graph), disc(static_cast<std::size_t>(graph.order()), -1), low(static_cast<std::size_t>(graph.order()), 0) {}

    // pops one block and checks it is an odd clique
    void close_block(Edge top) {
        std::vector<Vertex> verts;
        long long edges = 0;
        for (;;) {
            const Edge e = stack.back();
            stack.pop_back();
            ++edges;
            verts.push_back(e.u);
            verts.push_back(e.v);
            if (e == top) break;
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        const long long s = static_cast<long long>(verts.size());
        if (s % 2 == 0 || edges != s * (s - 1) / 2) ok = false;
    }

    void visit(Vertex v, Vertex parent) {
        disc[v] = low[v] = clock++;
        for (Vertex u : g.neighbors(v)) {
            if (u == parent) continue;
            if (disc[u] < 0) {
                stack.push_back({v, u});
                visit(u, v);
                low[v] = std::min(low[v], low[u]);
                if (low[u] >= disc[v]) close_block({v, u});
            } else if (disc[u] < disc[v]) {
                stack.push_back({v, u});
                low[v] = std::min(low[v], disc[u]);
            }
        }
    }
};

}  // namespace

bool odd_clique_tree(const Graph& g) {
    if (g.order() == 0) return false;
    if (connected_components(g).size() != 1) return false;
    BlockWalk w(g);
    w.visit(0, -1);
    return w.ok;
}

TightCensus tight_census(int k, Execution ex) {
    if (k < 1 || k > 7) throw std::invalid_argument("tight census supports 1 <= k <= 7");
    std::vector<Edge> slots;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) slots.push_back({u, v});
    const long long total = 1LL << slots.size();
    std::vector<Vertex> all(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) all[i] = i;

    constexpr long long kChunk = 4096;
    const long long chunks = (total + kChunk - 1) / kChunk;
    std::vector<TightCensus> part(static_cast<std::size_t>(chunks));
    auto run = [&](long long c) {
        TightCensus& t = part[c];
        for (long long mask = c * kChunk; mask < std::min(total, (c + 1) * kChunk); ++mask) {
            std::vector<Edge> es;
            for (std::size_t i = 0; i < slots.size(); ++i)
                if ((mask >> i) & 1) es.push_back(slots[i]);
            Graph g(k, es);
            if (connected_components(g).size() != 1) continue;
            ++t.connected;
            const bool tight = is_tight_component(g, all);
            const bool built = odd_clique_tree(g);
            t.tight += tight;
            t.clique_built += built;
            if (tight && !built) {
                ++t.tight_not_built;
                if (t.examples.size() < 5) t.examples.push_back(g);
            }
            if (built && !tight) ++t.built_not_tight;
        }
    };
    if (ex == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (long long c = 0; c < chunks; ++c) run(c);
    } else {
        for (long long c = 0; c < chunks; ++c) run(c);
    }
    TightCensus out;
    out.k = k;
    for (const auto& t : part) {
        out.connected += t.connected;
        out.tight += t.tight;
        out.clique_built += t.clique_built;
        out.tight_not_built += t.tight_not_built;
        out.built_not_tight += t.built_not_tight;
        for (const Graph& g : t.examples)
            if (out.examples.size() < 5) out.examples.push_back(g);
    }
    return out;
}

}  // namespace bisect
