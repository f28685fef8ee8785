#include "bisect/matching.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_set>

namespace bisect {

std::vector<Edge> Matching::pairs() const {
    std::vector<Edge> out;
    for (Vertex v = 0; v < order(); ++v)
        if (mate[v] > v) out.push_back({v, mate[v]});
    return out;
}

std::vector<Vertex> Matching::uncovered() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < order(); ++v)
        if (mate[v] < 0) out.push_back(v);
    return out;
}

int Matching::size() const {
    int c = 0;
    for (Vertex v = 0; v < order(); ++v) c += mate[v] > v;
    return c;
}

void validate_matching(const Graph& g, const Matching& m) {
    if (m.order() != g.order()) throw GraphError("matching has wrong order");
    for (Vertex v = 0; v < g.order(); ++v) {
        Vertex u = m.mate[v];
        if (u < 0) continue;
        if (u >= g.order() || m.mate[u] != v) throw GraphError("matching is not symmetric");
        if (!g.adjacent(u, v)) throw GraphError("matched pair is not an edge");
    }
}

namespace {

// Edmonds' search on an adjacency-list graph (Gabow-style labels with base
// contraction). `match` is shared with the caller and updated in place.
class Blossom {
public:
    Blossom(const std::vector<std::vector<int>>& adj, std::vector<int>& match)
        : adj_(adj), match_(match), n_(static_cast<int>(adj.size())) {}

    bool augment(int root) {
        int v = find_path(root);
        if (v < 0) return false;
        while (v >= 0) {
            int pv = parent_[v];
            int ppv = match_[pv];
            match_[v] = pv;
            match_[pv] = v;
            v = ppv;
        }
        return true;
    }

    void greedy() {
        for (int v = 0; v < n_; ++v) {
            if (match_[v] >= 0) continue;
            for (int u : adj_[v])
                if (match_[u] < 0) {
                    match_[v] = u;
                    match_[u] = v;
                    break;
                }
        }
    }

    void maximize() {
        for (int v = 0; v < n_; ++v)
            if (match_[v] < 0) augment(v);
    }

    // Even vertices of the most recent search.
    const std::vector<char>& even() const { return used_; }

private:
    int lca(int a, int b) {
        std::fill(seen_.begin(), seen_.end(), 0);
        for (;;) {
            a = base_[a];
            seen_[a] = 1;
            if (match_[a] < 0) break;
            a = parent_[match_[a]];
        }
        for (;;) {
            b = base_[b];
            if (seen_[b]) return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = 1;
            in_blossom_[base_[match_[v]]] = 1;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    int find_path(int root) {
        used_.assign(n_, 0);
        parent_.assign(n_, -1);
        base_.resize(n_);
        seen_.assign(n_, 0);
        std::iota(base_.begin(), base_.end(), 0);
        queue_.clear();
        used_[root] = 1;
        queue_.push_back(root);
        for (std::size_t head = 0; head < queue_.size(); ++head) {
            int v = queue_[head];
            for (int to : adj_[v]) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] >= 0 && parent_[match_[to]] >= 0)) {
                    int cur = lca(v, to);
                    in_blossom_.assign(n_, 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n_; ++i)
                        if (in_blossom_[base_[i]]) {
                            base_[i] = cur;
                            if (!used_[i]) {
                                used_[i] = 1;
                                queue_.push_back(i);
                            }
                        }
                } else if (parent_[to] < 0) {
                    parent_[to] = v;
                    if (match_[to] < 0) return to;
                    int next = match_[to];
                    used_[next] = 1;
                    queue_.push_back(next);
                }
            }
        }
        return -1;
    }

    const std::vector<std::vector<int>>& adj_;
    std::vector<int>& match_;
    int n_;
    std::vector<int> parent_, base_, queue_;
    std::vector<char> used_, in_blossom_, seen_;
};

std::vector<std::vector<int>> local_adjacency(const Graph& g, std::span<const Vertex> vertices,
                                              std::vector<int>& local) {
    local.assign(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> adj(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (Vertex u : g.neighbors(vertices[i]))
            if (local[u] >= 0) adj[i].push_back(local[u]);
    return adj;
}

// Bitmask search for small vertex sets. Failed masks are memoized.
class SmallMatcher {
public:
    SmallMatcher(const Graph& g, std::span<const Vertex> vertices) : k_(static_cast<int>(vertices.size())) {
        nb_.assign(static_cast<std::size_t>(k_), 0);
        for (int i = 0; i < k_; ++i)
            for (int j = i + 1; j < k_; ++j)
                if (g.adjacent(vertices[i], vertices[j])) {
                    nb_[i] |= 1U << j;
                    nb_[j] |= 1U << i;
                }
    }

    bool solve(std::uint32_t mask, std::vector<std::pair<int, int>>* out) {
        if (mask == 0) return true;
        if (std::popcount(mask) & 1) return false;
        if (failed_.count(mask)) return false;
        int v = std::countr_zero(mask);
        std::uint32_t rest = mask & ~(1U << v);
        std::uint32_t cand = nb_[v] & rest;
        while (cand) {
            int u = std::countr_zero(cand);
            cand &= cand - 1;
            if (solve(rest & ~(1U << u), out)) {
                if (out) out->emplace_back(v, u);
                return true;
            }
        }
        failed_.insert(mask);
        return false;
    }

    std::uint32_t full() const { return k_ == 32 ? ~0U : ((1U << k_) - 1); }

private:
    int k_;
    std::vector<std::uint32_t> nb_;
    std::unordered_set<std::uint32_t> failed_;
};

constexpr std::size_t kSmallSet = 16;

}  // namespace

Matching maximum_matching(const Graph& g) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) adj[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
    Matching m(g.order());
    Blossom b(adj, m.mate);
    b.greedy();
    b.maximize();
    return m;
}

std::optional<std::vector<Edge>> perfect_matching(const Graph& g, std::span<const Vertex> vertices) {
    if (vertices.size() % 2) return std::nullopt;
    std::vector<Edge> out;
    if (vertices.size() <= kSmallSet) {
        SmallMatcher sm(g, vertices);
        std::vector<std::pair<int, int>> pairs;
        if (!sm.solve(sm.full(), &pairs)) return std::nullopt;
        for (auto [a, b] : pairs) out.push_back({vertices[a], vertices[b]});
    } else {
        std::vector<int> local;
        auto adj = local_adjacency(g, vertices, local);
        std::vector<int> match(vertices.size(), -1);
        Blossom b(adj, match);
        b.greedy();
        b.maximize();
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            if (match[i] < 0) return std::nullopt;
            if (match[i] > static_cast<int>(i)) out.push_back({vertices[i], vertices[match[i]]});
        }
    }
    for (auto& e : out)
        if (e.u > e.v) std::swap(e.u, e.v);
    std::sort(out.begin(), out.end());
    return out;
}

bool has_perfect_matching(const Graph& g, std::span<const Vertex> vertices) {
    if (vertices.size() % 2) return false;
    if (vertices.empty()) return true;
    if (vertices.size() <= kSmallSet) {
        SmallMatcher sm(g, vertices);
        return sm.solve(sm.full(), nullptr);
    }
    return perfect_matching(g, vertices).has_value();
}

bool is_factor_critical(const Graph& g, std::span<const Vertex> vertices) {
    if (vertices.size() % 2 == 0) return false;
    if (vertices.size() == 1) return true;
    std::vector<int> local;
    auto adj = local_adjacency(g, vertices, local);
    std::vector<int> match(vertices.size(), -1);
    Blossom b(adj, match);
    b.greedy();
    b.maximize();
    int root = -1;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (match[i] < 0) {
            if (root >= 0) return false;
            root = static_cast<int>(i);
        }
    if (b.augment(root)) return false;  // cannot happen after maximize
    const auto& even = b.even();
    return std::all_of(even.begin(), even.end(), [](char c) { return c != 0; });
}

int FreeInfo::free_count() const {
    int c = 0;
    for (Vertex w : uncovered) c += free_flag[w];
    return c;
}

FreeInfo compute_free_info(const Graph& g, const Matching& m) {
    FreeInfo info;
    info.uncovered = m.uncovered();
    info.free_neighbors.assign(static_cast<std::size_t>(g.order()), {});
    info.free_flag.assign(static_cast<std::size_t>(g.order()), false);
    for (Vertex w : info.uncovered) {
        auto& list = info.free_neighbors[w];
        for (Vertex v : g.neighbors(w))
            if (m.covered(v) && !g.adjacent(w, m.mate[v])) list.push_back(v);
        info.free_flag[w] = !list.empty();
    }
    return info;
}

int count_nonfree(const Graph&, const Matching&, const FreeInfo& info) {
    int c = 0;
    for (Vertex w : info.uncovered) c += !info.free_flag[w];
    return c;
}

namespace {

enum class Growth { improved, certified, stuck };

struct GrowResult {
    Growth kind;
    Matching next;
};

// Replaces the matching inside `region` by `inner` plus the listed extra edges.
Matching rematch(const Matching& m, std::span<const Vertex> region, const std::vector<Edge>& inner,
                 std::initializer_list<Edge> extra) {
    Matching out = m;
    for (Vertex v : region) out.mate[v] = -1;
    for (const auto& e : inner) {
        out.mate[e.u] = e.v;
        out.mate[e.v] = e.u;
    }
    for (const auto& e : extra) {
        out.mate[e.u] = e.v;
        out.mate[e.v] = e.u;
    }
    return out;
}

GrowResult grow(const Graph& g, const Matching& m, Vertex w, int base_free) {
    const int n = g.order();
    std::vector<char> in_t(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> t{w};
    in_t[w] = 1;

    auto accept = [&](Matching cand) -> GrowResult {
        if (compute_free_info(g, cand).free_count() > base_free) return {Growth::improved, std::move(cand)};
        return {Growth::stuck, m};
    };

    for (;;) {
        Vertex v1 = -1;
        for (Vertex x : t)
            for (Vertex y : g.neighbors(x))
                if (!in_t[y]) {
                    if (!m.covered(y)) throw NotMaximum("uncovered vertex adjacent to a tight set");
                    if (v1 < 0 || y < v1) v1 = y;
                }
        if (v1 < 0) return {Growth::certified, m};

        const Vertex v2 = m.mate[v1];
        bool t1 = false, t2 = false;
        for (Vertex y : g.neighbors(v1)) t1 |= in_t[y] != 0;
        for (Vertex y : g.neighbors(v2)) t2 |= in_t[y] != 0;
        auto outside_w = [&](Vertex x) {
            for (Vertex y : g.neighbors(x))
                if (!m.covered(y) && !in_t[y]) return true;
            return false;
        };
        if ((t1 && outside_w(v2)) || (t2 && outside_w(v1)))
            throw NotMaximum("augmenting path through a tight set");

        // exchange: some T-vertex sees exactly one of v1, v2
        Vertex pick = -1;
        for (Vertex x : t)
            if (g.adjacent(x, v1) != g.adjacent(x, v2) && (pick < 0 || x < pick)) pick = x;
        if (pick >= 0) {
            Vertex near = g.adjacent(pick, v1) ? v1 : v2;
            std::vector<Vertex> rest;
            for (Vertex x : t)
                if (x != pick) rest.push_back(x);
            auto pm = perfect_matching(g, rest);
            if (!pm) return {Growth::stuck, m};
            std::vector<Vertex> region = t;
            region.push_back(v1);
            region.push_back(v2);
            return accept(rematch(m, region, *pm, {Edge{near, pick}}));
        }

        // closure: T + {v1, v2} must stay tight, otherwise a violating
        // matching frees the excluded vertex
        std::vector<Vertex> t2set = t;
        t2set.push_back(v1);
        t2set.push_back(v2);
        std::sort(t2set.begin(), t2set.end());
        std::vector<char> in_t2 = in_t;
        in_t2[v1] = in_t2[v2] = 1;
        std::vector<Edge> inner;
        for (Vertex a : t2set)
            for (Vertex b : g.neighbors(a))
                if (b > a && in_t2[b]) inner.push_back({a, b});
        for (Vertex u : t2set) {
            std::vector<Vertex> without;
            for (Vertex x : t2set)
                if (x != u) without.push_back(x);
            if (!has_perfect_matching(g, without)) return {Growth::stuck, m};
            for (const auto& e : inner) {
                if (e.u == u || e.v == u) continue;
                if (g.adjacent(u, e.u) == g.adjacent(u, e.v)) continue;
                std::vector<Vertex> sub;
                for (Vertex x : without)
                    if (x != e.u && x != e.v) sub.push_back(x);
                auto pm = perfect_matching(g, sub);
                if (pm) return accept(rematch(m, t2set, *pm, {e}));
            }
        }
        t = std::move(t2set);
        in_t = std::move(in_t2);
    }
}

}  // namespace

Matching maximize_free_vertices(const Graph& g, Matching m, FreeSearchStats* stats) {
    const int n = g.order();
    const long long cap = static_cast<long long>(n) * n;
    FreeSearchStats local;
    for (long long iter = 0; iter <= cap; ++iter) {
        FreeInfo info = compute_free_info(g, m);
        const int base = info.free_count();
        bool improved = false;
        local.certified = local.stuck = 0;
        for (Vertex w : info.uncovered) {
            if (info.free_flag[w]) continue;
            GrowResult r = grow(g, m, w, base);
            if (r.kind == Growth::improved) {
                if (iter == cap) break;
                m = std::move(r.next);
                ++local.improvements;
                improved = true;
                break;
            }
            if (r.kind == Growth::certified)
                ++local.certified;
            else
                ++local.stuck;
        }
        if (!improved) break;
    }
    if (stats) *stats = local;
    return m;
}

}  // namespace bisect
