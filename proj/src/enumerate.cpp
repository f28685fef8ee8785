#include "bisect/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace bisect {

namespace {

using Mask = std::uint16_t;

struct Canon {
    int n;
    Mask adj[11];
    std::uint64_t best = 0;
    bool any = false;

    // equitable refinement; cells split in order of their neighbour counts
    static void refine(const Mask* adj, std::vector<Mask>& cells) {
        for (std::size_t s = 0; s < cells.size(); ++s) {
            const Mask splitter = cells[s];
            std::vector<Mask> next;
            next.reserve(cells.size() + 4);
            bool split = false;
            for (Mask c : cells) {
                if (std::popcount(c) == 1) {
                    next.push_back(c);
                    continue;
                }
                Mask bucket[12] = {};
                for (Mask rest = c; rest; rest &= rest - 1) {
                    const int v = std::countr_zero(rest);
                    bucket[std::popcount(static_cast<Mask>(adj[v] & splitter))] |= static_cast<Mask>(1u << v);
                }
                int parts = 0;
                for (Mask b : bucket)
                    if (b) {
                        next.push_back(b);
                        ++parts;
                    }
                split |= parts > 1;
            }
            cells.swap(next);
            if (split) s = static_cast<std::size_t>(-1);  // restart with the finer partition
        }
    }

    std::uint64_t code_of(const std::vector<Mask>& cells) const {
        int ord[11];
        for (int i = 0; i < n; ++i) ord[i] = std::countr_zero(cells[i]);
        std::uint64_t code = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) code = (code << 1) | ((adj[ord[i]] >> ord[j]) & 1u);
        return code;
    }

    void search(std::vector<Mask> cells) {
        refine(adj, cells);
        std::size_t k = 0;
        while (k < cells.size() && std::popcount(cells[k]) == 1) ++k;
        if (k == cells.size()) {
            const std::uint64_t c = code_of(cells);
            if (!any || c > best) best = c;
            any = true;
            return;
        }
        for (Mask rest = cells[k]; rest; rest &= rest - 1) {
            const Mask v = static_cast<Mask>(rest & -rest);
            std::vector<Mask> child(cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(k));
            child.push_back(v);
            child.push_back(static_cast<Mask>(cells[k] & ~v));
            child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(k) + 1, cells.end());
            search(std::move(child));
        }
    }
};

std::uint64_t canonical_from_masks(int n, const Mask* adj) {
    if (n <= 1) return 0;
    Canon c;
    c.n = n;
    std::copy(adj, adj + n, c.adj);
    c.search({static_cast<Mask>((1u << n) - 1)});
    return c.best;
}

bool connected_masks(int n, const Mask* adj) {
    if (n == 0) return false;
    Mask seen = 1, frontier = 1;
    while (frontier) {
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == static_cast<Mask>((1u << n) - 1);
}

void decode(int n, std::uint64_t code, Mask* adj) {
    std::fill(adj, adj + n, Mask{0});
    int bit = n * (n - 1) / 2;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((code >> --bit) & 1u) {
                adj[i] |= static_cast<Mask>(1u << j);
                adj[j] |= static_cast<Mask>(1u << i);
            }
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
    const int n = g.order();
    if (n > 11) throw std::invalid_argument("canonical_code supports n <= 11");
    Mask adj[11] = {};
    for (const Edge& e : g.edges()) {
        adj[e.u] |= static_cast<Mask>(1u << e.v);
        adj[e.v] |= static_cast<Mask>(1u << e.u);
    }
    return canonical_from_masks(n, adj);
}

Graph graph_from_code(int n, std::uint64_t code) {
    Mask adj[11];
    decode(n, code, adj);
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((adj[i] >> j) & 1u) es.push_back({i, j});
    return Graph(n, es);
}

std::vector<Graph> nonisomorphic_graphs(int n, bool connected_only, Execution ex) {
    if (n < 1 || n > kEnumerateLimit) throw std::invalid_argument("nonisomorphic_graphs supports 1 <= n <= 9");
    std::vector<std::uint64_t> level{0};  // the single graph on one vertex
    for (int k = 2; k <= n; ++k) {
        const long long subsets = 1LL << (k - 1);
        std::vector<std::uint64_t> next(level.size() * static_cast<std::size_t>(subsets));
        auto extend = [&](long long i) {
            Mask adj[11];
            decode(k - 1, level[i], adj);
            adj[k - 1] = 0;
            for (long long s = 0; s < subsets; ++s) {
                Mask a[11];
                std::copy(adj, adj + k, a);
                a[k - 1] = static_cast<Mask>(s);
                for (int v = 0; v < k - 1; ++v)
                    if ((s >> v) & 1) a[v] |= static_cast<Mask>(1u << (k - 1));
                next[static_cast<std::size_t>(i * subsets + s)] = canonical_from_masks(k, a);
            }
        };
        if (ex == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
            for (long long i = 0; i < static_cast<long long>(level.size()); ++i) extend(i);
        } else {
            for (long long i = 0; i < static_cast<long long>(level.size()); ++i) extend(i);
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        level.swap(next);
    }
    std::vector<Graph> out;
    for (std::uint64_t code : level) {
        Mask adj[11];
        decode(n, code, adj);
        if (connected_only && !connected_masks(n, adj)) continue;
        out.push_back(graph_from_code(n, code));
    }
    return out;
}

}  // namespace bisect
