#include "bisect/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <numeric>
#include <queue>
#include <sstream>

namespace bisect {

ParseError::ParseError(int line, const std::string& what)
    : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw GraphError("negative vertex count");
    for (auto& e : edges_) {
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
            throw GraphError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                             "} out of range for n=" + std::to_string(n));
        if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw GraphError("duplicate edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "}");

    adj_.assign(static_cast<std::size_t>(n), {});
    for (const auto& e : edges_) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
    if (n <= 64) {
        mask_.assign(static_cast<std::size_t>(n), 0);
        for (const auto& e : edges_) {
            mask_[e.u] |= std::uint64_t{1} << e.v;
            mask_[e.v] |= std::uint64_t{1} << e.u;
        }
    }
}

bool Graph::adjacent(Vertex a, Vertex b) const {
    if (!mask_.empty()) return (mask_[a] >> b) & 1U;
    const auto& list = adj_[a];
    return std::binary_search(list.begin(), list.end(), b);
}

int Graph::max_degree() const {
    int best = 0;
    for (const auto& list : adj_) best = std::max(best, static_cast<int>(list.size()));
    return best;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int best = n_;
    for (const auto& list : adj_) best = std::min(best, static_cast<int>(list.size()));
    return best;
}

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

long long to_int(std::string_view tok, int line) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line, "expected integer, got '" + std::string(tok) + "'");
    return value;
}

struct Builder {
    long long n = -1;
    long long m = -1;
    std::vector<Edge> edges;
    std::vector<std::pair<Edge, int>> seen;  // normalized edge -> line

    void add(long long u, long long v, int line) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError(line, "vertex index out of range");
        if (u == v) throw ParseError(line, "self-loop");
        Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
        seen.emplace_back(e, line);
        edges.push_back(e);
    }

    Graph finish(int last_line) {
        if (n < 0) throw ParseError(last_line, "missing header");
        if (static_cast<long long>(edges.size()) != m)
            throw ParseError(last_line, "header declares " + std::to_string(m) + " edges, found " +
                                            std::to_string(edges.size()));
        std::stable_sort(seen.begin(), seen.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t i = 1; i < seen.size(); ++i)
            if (seen[i].first == seen[i - 1].first)
                throw ParseError(std::max(seen[i].second, seen[i - 1].second), "duplicate edge");
        return Graph(static_cast<int>(n), std::move(edges));
    }
};

}  // namespace

Graph parse_graph(std::string_view text) {
    Builder b;
    bool dimacs = false;
    bool header_seen = false;
    int line_no = 0;
    int last_content = 1;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        auto tok = tokens(line);
        if (tok.empty()) {
            if (end == text.size()) break;
            continue;
        }
        if (tok[0] == "c" || tok[0][0] == '#') continue;
        last_content = line_no;
        if (!header_seen) {
            header_seen = true;
            if (tok[0] == "p") {
                dimacs = true;
                if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col"))
                    throw ParseError(line_no, "malformed DIMACS header");
                b.n = to_int(tok[2], line_no);
                b.m = to_int(tok[3], line_no);
            } else {
                if (tok.size() != 2) throw ParseError(line_no, "malformed header, expected 'n m'");
                b.n = to_int(tok[0], line_no);
                b.m = to_int(tok[1], line_no);
            }
            if (b.n < 0 || b.m < 0) throw ParseError(line_no, "negative header value");
        } else if (dimacs) {
            if (tok[0] != "e" || tok.size() != 3) throw ParseError(line_no, "malformed DIMACS edge line");
            b.add(to_int(tok[1], line_no) - 1, to_int(tok[2], line_no) - 1, line_no);
        } else {
            if (tok.size() != 2) throw ParseError(line_no, "malformed edge line, expected 'u v'");
            b.add(to_int(tok[0], line_no), to_int(tok[1], line_no), line_no);
        }
        if (end == text.size()) break;
    }
    return b.finish(last_content);
}

std::string to_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (const auto& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

std::string graph_hash(const Graph& g) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : to_edge_list(g)) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

int Bipartition::count(Side s) const {
    return static_cast<int>(std::count(side.begin(), side.end(), s));
}

CutStats cut_stats(const Graph& g, const Bipartition& part) {
    CutStats st;
    for (const auto& e : g.edges()) {
        Side a = part[e.u], b = part[e.v];
        if (a != b)
            ++st.crossing;
        else if (a == Side::one)
            ++st.inside1;
        else
            ++st.inside2;
    }
    st.size1 = part.count(Side::one);
    st.size2 = part.order() - st.size1;
    return st;
}

bool is_bisection(const Graph& g, const Bipartition& part) {
    if (part.order() != g.order()) return false;
    int s1 = part.count(Side::one);
    int s2 = part.order() - s1;
    return s1 - s2 <= 1 && s2 - s1 <= 1;
}

InsufficientLowDegree::InsufficientLowDegree(int need, int avail, int c)
    : std::runtime_error("rebalance needs " + std::to_string(need) + " vertices of degree <= " +
                         std::to_string(c) + " on the larger side, only " + std::to_string(avail) +
                         " available"),
      needed(need),
      available(avail),
      cap(c) {}

Bipartition rebalance_low_degree(const Graph& g, Bipartition part, int degree_cap,
                                 std::span<const bool> pinned) {
    const int n = g.order();
    int s1 = part.count(Side::one);
    int s2 = n - s1;
    if (s1 - s2 <= 1 && s2 - s1 <= 1) return part;
    const Side large = s1 > s2 ? Side::one : Side::two;
    const Side small = opposite(large);
    const int moves = (std::abs(s1 - s2)) / 2;

    std::vector<Vertex> candidates;
    for (Vertex v = 0; v < n; ++v)
        if (part[v] == large && g.degree(v) <= degree_cap && (pinned.empty() || !pinned[v]))
            candidates.push_back(v);
    if (static_cast<int>(candidates.size()) < moves)
        throw InsufficientLowDegree(moves, static_cast<int>(candidates.size()), degree_cap);

    // neighbours on the receiving side, updated incrementally
    std::vector<int> toward(static_cast<std::size_t>(n), 0);
    for (Vertex v : candidates)
        for (Vertex u : g.neighbors(v))
            if (part[u] == small) ++toward[v];
    std::vector<bool> done(static_cast<std::size_t>(n), false);
    for (int k = 0; k < moves; ++k) {
        Vertex best = -1;
        for (Vertex v : candidates) {
            if (done[v]) continue;
            if (best < 0 || toward[v] < toward[best] ||
                (toward[v] == toward[best] && g.degree(v) < g.degree(best)))
                best = v;
        }
        done[best] = true;
        part[best] = small;
        for (Vertex u : g.neighbors(best)) ++toward[u];
    }
    return part;
}

GrowingRebalance rebalance_growing_cap(const Graph& g, const Bipartition& part, int degree_cap,
                                       std::span<const bool> pinned) {
    int cap = std::max(0, degree_cap);
    for (;;) {
        try {
            return {rebalance_low_degree(g, part, cap, pinned), cap};
        } catch (const InsufficientLowDegree&) {
            if (cap >= g.max_degree()) throw;
            cap = std::max(1, 2 * cap);
        }
    }
}

int moved_vertices(const Bipartition& a, const Bipartition& b) {
    int d = 0;
    for (int i = 0; i < a.order(); ++i) d += a[i] != b[i];
    return d;
}

InducedSubgraph induced_subgraph(const Graph& g, std::vector<Vertex> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (Vertex u : g.neighbors(vertices[i]))
            if (local[u] > static_cast<int>(i)) edges.push_back({static_cast<Vertex>(i), local[u]});
    return {Graph(static_cast<int>(vertices.size()), std::move(edges)), std::move(vertices)};
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    std::vector<std::vector<Vertex>> out;
    std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> comp{s};
        seen[s] = true;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (Vertex u : g.neighbors(comp[i]))
                if (!seen[u]) {
                    seen[u] = true;
                    comp.push_back(u);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected_set(const Graph& g, std::span<const Vertex> vertices) {
    if (vertices.empty()) return false;
    std::vector<char> in(static_cast<std::size_t>(g.order()), 0), seen(in);
    for (Vertex v : vertices) in[v] = 1;
    std::vector<Vertex> stack{vertices.front()};
    seen[vertices.front()] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex u : g.neighbors(v))
            if (in[u] && !seen[u]) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
    }
    return reached == vertices.size();
}

int edges_inside(const Graph& g, std::span<const bool> in_set) {
    int c = 0;
    for (const auto& e : g.edges()) c += in_set[e.u] && in_set[e.v];
    return c;
}

int edges_between(const Graph& g, std::span<const bool> a, std::span<const bool> b) {
    int c = 0;
    for (const auto& e : g.edges()) c += (a[e.u] && b[e.v]) || (b[e.u] && a[e.v]);
    return c;
}

}  // namespace bisect
