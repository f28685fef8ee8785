// Simple undirected graphs, bipartitions and cut bookkeeping.
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bisect {

using Vertex = int;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    auto operator<=>(const Edge&) const = default;
};

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown for inputs outside an algorithm's hypotheses.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parse failure carrying the 1-based line number of the offending line.
class ParseError : public GraphError {
public:
    ParseError(int line, const std::string& what);
    int line() const { return line_; }

private:
    int line_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edges are normalized to u < v and kept sorted; adjacency lists are sorted.
/// For n <= 64 a bitmask adjacency is kept as well, which the brute-force
/// oracles and the small-graph tight checks rely on.
class Graph {
public:
    Graph() = default;
    /// Throws GraphError on self-loops, duplicates or out-of-range endpoints.
    Graph(int n, std::vector<Edge> edges);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(Vertex a, Vertex b) const;
    int max_degree() const;
    int min_degree() const;

    bool has_masks() const { return !mask_.empty() || n_ == 0; }
    std::uint64_t neighbor_mask(Vertex v) const { return mask_[v]; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::uint64_t> mask_;
};

/// Reads either the "n m" edge-list format (0-indexed) or DIMACS
/// ("p edge n m", "e u v", 1-indexed, "c" comments). Format is detected from
/// the first non-blank, non-comment line.
Graph parse_graph(std::string_view text);

/// Edge-list serialization; parse_graph(to_edge_list(g)) reproduces g.
std::string to_edge_list(const Graph& g);

/// FNV-1a over the canonical edge list, as 16 hex digits.
std::string graph_hash(const Graph& g);

enum class Side : std::uint8_t { one = 1, two = 2 };

inline Side opposite(Side s) { return s == Side::one ? Side::two : Side::one; }

struct Bipartition {
    std::vector<Side> side;

    Bipartition() = default;
    explicit Bipartition(int n, Side fill = Side::one) : side(static_cast<std::size_t>(n), fill) {}
    explicit Bipartition(std::vector<Side> s) : side(std::move(s)) {}

    int order() const { return static_cast<int>(side.size()); }
    int count(Side s) const;
    Side operator[](Vertex v) const { return side[static_cast<std::size_t>(v)]; }
    Side& operator[](Vertex v) { return side[static_cast<std::size_t>(v)]; }
    bool operator==(const Bipartition&) const = default;
};

struct CutStats {
    int crossing = 0;
    int inside1 = 0;
    int inside2 = 0;
    int size1 = 0;
    int size2 = 0;

    int max_inside() const { return inside1 > inside2 ? inside1 : inside2; }
    bool operator==(const CutStats&) const = default;
};

CutStats cut_stats(const Graph& g, const Bipartition& part);

/// True iff the part sizes differ by at most one.
bool is_bisection(const Graph& g, const Bipartition& part);

class InsufficientLowDegree : public std::runtime_error {
public:
    InsufficientLowDegree(int needed, int available, int cap);
    int needed;
    int available;
    int cap;
};

/// Moves vertices of degree <= degree_cap from the larger side to the smaller
/// until the sizes differ by at most one. Each move picks the candidate with the
/// fewest neighbours on the receiving side, then lowest degree, then lowest
/// index. Vertices flagged in `pinned` never move. Throws
/// InsufficientLowDegree when the larger side runs out of candidates.
Bipartition rebalance_low_degree(const Graph& g, Bipartition part, int degree_cap,
                                 std::span<const bool> pinned = {});

struct GrowingRebalance {
    Bipartition part;
    int cap = 0;  // degree cap that sufficed
};

/// rebalance_low_degree starting at `degree_cap` and doubling the cap while
/// candidates run out. Rethrows once the cap covers every degree.
GrowingRebalance rebalance_growing_cap(const Graph& g, const Bipartition& part, int degree_cap,
                                       std::span<const bool> pinned = {});

/// Number of vertices moved by the last rebalance is the Hamming distance.
int moved_vertices(const Bipartition& a, const Bipartition& b);

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_parent;  // local index -> parent vertex
};

/// Subgraph induced by `vertices` (any order; local indices follow sorted order).
InducedSubgraph induced_subgraph(const Graph& g, std::vector<Vertex> vertices);

/// Connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

bool is_connected_set(const Graph& g, std::span<const Vertex> vertices);

/// Edges with both endpoints in `in_set`.
int edges_inside(const Graph& g, std::span<const bool> in_set);
/// Edges with exactly one endpoint in `a` and the other in `b` (disjoint sets).
int edges_between(const Graph& g, std::span<const bool> a, std::span<const bool> b);

}  // namespace bisect
