// Maximum matching in general graphs and the free-vertex refinement.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "bisect/graph.hpp"

namespace bisect {

struct Matching {
    std::vector<Vertex> mate;  // -1 when uncovered

    Matching() = default;
    explicit Matching(int n) : mate(static_cast<std::size_t>(n), -1) {}

    int order() const { return static_cast<int>(mate.size()); }
    bool covered(Vertex v) const { return mate[v] >= 0; }
    /// Matched edges ordered by their smaller endpoint.
    std::vector<Edge> pairs() const;
    /// The uncovered set W in increasing order.
    std::vector<Vertex> uncovered() const;
    int size() const;
    bool operator==(const Matching&) const = default;
};

/// Throws GraphError unless `m` is a matching of g.
void validate_matching(const Graph& g, const Matching& m);

/// Edmonds' blossom algorithm seeded with a greedy matching that scans
/// vertices in index order, so the result depends only on g.
Matching maximum_matching(const Graph& g);

/// True iff G[vertices] has a perfect matching. Uses memoized bitmask search
/// for small sets and the blossom algorithm otherwise.
bool has_perfect_matching(const Graph& g, std::span<const Vertex> vertices);

/// A perfect matching of G[vertices], or an empty optional.
std::optional<std::vector<Edge>> perfect_matching(const Graph& g, std::span<const Vertex> vertices);

/// True iff G[vertices] is factor-critical (removing any one vertex leaves a
/// perfect matching). Uses one blossom search from the uncovered vertex of a
/// near-perfect matching: every vertex must end up even.
bool is_factor_critical(const Graph& g, std::span<const Vertex> vertices);

struct FreeInfo {
    std::vector<Vertex> uncovered;                    // W
    std::vector<std::vector<Vertex>> free_neighbors;  // indexed by vertex, sorted
    std::vector<bool> free_flag;                      // true only for free W-vertices

    int free_count() const;
};

FreeInfo compute_free_info(const Graph& g, const Matching& m);

/// Thrown when a free-vertex improvement step finds an augmenting path, i.e.
/// the input matching was not maximum.
class NotMaximum : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct FreeSearchStats {
    int improvements = 0;
    int certified = 0;  // non-free vertices whose grown set closed into a component
    int stuck = 0;      // non-free vertices left without a certificate
};

/// Local search that keeps the matching maximum and strictly increases the
/// number of free W-vertices. Each non-free w grows a set T that avoids
/// cutting matched edges and stays tight; a boundary edge v1v2 either yields
/// an exchange that frees one of its endpoints, or T absorbs it after the
/// closure check. At most n*n improvements are applied.
Matching maximize_free_vertices(const Graph& g, Matching m, FreeSearchStats* stats = nullptr);

int count_nonfree(const Graph& g, const Matching& m, const FreeInfo& info);

}  // namespace bisect
