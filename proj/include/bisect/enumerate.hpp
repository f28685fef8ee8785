// Exhaustive enumeration of small graphs up to isomorphism.
#pragma once

#include <cstdint>
#include <vector>

#include "bisect/graph.hpp"
#include "bisect/parallel.hpp"

namespace bisect {

inline constexpr int kEnumerateLimit = 9;

/// Isomorphism-invariant code: the largest upper-triangle adjacency bit
/// string over the labelings reached by individualization and refinement.
/// n <= 11.
std::uint64_t canonical_code(const Graph& g);

/// Graph on n vertices whose upper triangle, row by row, is `code` read from
/// its top bit down.
Graph graph_from_code(int n, std::uint64_t code);

/// One representative per isomorphism class, sorted by canonical code.
/// Built by one-vertex extensions of the classes on n - 1 vertices.
/// n <= kEnumerateLimit.
std::vector<Graph> nonisomorphic_graphs(int n, bool connected_only = false, Execution ex = Execution::parallel);

}  // namespace bisect
