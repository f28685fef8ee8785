// Tight components and the tau bounds built on them.
#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "bisect/graph.hpp"
#include "bisect/parallel.hpp"
#include "bisect/rational.hpp"

namespace bisect {

/// Definitional check on a connected vertex set: every deletion leaves a
/// perfect matching, and no perfect matching of T - v uses an edge with
/// exactly one endpoint adjacent to v. The second condition is tested as
/// "T - {v, a, b} has no perfect matching" for each such edge ab.
/// Throws GraphError when `component` does not induce a connected subgraph.
bool is_tight_component(const Graph& g, std::span<const Vertex> component);

struct ComponentFlag {
    std::vector<Vertex> vertices;
    bool tight = false;
};

struct TightReport {
    std::vector<ComponentFlag> components;
    int tau = 0;
};

/// Raised when the matching count and the definitional count differ.
class TightDisagreement : public std::logic_error {
public:
    TightDisagreement(int by_matching, int by_definition);
    int by_matching;
    int by_definition;
};

/// Flags every component definitionally and cross-checks the total against
/// the number of non-free vertices of a free-maximized maximum matching.
TightReport count_tight_components(const Graph& g);

/// Definitional count only.
int count_tight_definitional(const Graph& g);

/// Non-free count after free-vertex maximization.
int count_tight_by_matching(const Graph& g);

/// degree -> number of vertices with that degree
using DegreeSequence = std::map<int, long long>;

DegreeSequence degree_sequence(const Graph& g);

/// d0/1 + d2/3 + d4/5 + ...
Rational tau_upper_by_degrees(const DegreeSequence& seq);

/// (n' + rho) / (delta - alpha + 1); throws std::invalid_argument when
/// alpha >= delta + 1.
Rational tau_upper_by_rho(long long nprime, long long rho, long long delta, long long alpha);

/// True iff g is connected and every block is a clique of odd order, i.e. g
/// arises from odd cliques by repeatedly identifying one vertex of each.
bool odd_clique_tree(const Graph& g);

/// Census over all connected labeled graphs on k vertices.
struct TightCensus {
    int k = 0;
    long long connected = 0;
    long long tight = 0;
    long long clique_built = 0;
    long long tight_not_built = 0;  // tight, but some block is not an odd clique
    long long built_not_tight = 0;
    std::vector<Graph> examples;    // up to 5 of the first kind, lowest edge mask first
};

/// 1 <= k <= 7.
TightCensus tight_census(int k, Execution ex = Execution::parallel);

}  // namespace bisect
