// Instance generators: small named graphs, extremal families, random models.
#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "bisect/graph.hpp"

namespace bisect {

struct GeneratorSpec {
    std::string family;
    std::map<std::string, long long> params;

    long long get(const std::string& key) const;
    long long get(const std::string& key, long long fallback) const;
};

/// "family" or "family:key=value,key=value".
GeneratorSpec parse_generator_spec(const std::string& text);
std::string to_string(const GeneratorSpec& spec);

/// Builds the graph and checks the family's defining properties.
/// Throws std::invalid_argument for infeasible parameters.
Graph generate(const GeneratorSpec& spec);

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph star(int n);  // K_{1,n-1}, centre 0
Graph cycle(int n);
Graph path(int n);
Graph triangles(int t);
Graph perfect_matching_graph(int n);
Graph bowtie();
Graph petersen();
/// x copies of K_delta, y copies of K_{delta+1}, plus a dominating vertex
/// (the last index). y must be odd.
Graph family1(int delta, int x, int y);
/// K_{delta+1, n-delta-1}; the small side is 0..delta. n must be even.
Graph family2(int delta, int n);

/// Random graph with minimum degree >= delta and exactly m edges: a random
/// 2-factor made of `cycles` cycles, patched up to degree delta, then padded
/// with uniform extra edges.
Graph random_min_degree(int n, long long m, int delta, std::uint64_t seed, int cycles = 1);
/// Up to m uniform edges subject to maximum degree r.
Graph random_bounded(int n, int r, long long m, std::uint64_t seed);
/// Uniform r-regular graph by the configuration model with rejection.
Graph random_regular(int n, int r, std::uint64_t seed);
/// Uniform G(n, m).
Graph gnm(int n, long long m, std::uint64_t seed);
/// G(n, m) followed by one extra edge per isolated vertex.
Graph random_no_isolated(int n, long long m, std::uint64_t seed);
/// Disjoint union.
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace bisect
