#pragma once

#include <cstdint>

#include "spectool/graph.hpp"

namespace spectool {

Graph complete(int n);
/// K_{a,b}; part A is vertices [0, a), part B is [a, a+b).
Graph complete_bipartite(int a, int b);
/// C_n, n >= 3.
Graph cycle(int n);
Graph path(int n);
/// K_{1,n-1} on n vertices, centre 0.
Graph star(int n);
Graph petersen();

/// Erdos-Renyi G(n, p); deterministic for a given seed.
Graph gnp(int n, double p, std::uint64_t seed);
/// Uniform-ish random k-regular graph by restarted random pairing. n*k must be even.
Graph random_regular(int n, int k, std::uint64_t seed);
/// Random bipartite graph with parts [0, a) and [a, a+b), each cross pair kept with probability p.
Graph random_bipartite(int a, int b, double p, std::uint64_t seed);

Graph disjoint_union(const Graph& g, const Graph& h);
/// g plus `count` isolated vertices appended at the end.
Graph add_isolated(const Graph& g, int count);

}  // namespace spectool
