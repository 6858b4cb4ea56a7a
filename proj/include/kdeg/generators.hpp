#pragma once

#include <cstdint>
#include <span>

#include "kdeg/graph.hpp"

namespace kdeg {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_multipartite(std::span<const int> parts);
Graph petersen_graph();

/// Erdos-Renyi G(n, p); identical seeds give identical graphs on any
/// platform.
Graph gnp_random(int n, double p, std::uint64_t seed);

/// Each new vertex attaches to between 1 and min(i, k) uniformly chosen
/// distinct earlier vertices, so the result is connected and has degeneracy
/// at most k. Deterministic under seed.
Graph random_k_degenerate(int n, int k, std::uint64_t seed);

}  // namespace kdeg
