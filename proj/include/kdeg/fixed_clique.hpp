#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "kdeg/subgraph_family.hpp"

namespace kdeg {

/// Streams every clique of size l >= 3 exactly once, as vertex ids sorted by
/// degeneracy rank. Each clique is produced only by the subgraph owned by
/// its earliest-ranked vertex (or by the residual graph when all members lie
/// in the last k positions), so no global dedup is needed. Enumeration is
/// lexicographic over local ids. Throws std::invalid_argument for l < 3.
void for_each_l_clique(const Graph& g, int l,
                       const std::function<void(std::span<const int>)>& emit);

std::vector<std::vector<int>> list_l_cliques(const Graph& g, int l);

/// l = 1 counts vertices, l = 2 counts edges, l >= 3 counts the stream of
/// for_each_l_clique. Per-subgraph work is independent; threads > 1 splits
/// the subgraphs across that many workers.
std::uint64_t count_l_cliques(const Graph& g, int l, int threads = 1);

/// l = 3 specialization: each edge (u, w) of a subgraph G_i yields the
/// triangle (v_i, u, w); the residual is scanned by subset enumeration.
/// Emission order matches for_each_l_clique(g, 3).
void for_each_triangle(
    const Graph& g,
    const std::function<void(const std::array<int, 3>&)>& emit);

std::vector<std::array<int, 3>> list_triangles(const Graph& g);

std::uint64_t count_triangles(const Graph& g, int threads = 1);

/// Returns g minus every edge that lies in at least one triangle. The
/// result is triangle-free: removing edges cannot create new triangles.
Graph remove_triangles(const Graph& g);

}  // namespace kdeg
