#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kdeg/subgraph_family.hpp"

namespace kdeg {

/// A complete bipartite subgraph: a and b disjoint, nonempty, every cross
/// pair an edge. The induced variant additionally has both sides
/// independent. Sides are id-sorted.
struct Biclique {
  std::vector<int> a;
  std::vector<int> b;
};

/// Checks the Biclique invariants against g.
bool verify_biclique(const Graph& g, const Biclique& bc, bool induced);

/// Batch common-neighbor computation: answers[i] is the id-sorted set of
/// vertices adjacent to every member of sets[i] (never intersecting
/// sets[i]). Two phases over the degeneracy ordering: candidates after the
/// earliest member x_i are the forward neighbors of x_i, confirmed by edge
/// counting through a rank-indexed scratch array; candidates before x_i come
/// from bucket-sorting (subset, vertex) pairs generated from forward
/// neighborhoods against the query sets. Sets may have mixed sizes; each
/// must be nonempty (throws std::invalid_argument otherwise).
std::vector<std::vector<int>> common_neighbors_batch(
    const Graph& g, const SubgraphFamily& fam,
    std::span<const std::vector<int>> sets);

/// Lists every maximal biclique of g exactly once (non-induced semantics:
/// no vertex can join either side keeping completeness). For each nonempty
/// subset S of a subgraph's vertex set (and of the residual), the closed
/// pair (S, C(S)) with C(C(S)) = S is kept; pairs are canonicalized with the
/// lexicographically smaller side first and deduplicated globally.
/// Exponential in k; refuses graphs whose subgraphs exceed 25 vertices.
std::vector<Biclique> list_maximal_bicliques(const Graph& g);

/// Decides whether g has a complete bipartite subgraph with side sizes r and
/// l, returning a witness (a = r-side, b = l-side) or nullopt. Throws
/// std::invalid_argument for r < 1 or l < 1.
std::optional<Biclique> solve_rl_biclique(const Graph& g, int r, int l);

/// Induced variant: both witness sides are independent sets. Independent
/// subsets of each subgraph are paired with an independent set extracted
/// from their common neighborhood, either greedily (guaranteed once |B|
/// exceeds the Ramsey threshold) or by exhaustive search below it.
std::optional<Biclique> solve_induced_rl_biclique(const Graph& g, int r,
                                                  int l);

/// (k+d)^(k+1) with overflow checking; nullopt means the bound exceeds
/// 2^64 and callers should treat it as unbounded. Requires k >= 0, d >= 1.
std::optional<std::uint64_t> ramsey_threshold(int k, int d);

/// Repeatedly takes a minimum-degree vertex (smallest id on ties) and
/// deletes its closed neighborhood. A k-degenerate graph yields at least
/// n/(k+1) vertices, so this succeeds whenever n >= d(k+1). Returns the
/// whole greedy set if it reaches size d, nullopt otherwise.
std::optional<std::vector<int>> greedy_independent_set(const Graph& g, int d);

}  // namespace kdeg
