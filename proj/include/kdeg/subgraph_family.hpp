#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kdeg/degeneracy.hpp"
#include "kdeg/graph.hpp"

namespace kdeg {

struct FamilyOptions {
  // Subgraphs up to this many vertices also carry a bit matrix for constant
  // time pair tests; larger ones fall back to binary search.
  int bit_matrix_cap = 1024;
};

/// A small graph with local ids 0..nv-1 plus a map back to global ids. When
/// produced by build_family, local id order follows the degeneracy ranks of
/// the members and `owner` is the vertex whose forward neighborhood this is
/// (-1 for the residual graph and for standalone wrappers).
class LocalGraph {
 public:
  LocalGraph() = default;
  LocalGraph(int owner, std::vector<int> members,
             std::vector<std::vector<int>> adj, int bit_cap);

  /// Wraps a whole Graph as a LocalGraph with identity labels.
  static LocalGraph from_graph(const Graph& g, int bit_cap = 1024);

  int num_vertices() const { return nv_; }
  std::size_t num_edges() const { return ne_; }
  int owner() const { return owner_; }
  int global(int local) const { return global_[local]; }
  std::span<const int> members() const { return global_; }
  std::span<const int> neighbors(int local) const { return adj_[local]; }
  int degree(int local) const { return static_cast<int>(adj_[local].size()); }
  bool adjacent(int a, int b) const;
  bool has_bit_matrix() const { return row_words_ > 0; }

 private:
  int owner_ = -1;
  int nv_ = 0;
  std::size_t ne_ = 0;
  std::vector<int> global_;
  std::vector<std::vector<int>> adj_;  // sorted ascending local ids
  int row_words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// The induced subgraphs G_i for i = 1..n-k plus the residual graph on the
/// last k ordered vertices. subgraphs[i] is the graph induced on the forward
/// neighbors of ordering.order[i]; its local ids increase with degeneracy
/// rank. forward[v] holds v's neighbors that come later in the ordering,
/// sorted by rank.
struct SubgraphFamily {
  DegeneracyOrdering ordering;
  std::vector<std::vector<int>> forward;
  std::vector<LocalGraph> subgraphs;
  LocalGraph residual;
};

/// Builds the family from an ordering of g. Edge sets are derived purely
/// from intersections of the sorted forward arrays, so the total work is
/// O((n-k) k^2) plus the O((n-k) k log k) sorting of the forward arrays.
/// When n <= k the family has zero subgraphs and the residual is all of g.
SubgraphFamily build_family(const Graph& g, DegeneracyOrdering ord,
                            FamilyOptions opts = {});

}  // namespace kdeg
