#pragma once

#include <vector>

#include "kdeg/graph.hpp"

namespace kdeg {

/// A degeneracy ordering v_1..v_n with its inverse permutation and the
/// degeneracy k. Every vertex has at most k neighbors after it in `order`,
/// and some vertex attains exactly k.
struct DegeneracyOrdering {
  std::vector<int> order;  // order[i] = vertex at position i
  std::vector<int> rank;   // rank[order[i]] = i
  int k = 0;
};

/// Peels a minimum-degree vertex until the graph is empty, breaking ties by
/// smallest vertex id. Bucket queues over degrees keep this near-linear.
DegeneracyOrdering degeneracy_ordering(const Graph& g);

}  // namespace kdeg
