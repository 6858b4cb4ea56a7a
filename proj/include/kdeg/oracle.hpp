#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "kdeg/graph.hpp"

// Brute-force reference implementations used as ground truth by the test
// suites. Intentionally naive: everything works off a plain adjacency
// matrix rebuilt from the input graph, sharing no algorithm code with the
// main modules. Hard size guards throw std::invalid_argument rather than
// run forever; these are desk-scale tools only.
namespace kdeg::oracle {

using VertexSet = std::vector<int>;           // id-sorted
using VertexSetFamily = std::set<VertexSet>;  // canonical set-of-sets

VertexSetFamily maximal_cliques(const Graph& g);         // n <= 25
VertexSetFamily l_cliques(const Graph& g, int l);        // n <= 25
std::set<std::array<int, 3>> triangles(const Graph& g);  // n <= 25
int max_clique_size(const Graph& g);                     // n <= 25
int min_vertex_cover_size(const Graph& g);               // n <= 25
int max_independent_set_size(const Graph& g);            // n <= 20
int degeneracy(const Graph& g);                          // n <= 20

VertexSet common_neighbors(const Graph& g, std::span<const int> s);

// Unordered side pairs, each side id-sorted, smaller side first. n <= 14.
using BicliqueFamily = std::set<std::pair<VertexSet, VertexSet>>;
BicliqueFamily maximal_bicliques(const Graph& g);
BicliqueFamily maximal_induced_bicliques(const Graph& g);

bool has_rl_biclique(const Graph& g, int r, int l);          // n <= 14
bool has_induced_rl_biclique(const Graph& g, int r, int l);  // n <= 14

/// Stores every suffix of every inserted word explicitly; the reference
/// for SuffixIndex.
class NaiveSuffixIndex {
 public:
  void insert(std::span<const int> word);
  bool is_suffix(std::span<const int> word) const;
  bool has_root_letter(int letter) const;

 private:
  std::set<std::vector<int>> suffixes_;
  std::set<int> first_letters_;
};

}  // namespace kdeg::oracle
