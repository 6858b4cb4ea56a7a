#include "kdeg/generators.hpp"

#include <limits>
#include <random>
#include <set>
#include <stdexcept>

namespace kdeg {

namespace {

// mt19937_64 output is specified by the standard; combined with rejection
// sampling below, generated graphs are bit-identical across platforms.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

double unit_real(std::mt19937_64& rng) {
  return (rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph requires n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(n - 1, 0);
  return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

Graph complete_multipartite(std::span<const int> parts) {
  int n = 0;
  std::vector<int> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p] < 1)
      throw std::invalid_argument("multipartite parts must be >= 1");
    for (int i = 0; i < parts[p]; ++i) part_of.push_back(static_cast<int>(p));
    n += parts[p];
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (part_of[i] != part_of[j]) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

Graph petersen_graph() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    edges.emplace_back(i, 5 + i);                // spokes
  }
  return Graph::from_edges(10, edges);
}

Graph gnp_random(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (unit_real(rng) < p) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

Graph random_k_degenerate(int n, int k, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("random_k_degenerate requires k >= 1");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  std::set<int> targets;
  for (int i = 1; i < n; ++i) {
    const int cap = std::min(i, k);
    const int d = 1 + static_cast<int>(bounded(rng, cap));
    targets.clear();
    while (static_cast<int>(targets.size()) < d)
      targets.insert(static_cast<int>(bounded(rng, i)));
    for (int t : targets) edges.emplace_back(t, i);
  }
  return Graph::from_edges(n, edges);
}

}  // namespace kdeg
