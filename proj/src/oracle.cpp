#include "kdeg/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>
#include <string>

namespace kdeg::oracle {

namespace {

void guard(const Graph& g, int max_n, const char* who) {
  if (g.num_vertices() > max_n)
    throw std::invalid_argument(std::string(who) + ": size guard exceeded");
}

// Adjacency as bitmasks over at most 25 vertices.
std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint32_t> adj(g.num_vertices(), 0);
  for (int v = 0; v < g.num_vertices(); ++v)
    for (int u : g.neighbors(v)) adj[v] |= std::uint32_t{1} << u;
  return adj;
}

VertexSet mask_to_set(std::uint32_t mask) {
  VertexSet out;
  for (int v = 0; mask; ++v, mask >>= 1)
    if (mask & 1) out.push_back(v);
  return out;
}

// Visits every clique once (members added in increasing id order); cand is
// the set of vertices adjacent to all current members.
void visit_cliques(const std::vector<std::uint32_t>& adj, int n,
                   std::uint32_t clique, std::uint32_t cand, int next,
                   const std::function<void(std::uint32_t, std::uint32_t)>&
                       visit) {
  visit(clique, cand);
  for (int v = next; v < n; ++v) {
    if (!(cand & (std::uint32_t{1} << v))) continue;
    visit_cliques(adj, n, clique | (std::uint32_t{1} << v), cand & adj[v],
                  v + 1, visit);
  }
}

}  // namespace

VertexSetFamily maximal_cliques(const Graph& g) {
  guard(g, 25, "oracle::maximal_cliques");
  const auto adj = adjacency_masks(g);
  const int n = g.num_vertices();
  const std::uint32_t all = n == 32 ? ~0u : (std::uint32_t{1} << n) - 1;
  VertexSetFamily out;
  visit_cliques(adj, n, 0, all, 0,
                [&](std::uint32_t clique, std::uint32_t cand) {
                  if (clique != 0 && (cand & ~clique) == 0)
                    out.insert(mask_to_set(clique));
                });
  return out;
}

VertexSetFamily l_cliques(const Graph& g, int l) {
  guard(g, 25, "oracle::l_cliques");
  if (l < 1) throw std::invalid_argument("oracle::l_cliques: l >= 1");
  const auto adj = adjacency_masks(g);
  const int n = g.num_vertices();
  VertexSetFamily out;
  VertexSet chosen;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(chosen.size()) == l) {
      out.insert(chosen);
      return;
    }
    for (int v = start; v < n; ++v) {
      bool ok = true;
      for (int u : chosen)
        if (!(adj[u] & (std::uint32_t{1} << v))) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(v);
      rec(v + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  return out;
}

std::set<std::array<int, 3>> triangles(const Graph& g) {
  guard(g, 25, "oracle::triangles");
  std::set<std::array<int, 3>> out;
  const int n = g.num_vertices();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c))
          out.insert({a, b, c});
  return out;
}

int max_clique_size(const Graph& g) {
  guard(g, 25, "oracle::max_clique_size");
  const auto adj = adjacency_masks(g);
  const int n = g.num_vertices();
  const std::uint32_t all = n == 32 ? ~0u : (std::uint32_t{1} << n) - 1;
  int best = 0;
  visit_cliques(adj, n, 0, all, 0, [&](std::uint32_t clique, std::uint32_t) {
    best = std::max(best, std::popcount(clique));
  });
  return best;
}

namespace {

// Textbook branching: pick any remaining edge, one endpoint must be in.
int mvc_rec(const std::vector<std::uint32_t>& adj, std::uint32_t removed,
            const std::vector<std::pair<int, int>>& edges) {
  for (auto [u, v] : edges) {
    const bool live = !(removed & (std::uint32_t{1} << u)) &&
                      !(removed & (std::uint32_t{1} << v));
    if (!live) continue;
    const int with_u =
        1 + mvc_rec(adj, removed | (std::uint32_t{1} << u), edges);
    const int with_v =
        1 + mvc_rec(adj, removed | (std::uint32_t{1} << v), edges);
    return std::min(with_u, with_v);
  }
  return 0;
}

}  // namespace

int min_vertex_cover_size(const Graph& g) {
  guard(g, 25, "oracle::min_vertex_cover_size");
  return mvc_rec(adjacency_masks(g), 0, g.edges());
}

int max_independent_set_size(const Graph& g) {
  guard(g, 20, "oracle::max_independent_set_size");
  const auto adj = adjacency_masks(g);
  const int n = g.num_vertices();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    bool independent = true;
    for (int v = 0; v < n && independent; ++v)
      if ((mask & (std::uint32_t{1} << v)) && (adj[v] & mask))
        independent = false;
    if (independent) best = std::max(best, std::popcount(mask));
  }
  return best;
}

int degeneracy(const Graph& g) {
  guard(g, 20, "oracle::degeneracy");
  const auto adj = adjacency_masks(g);
  const int n = g.num_vertices();
  int worst = 0;
  // max over every nonempty induced subgraph of its minimum degree
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    int min_deg = n;
    for (int v = 0; v < n; ++v)
      if (mask & (std::uint32_t{1} << v))
        min_deg = std::min(min_deg, std::popcount(adj[v] & mask));
    worst = std::max(worst, min_deg);
  }
  return worst;
}

VertexSet common_neighbors(const Graph& g, std::span<const int> s) {
  VertexSet out;
  for (int v = 0; v < g.num_vertices(); ++v) {
    bool all = true;
    for (int u : s)
      if (!g.has_edge(u, v)) {
        all = false;
        break;
      }
    if (all) out.push_back(v);
  }
  return out;
}

namespace {

BicliqueFamily bicliques_impl(const Graph& g, bool induced) {
  guard(g, 14, induced ? "oracle::maximal_induced_bicliques"
                       : "oracle::maximal_bicliques");
  const auto adj = adjacency_masks(g);
  const int n = g.num_vertices();
  const std::uint32_t all = (std::uint32_t{1} << n) - 1;
  BicliqueFamily out;

  const auto complete_cross = [&](std::uint32_t a, std::uint32_t b) {
    for (int v = 0; v < n; ++v)
      if (a & (std::uint32_t{1} << v))
        if ((adj[v] & b) != b) return false;
    return true;
  };
  const auto independent = [&](std::uint32_t s) {
    for (int v = 0; v < n; ++v)
      if ((s & (std::uint32_t{1} << v)) && (adj[v] & s)) return false;
    return true;
  };

  for (std::uint32_t a = 1; a <= all; ++a) {
    // canonical orientation: the side holding the smallest vertex is `a`
    const std::uint32_t rest = all & ~a;
    for (std::uint32_t b = rest; b != 0; b = (b - 1) & rest) {
      if (std::countr_zero(b) < std::countr_zero(a)) continue;
      if (!complete_cross(a, b)) continue;
      if (induced && (!independent(a) || !independent(b))) continue;
      bool maximal = true;
      for (int v = 0; v < n && maximal; ++v) {
        const std::uint32_t bit = std::uint32_t{1} << v;
        if ((a | b) & bit) continue;
        const bool into_a =
            ((adj[v] & b) == b) && (!induced || !(adj[v] & a));
        const bool into_b =
            ((adj[v] & a) == a) && (!induced || !(adj[v] & b));
        if (into_a || into_b) maximal = false;
      }
      if (maximal) out.emplace(mask_to_set(a), mask_to_set(b));
    }
  }
  return out;
}

}  // namespace

BicliqueFamily maximal_bicliques(const Graph& g) {
  return bicliques_impl(g, false);
}

BicliqueFamily maximal_induced_bicliques(const Graph& g) {
  return bicliques_impl(g, true);
}

namespace {

bool rl_biclique_impl(const Graph& g, int r, int l, bool induced) {
  guard(g, 14, "oracle::rl_biclique");
  if (r < 1 || l < 1) throw std::invalid_argument("oracle: r, l >= 1");
  const auto adj = adjacency_masks(g);
  const int n = g.num_vertices();
  const std::uint32_t all = (std::uint32_t{1} << n) - 1;
  const auto independent = [&](std::uint32_t s) {
    for (int v = 0; v < n; ++v)
      if ((s & (std::uint32_t{1} << v)) && (adj[v] & s)) return false;
    return true;
  };
  for (std::uint32_t a = 1; a <= all; ++a) {
    if (std::popcount(a) != r) continue;
    if (induced && !independent(a)) continue;
    // candidates for b: adjacent to all of a
    std::uint32_t cand = all & ~a;
    for (int v = 0; v < n && cand; ++v)
      if (a & (std::uint32_t{1} << v)) cand &= adj[v];
    if (std::popcount(cand) < l) continue;
    if (!induced) return true;
    for (std::uint32_t b = cand; b != 0; b = (b - 1) & cand)
      if (std::popcount(b) == l && independent(b)) return true;
  }
  return false;
}

}  // namespace

bool has_rl_biclique(const Graph& g, int r, int l) {
  return rl_biclique_impl(g, r, l, false);
}

bool has_induced_rl_biclique(const Graph& g, int r, int l) {
  return rl_biclique_impl(g, r, l, true);
}

void NaiveSuffixIndex::insert(std::span<const int> word) {
  for (std::size_t i = 0; i < word.size(); ++i) {
    suffixes_.emplace(word.begin() + i, word.end());
    first_letters_.insert(word[i]);
  }
}

bool NaiveSuffixIndex::is_suffix(std::span<const int> word) const {
  if (word.empty()) return false;
  return suffixes_.count(std::vector<int>(word.begin(), word.end())) > 0;
}

bool NaiveSuffixIndex::has_root_letter(int letter) const {
  return first_letters_.count(letter) > 0;
}

}  // namespace kdeg::oracle
