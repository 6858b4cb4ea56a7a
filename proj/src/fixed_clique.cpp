#include "kdeg/fixed_clique.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace kdeg {

namespace {

// Enumerates cliques of size `want` within lg in lexicographic local-id
// order, extending only pairwise-adjacent prefixes. `chosen` and `cands`
// are scratch; `cands` holds vertices > last chosen, adjacent to all chosen.
void subset_cliques(const LocalGraph& lg, int want, std::vector<int>& chosen,
                    std::span<const int> cands,
                    const std::function<void(std::span<const int>)>& emit) {
  if (static_cast<int>(chosen.size()) == want) {
    emit(chosen);
    return;
  }
  const int missing = want - static_cast<int>(chosen.size());
  if (static_cast<int>(cands.size()) < missing) return;
  std::vector<int> next;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    const int v = cands[i];
    next.clear();
    for (std::size_t j = i + 1; j < cands.size(); ++j)
      if (lg.adjacent(v, cands[j])) next.push_back(cands[j]);
    chosen.push_back(v);
    subset_cliques(lg, want, chosen, next, emit);
    chosen.pop_back();
  }
}

void subgraph_l_cliques(const LocalGraph& sub, int l,
                        const std::function<void(std::span<const int>)>& emit) {
  std::vector<int> all(sub.num_vertices());
  for (int v = 0; v < sub.num_vertices(); ++v) all[v] = v;
  std::vector<int> chosen;
  std::vector<int> word;
  subset_cliques(sub, l - 1, chosen, all, [&](std::span<const int> local) {
    word.clear();
    word.push_back(sub.owner());
    for (int v : local) word.push_back(sub.global(v));
    emit(word);
  });
}

void residual_l_cliques(const LocalGraph& res, int l,
                        const std::function<void(std::span<const int>)>& emit) {
  std::vector<int> all(res.num_vertices());
  for (int v = 0; v < res.num_vertices(); ++v) all[v] = v;
  std::vector<int> chosen;
  std::vector<int> word;
  subset_cliques(res, l, chosen, all, [&](std::span<const int> local) {
    word.clear();
    for (int v : local) word.push_back(res.global(v));
    emit(word);
  });
}

std::uint64_t count_stream(const SubgraphFamily& fam, int l, int threads) {
  const std::size_t ns = fam.subgraphs.size();
  std::uint64_t total = 0;
  if (threads <= 1 || ns < 2) {
    for (const auto& sub : fam.subgraphs) {
      std::uint64_t c = 0;
      subgraph_l_cliques(sub, l, [&](std::span<const int>) { ++c; });
      total += c;
    }
  } else {
    const int nt = std::min<std::size_t>(threads, ns);
    std::vector<std::uint64_t> partial(nt, 0);
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t) {
      pool.emplace_back([&, t] {
        const std::size_t lo = ns * t / nt, hi = ns * (t + 1) / nt;
        std::uint64_t c = 0;
        for (std::size_t i = lo; i < hi; ++i)
          subgraph_l_cliques(fam.subgraphs[i], l,
                             [&](std::span<const int>) { ++c; });
        partial[t] = c;
      });
    }
    for (auto& th : pool) th.join();
    for (auto c : partial) total += c;
  }
  std::uint64_t c = 0;
  residual_l_cliques(fam.residual, l, [&](std::span<const int>) { ++c; });
  return total + c;
}

}  // namespace

void for_each_l_clique(const Graph& g, int l,
                       const std::function<void(std::span<const int>)>& emit) {
  if (l < 3)
    throw std::invalid_argument(
        "for_each_l_clique requires l >= 3; use the vertex/edge views");
  const auto fam = build_family(g, degeneracy_ordering(g));
  for (const auto& sub : fam.subgraphs) subgraph_l_cliques(sub, l, emit);
  residual_l_cliques(fam.residual, l, emit);
}

std::vector<std::vector<int>> list_l_cliques(const Graph& g, int l) {
  std::vector<std::vector<int>> out;
  for_each_l_clique(g, l, [&](std::span<const int> w) {
    out.emplace_back(w.begin(), w.end());
  });
  return out;
}

std::uint64_t count_l_cliques(const Graph& g, int l, int threads) {
  if (l < 1) throw std::invalid_argument("count_l_cliques requires l >= 1");
  if (l == 1) return g.num_vertices();
  if (l == 2) return g.num_edges();
  const auto fam = build_family(g, degeneracy_ordering(g));
  return count_stream(fam, l, threads);
}

void for_each_triangle(
    const Graph& g,
    const std::function<void(const std::array<int, 3>&)>& emit) {
  const auto fam = build_family(g, degeneracy_ordering(g));
  for (const auto& sub : fam.subgraphs) {
    const int owner = sub.owner();
    for (int u = 0; u < sub.num_vertices(); ++u)
      for (int w : sub.neighbors(u))
        if (w > u) emit({owner, sub.global(u), sub.global(w)});
  }
  std::vector<int> chosen;
  std::vector<int> all(fam.residual.num_vertices());
  for (int v = 0; v < fam.residual.num_vertices(); ++v) all[v] = v;
  subset_cliques(fam.residual, 3, chosen, all, [&](std::span<const int> t) {
    emit({fam.residual.global(t[0]), fam.residual.global(t[1]),
          fam.residual.global(t[2])});
  });
}

std::vector<std::array<int, 3>> list_triangles(const Graph& g) {
  std::vector<std::array<int, 3>> out;
  for_each_triangle(g, [&](const std::array<int, 3>& t) { out.push_back(t); });
  return out;
}

std::uint64_t count_triangles(const Graph& g, int threads) {
  return count_l_cliques(g, 3, threads);
}

Graph remove_triangles(const Graph& g) {
  std::unordered_set<std::uint64_t> marked;
  const auto key = [](int u, int v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) |
           static_cast<std::uint32_t>(v);
  };
  for_each_triangle(g, [&](const std::array<int, 3>& t) {
    marked.insert(key(t[0], t[1]));
    marked.insert(key(t[0], t[2]));
    marked.insert(key(t[1], t[2]));
  });
  std::vector<std::pair<int, int>> kept;
  for (auto [u, v] : g.edges())
    if (!marked.count(key(u, v))) kept.emplace_back(u, v);
  return Graph::from_edges(g.num_vertices(), kept);
}

}  // namespace kdeg
