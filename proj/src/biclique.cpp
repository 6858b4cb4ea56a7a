#include "kdeg/biclique.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <limits>
#include <set>
#include <stdexcept>
#include <utility>

namespace kdeg {

namespace {

// Phase 2 pair: `key` points at `len` vertex ids in ascending rank order.
// tag >= 0 is a witness vertex adjacent to (and before) the whole subset;
// tag < 0 marks query set ~tag.
struct SubsetPair {
  std::uint32_t key_begin;
  std::int32_t tag;
};

struct RankLess {
  const std::vector<int>& rank;
  bool operator()(int a, int b) const { return rank[a] < rank[b]; }
};

}  // namespace

bool verify_biclique(const Graph& g, const Biclique& bc, bool induced) {
  if (bc.a.empty() || bc.b.empty()) return false;
  std::vector<int> inter;
  std::set_intersection(bc.a.begin(), bc.a.end(), bc.b.begin(), bc.b.end(),
                        std::back_inserter(inter));
  if (!inter.empty()) return false;
  for (int x : bc.a)
    for (int y : bc.b)
      if (!g.has_edge(x, y)) return false;
  if (induced) {
    for (const auto& side : {bc.a, bc.b})
      for (std::size_t i = 0; i < side.size(); ++i)
        for (std::size_t j = i + 1; j < side.size(); ++j)
          if (g.has_edge(side[i], side[j])) return false;
  }
  return true;
}

std::vector<std::vector<int>> common_neighbors_batch(
    const Graph& g, const SubgraphFamily& fam,
    std::span<const std::vector<int>> sets) {
  const int n = g.num_vertices();
  const auto& rank = fam.ordering.rank;
  if (sets.size() > (std::size_t{1} << 30))
    throw std::invalid_argument("common_neighbors_batch: too many sets");
  std::vector<std::vector<int>> answers(sets.size());

  std::vector<int> edge_count(n, 0);  // indexed by rank position
  std::vector<char> member(n, 0);     // indexed by rank position

  for (std::size_t qi = 0; qi < sets.size(); ++qi) {
    const auto& a = sets[qi];
    if (a.empty())
      throw std::invalid_argument("common_neighbors_batch: empty set");
    int x = a[0];
    for (int v : a) {
      if (v < 0 || v >= n)
        throw std::out_of_range("common_neighbors_batch: bad vertex id");
      if (rank[v] < rank[x]) x = v;
      member[rank[v]] = 1;
    }
    // Forward phase: candidates after x are x's forward neighbors. For a
    // candidate v, edges from members before v are read off the scratch
    // counters; edges to members after v are found in v's forward array.
    for (int u : a)
      for (int f : fam.forward[u]) ++edge_count[rank[f]];
    for (int v : fam.forward[x]) {
      if (member[rank[v]]) continue;
      int have = edge_count[rank[v]];
      for (int f : fam.forward[v])
        if (member[rank[f]]) ++have;
      if (have == static_cast<int>(a.size())) answers[qi].push_back(v);
    }
    for (int u : a)
      for (int f : fam.forward[u]) --edge_count[rank[f]];
    for (int v : a) member[rank[v]] = 0;
  }
#ifndef NDEBUG
  for (int i = 0; i < n; ++i) assert(edge_count[i] == 0 && member[i] == 0);
#endif

  // Backward phase, one size class at a time: every vertex v contributes a
  // pair (S, v) for each size-l subset S of its forward neighborhood; a
  // vertex before x_i is a common neighbor of A_i exactly when it carries a
  // pair with S = A_i. Pairs are matched by LSD bucket sort on ranks.
  std::vector<std::size_t> sizes_present;
  for (const auto& a : sets)
    sizes_present.push_back(a.size());
  std::sort(sizes_present.begin(), sizes_present.end());
  sizes_present.erase(
      std::unique(sizes_present.begin(), sizes_present.end()),
      sizes_present.end());

  std::vector<int> keys;
  std::vector<SubsetPair> pairs;
  std::vector<int> subset;
  for (std::size_t l : sizes_present) {
    keys.clear();
    pairs.clear();
    for (std::size_t qi = 0; qi < sets.size(); ++qi) {
      if (sets[qi].size() != l) continue;
      std::vector<int> a(sets[qi]);
      std::sort(a.begin(), a.end(), RankLess{rank});
      pairs.push_back({static_cast<std::uint32_t>(keys.size()),
                       static_cast<std::int32_t>(~qi)});
      keys.insert(keys.end(), a.begin(), a.end());
    }
    if (pairs.empty()) continue;
    for (int v = 0; v < n; ++v) {
      const auto& fwd = fam.forward[v];
      if (fwd.size() < l) continue;
      // all l-subsets of fwd, lexicographic in rank order
      subset.assign(l, 0);
      for (std::size_t i = 0; i < l; ++i) subset[i] = static_cast<int>(i);
      while (true) {
        pairs.push_back({static_cast<std::uint32_t>(keys.size()),
                         static_cast<std::int32_t>(v)});
        for (std::size_t i = 0; i < l; ++i) keys.push_back(fwd[subset[i]]);
        int i = static_cast<int>(l) - 1;
        while (i >= 0 &&
               subset[i] == static_cast<int>(fwd.size() - l + i))
          --i;
        if (i < 0) break;
        ++subset[i];
        for (std::size_t j = i + 1; j < l; ++j) subset[j] = subset[j - 1] + 1;
      }
    }

    // LSD radix over the l rank positions.
    std::vector<std::uint32_t> perm(pairs.size()), next(pairs.size());
    for (std::size_t i = 0; i < perm.size(); ++i)
      perm[i] = static_cast<std::uint32_t>(i);
    std::vector<std::uint32_t> bucket_count(n + 1);
    for (int pos = static_cast<int>(l) - 1; pos >= 0; --pos) {
      std::fill(bucket_count.begin(), bucket_count.end(), 0);
      for (auto pi : perm)
        ++bucket_count[rank[keys[pairs[pi].key_begin + pos]] + 1];
      for (int b = 0; b < n; ++b) bucket_count[b + 1] += bucket_count[b];
      for (auto pi : perm)
        next[bucket_count[rank[keys[pairs[pi].key_begin + pos]]]++] = pi;
      std::swap(perm, next);
    }

    // Equal keys are now adjacent; hand each group's witnesses to its
    // queries.
    const auto same_key = [&](std::uint32_t p, std::uint32_t q) {
      for (std::size_t i = 0; i < l; ++i)
        if (keys[pairs[p].key_begin + i] != keys[pairs[q].key_begin + i])
          return false;
      return true;
    };
    std::size_t lo = 0;
    while (lo < perm.size()) {
      std::size_t hi = lo + 1;
      while (hi < perm.size() && same_key(perm[lo], perm[hi])) ++hi;
      std::vector<std::size_t> queries;
      std::vector<int> witnesses;
      for (std::size_t i = lo; i < hi; ++i) {
        const auto tag = pairs[perm[i]].tag;
        if (tag < 0) queries.push_back(static_cast<std::size_t>(~tag));
        else witnesses.push_back(tag);
      }
      for (auto qi : queries)
        answers[qi].insert(answers[qi].end(), witnesses.begin(),
                           witnesses.end());
      lo = hi;
    }
  }
  for (auto& b : answers) std::sort(b.begin(), b.end());
  return answers;
}

namespace {

// Common neighborhood by direct sorted-list intersection; used for the
// closure step where the set may be larger than k.
std::vector<int> common_neighbors_direct(const Graph& g,
                                         std::span<const int> s) {
  std::vector<int> acc(g.neighbors(s[0]).begin(), g.neighbors(s[0]).end());
  std::vector<int> tmp;
  for (std::size_t i = 1; i < s.size() && !acc.empty(); ++i) {
    tmp.clear();
    const auto nb = g.neighbors(s[i]);
    std::set_intersection(acc.begin(), acc.end(), nb.begin(), nb.end(),
                          std::back_inserter(tmp));
    acc.swap(tmp);
  }
  return acc;
}

constexpr int kSubsetEnumerationCap = 25;

// Sets per common_neighbors_batch call; bounds memory while keeping the
// shared backward phase amortized across many sets.
constexpr std::size_t kBatchChunk = std::size_t{1} << 18;

void check_subset_cap(const SubgraphFamily& fam) {
  int largest = fam.residual.num_vertices();
  for (const auto& sub : fam.subgraphs)
    largest = std::max(largest, sub.num_vertices());
  if (largest > kSubsetEnumerationCap)
    throw std::runtime_error(
        "subset enumeration limited to subgraphs of at most 25 vertices "
        "(degeneracy too large)");
}

}  // namespace

std::vector<Biclique> list_maximal_bicliques(const Graph& g) {
  const auto fam = build_family(g, degeneracy_ordering(g));
  check_subset_cap(fam);

  std::vector<Biclique> out;
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
  std::vector<std::vector<int>> sets;

  const auto flush = [&] {
    if (sets.empty()) return;
    const auto commons = common_neighbors_batch(g, fam, sets);
    for (std::size_t i = 0; i < sets.size(); ++i) {
      const auto& cs = commons[i];
      if (cs.empty()) continue;
      std::vector<int> s(sets[i]);
      std::sort(s.begin(), s.end());
      if (common_neighbors_direct(g, cs) != s) continue;  // S not closed
      auto lo = s, hi = cs;
      if (hi < lo) std::swap(lo, hi);
      if (seen.emplace(lo, hi).second)
        out.push_back({std::move(lo), std::move(hi)});
    }
    sets.clear();
  };

  // All nonempty subsets of every subgraph and of the residual, as global
  // id sets in rank order.
  const auto collect = [&](const LocalGraph& lg) {
    const int sz = lg.num_vertices();
    for (std::uint32_t mask = 1; mask < (1u << sz); ++mask) {
      auto& s = sets.emplace_back();
      for (int v = 0; v < sz; ++v)
        if (mask & (1u << v)) s.push_back(lg.global(v));
      if (sets.size() >= kBatchChunk) flush();
    }
  };
  for (const auto& sub : fam.subgraphs) collect(sub);
  collect(fam.residual);
  flush();
  return out;
}

namespace {

// Enumerates subsets of lg of size `want` in lexicographic local order;
// when `independent`, only pairwise non-adjacent subsets are produced.
void enumerate_subsets(const LocalGraph& lg, int want, bool independent,
                       const std::function<void(std::span<const int>)>& emit) {
  if (want > lg.num_vertices()) return;
  std::vector<int> chosen;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(chosen.size()) == want) {
      emit(chosen);
      return;
    }
    for (int v = start; v < lg.num_vertices(); ++v) {
      if (lg.num_vertices() - v < want - static_cast<int>(chosen.size()))
        break;
      if (independent) {
        bool ok = true;
        for (int u : chosen)
          if (lg.adjacent(u, v)) {
            ok = false;
            break;
          }
        if (!ok) continue;
      }
      chosen.push_back(v);
      rec(v + 1);
      chosen.pop_back();
    }
  };
  rec(0);
}

std::vector<int> to_global(const LocalGraph& lg, std::span<const int> local) {
  std::vector<int> out;
  out.reserve(local.size());
  for (int v : local) out.push_back(lg.global(v));
  return out;
}

// Exhaustive search for an independent set of size d among `pool` (global
// ids); pool is expected to be small (below the Ramsey threshold).
bool exhaustive_independent(const Graph& g, std::span<const int> pool, int d,
                            std::vector<int>& chosen, std::size_t start) {
  if (static_cast<int>(chosen.size()) == d) return true;
  for (std::size_t i = start; i < pool.size(); ++i) {
    if (pool.size() - i < static_cast<std::size_t>(d) - chosen.size())
      return false;
    bool ok = true;
    for (int u : chosen)
      if (g.has_edge(u, pool[i])) {
        ok = false;
        break;
      }
    if (!ok) continue;
    chosen.push_back(pool[i]);
    if (exhaustive_independent(g, pool, d, chosen, i + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

Biclique make_witness(std::vector<int> r_side, std::vector<int> l_side) {
  std::sort(r_side.begin(), r_side.end());
  std::sort(l_side.begin(), l_side.end());
  return {std::move(r_side), std::move(l_side)};
}

// Shared driver for both decision variants. The earliest-ranked biclique
// vertex sees the whole opposite side among its forward neighbors, so
// subsets of size r and l inside each subgraph (and the residual) cover all
// candidates. Subsets accumulate into chunks so the batch's backward phase
// is shared across many of them; the first witness in enumeration order
// wins, so results are deterministic.
std::optional<Biclique> solve_driver(
    const Graph& g, int r, int l, bool independent,
    const std::function<std::optional<std::vector<int>>(
        const std::vector<int>& common, int d)>& pick_opposite) {
  if (r < 1 || l < 1) throw std::invalid_argument("requires r, l >= 1");
  const auto fam = build_family(g, degeneracy_ordering(g));
  check_subset_cap(fam);

  std::vector<int> want_sizes{r};
  if (l != r) want_sizes.push_back(l);

  std::vector<std::vector<int>> sets;
  std::vector<int> need;  // required size of the opposite side
  std::optional<Biclique> result;

  const auto flush = [&] {
    if (sets.empty() || result) return;
    const auto commons = common_neighbors_batch(g, fam, sets);
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (static_cast<int>(commons[i].size()) < need[i]) continue;
      const auto other = pick_opposite(commons[i], need[i]);
      if (!other) continue;
      if (need[i] == r)
        result = make_witness(*other, sets[i]);
      else
        result = make_witness(sets[i], *other);
      break;
    }
    sets.clear();
    need.clear();
  };

  std::vector<const LocalGraph*> graphs;
  for (const auto& sub : fam.subgraphs) graphs.push_back(&sub);
  graphs.push_back(&fam.residual);
  for (const LocalGraph* lg : graphs) {
    if (result) break;
    for (int s : want_sizes) {
      enumerate_subsets(*lg, s, independent, [&](std::span<const int> local) {
        sets.push_back(to_global(*lg, local));
        need.push_back(s == l ? r : l);
        if (sets.size() >= kBatchChunk) flush();
      });
      if (result) break;
    }
  }
  flush();
  return result;
}

}  // namespace

std::optional<Biclique> solve_rl_biclique(const Graph& g, int r, int l) {
  return solve_driver(
      g, r, l, /*independent=*/false,
      [](const std::vector<int>& common,
         int d) -> std::optional<std::vector<int>> {
        return std::vector<int>(common.begin(), common.begin() + d);
      });
}

std::optional<Biclique> solve_induced_rl_biclique(const Graph& g, int r,
                                                  int l) {
  const int k = degeneracy_ordering(g).k;
  return solve_driver(
      g, r, l, /*independent=*/true,
      [&g, k](const std::vector<int>& cand,
              int d) -> std::optional<std::vector<int>> {
        // On overflow the bound dwarfs any |B| <= n, so the exhaustive
        // branch applies.
        const auto threshold = ramsey_threshold(k, d);
        if (!threshold || cand.size() <= *threshold) {
          std::vector<int> chosen;
          if (exhaustive_independent(g, cand, d, chosen, 0)) return chosen;
          return std::nullopt;
        }
        // Above the Ramsey bound an independent set of size d must exist,
        // and the greedy extraction is guaranteed to reach it.
        const auto sub = induced_subgraph(g, cand);
        const auto greedy = greedy_independent_set(sub.graph, d);
        assert(greedy.has_value());
        if (!greedy) return std::nullopt;
        std::vector<int> found;
        for (std::size_t j = 0;
             j < greedy->size() && found.size() < static_cast<std::size_t>(d);
             ++j)
          found.push_back(sub.to_global[(*greedy)[j]]);
        return found;
      });
}

std::optional<std::uint64_t> ramsey_threshold(int k, int d) {
  if (k < 0 || d < 1)
    throw std::invalid_argument("ramsey_threshold requires k >= 0, d >= 1");
  const std::uint64_t base = static_cast<std::uint64_t>(k) + d;
  std::uint64_t result = 1;
  for (int i = 0; i < k + 1; ++i) {
    if (base != 0 &&
        result > std::numeric_limits<std::uint64_t>::max() / base)
      return std::nullopt;
    result *= base;
  }
  return result;
}

std::optional<std::vector<int>> greedy_independent_set(const Graph& g,
                                                       int d) {
  const int n = g.num_vertices();
  std::vector<char> alive(n, 1);
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  int remaining = n;
  std::vector<int> picked;
  while (remaining > 0) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (alive[v] && (best == -1 || deg[v] < deg[best])) best = v;
    picked.push_back(best);
    // delete closed neighborhood
    std::vector<int> gone{best};
    for (int u : g.neighbors(best))
      if (alive[u]) gone.push_back(u);
    for (int u : gone) {
      alive[u] = 0;
      --remaining;
    }
    for (int u : gone)
      for (int w : g.neighbors(u))
        if (alive[w]) --deg[w];
  }
  if (static_cast<int>(picked.size()) < d) return std::nullopt;
  return picked;
}

}  // namespace kdeg
