#include "kdeg/approx.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <thread>

namespace kdeg {

namespace {

// Hopcroft-Karp maximum matching on a bipartite graph given as left-side
// adjacency. Returns matched partner per side (-1 when unmatched).
struct Matching {
  std::vector<int> left;   // left vertex -> right partner
  std::vector<int> right;  // right vertex -> left partner
};

Matching hopcroft_karp(const std::vector<std::vector<int>>& adj,
                       int n_right) {
  const int n_left = static_cast<int>(adj.size());
  constexpr int kInf = std::numeric_limits<int>::max();
  Matching m{std::vector<int>(n_left, -1), std::vector<int>(n_right, -1)};
  std::vector<int> dist(n_left);

  auto bfs = [&]() {
    std::queue<int> q;
    for (int u = 0; u < n_left; ++u) {
      if (m.left[u] == -1) {
        dist[u] = 0;
        q.push(u);
      } else {
        dist[u] = kInf;
      }
    }
    bool found = false;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : adj[u]) {
        const int w = m.right[v];
        if (w == -1) {
          found = true;
        } else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  };

  std::function<bool(int)> dfs = [&](int u) {
    for (int v : adj[u]) {
      const int w = m.right[v];
      if (w == -1 || (dist[w] == dist[u] + 1 && dfs(w))) {
        m.left[u] = v;
        m.right[v] = u;
        return true;
      }
    }
    dist[u] = kInf;
    return false;
  };

  while (bfs()) {
    for (int u = 0; u < n_left; ++u)
      if (m.left[u] == -1) dfs(u);
  }
  return m;
}

// Minimum vertex cover of the bipartite graph via Koenig's theorem:
// Z = vertices reachable by alternating paths from unmatched left vertices;
// the cover is (L \ Z) ∪ (R ∩ Z).
std::pair<std::vector<char>, std::vector<char>> koenig_cover(
    const std::vector<std::vector<int>>& adj, int n_right,
    const Matching& m) {
  const int n_left = static_cast<int>(adj.size());
  std::vector<char> z_left(n_left, 0), z_right(n_right, 0);
  std::queue<int> q;
  for (int u = 0; u < n_left; ++u)
    if (m.left[u] == -1) {
      z_left[u] = 1;
      q.push(u);
    }
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int v : adj[u]) {
      if (v == m.left[u] || z_right[v]) continue;
      z_right[v] = 1;
      const int w = m.right[v];
      if (w != -1 && !z_left[w]) {
        z_left[w] = 1;
        q.push(w);
      }
    }
  }
  std::vector<char> cover_left(n_left), cover_right(n_right);
  for (int u = 0; u < n_left; ++u) cover_left[u] = !z_left[u];
  for (int v = 0; v < n_right; ++v) cover_right[v] = z_right[v];
  return {cover_left, cover_right};
}

// Max clique of a LocalGraph via Bron-Kerbosch with size pruning.
void max_clique_rec(const LocalGraph& g, std::vector<int>& r,
                    std::vector<int> p, std::vector<int>& best) {
  if (r.size() + p.size() <= best.size()) return;
  if (p.empty()) {
    best = r;
    return;
  }
  int pivot = -1;
  std::size_t best_cnt = 0;
  for (int u : p) {
    const auto nu = g.neighbors(u);
    std::size_t cnt = 0;
    std::size_t i = 0, j = 0;
    while (i < p.size() && j < nu.size()) {
      if (p[i] < nu[j]) ++i;
      else if (p[i] > nu[j]) ++j;
      else { ++cnt; ++i; ++j; }
    }
    if (pivot == -1 || cnt > best_cnt) {
      best_cnt = cnt;
      pivot = u;
    }
  }
  std::vector<int> ext;
  const auto np = g.neighbors(pivot);
  std::set_difference(p.begin(), p.end(), np.begin(), np.end(),
                      std::back_inserter(ext));
  for (int v : ext) {
    const auto nv = g.neighbors(v);
    std::vector<int> np2;
    std::set_intersection(p.begin(), p.end(), nv.begin(), nv.end(),
                          std::back_inserter(np2));
    r.push_back(v);
    max_clique_rec(g, r, std::move(np2), best);
    r.pop_back();
    p.erase(std::lower_bound(p.begin(), p.end(), v));
    if (r.size() + p.size() <= best.size()) return;
  }
}

std::vector<int> max_clique_local(const LocalGraph& g) {
  std::vector<int> p(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) p[v] = v;
  std::vector<int> r, best;
  max_clique_rec(g, r, std::move(p), best);
  return best;
}

// Builds G_i^+ = G_i plus the owner joined to every member; local id 0 is
// the owner, members shift by one (rank order is preserved).
LocalGraph plus_graph(const LocalGraph& sub) {
  const int nv = sub.num_vertices();
  std::vector<int> members(nv + 1);
  members[0] = sub.owner();
  for (int v = 0; v < nv; ++v) members[v + 1] = sub.global(v);
  std::vector<std::vector<int>> adj(nv + 1);
  for (int v = 1; v <= nv; ++v) adj[0].push_back(v);
  for (int v = 0; v < nv; ++v) {
    adj[v + 1].push_back(0);
    for (int w : sub.neighbors(v)) adj[v + 1].push_back(w + 1);
  }
  return LocalGraph(sub.owner(), std::move(members), std::move(adj), 1024);
}

void validate_clique(const LocalGraph& g, const std::vector<int>& c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 0 || c[i] >= g.num_vertices())
      throw std::logic_error("solver returned an invalid vertex");
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (!g.adjacent(c[i], c[j]))
        throw std::logic_error("solver returned a non-clique");
  }
}

// Runs `run` over all family graphs (subgraphs then residual), keeping the
// largest result; ties go to the earliest graph. With threads > 1 the
// subgraphs are split across workers and reduced in index order.
std::vector<int> best_over_family(
    const SubgraphFamily& fam, int threads,
    const std::function<std::vector<int>(const LocalGraph&, bool)>& run) {
  const std::size_t ns = fam.subgraphs.size();
  std::vector<int> best;
  if (threads <= 1 || ns < 2) {
    for (const auto& sub : fam.subgraphs) {
      auto c = run(sub, false);
      if (c.size() > best.size()) best = std::move(c);
    }
  } else {
    const int nt = static_cast<int>(std::min<std::size_t>(threads, ns));
    std::vector<std::vector<int>> partial(nt);
    std::vector<std::exception_ptr> errors(nt);
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t) {
      pool.emplace_back([&, t] {
        try {
          const std::size_t lo = ns * t / nt, hi = ns * (t + 1) / nt;
          for (std::size_t i = lo; i < hi; ++i) {
            auto c = run(fam.subgraphs[i], false);
            if (c.size() > partial[t].size()) partial[t] = std::move(c);
          }
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
    for (auto& c : partial)
      if (c.size() > best.size()) best = std::move(c);
  }
  if (fam.residual.num_vertices() > 0) {
    auto c = run(fam.residual, true);
    if (c.size() > best.size()) best = std::move(c);
  }
  return best;
}

}  // namespace

VertexCoverResult vertex_cover_approx(const Graph& g) {
  const int n = g.num_vertices();
  VertexCoverResult result;

  // LP relaxation via the bipartite double cover: edge uv becomes
  // (L_u, R_v) and (L_v, R_u); x_v = (covered copies of v) / 2.
  std::vector<std::vector<int>> dc(n);
  for (int u = 0; u < n; ++u)
    for (int v : g.neighbors(u)) dc[u].push_back(v);
  const auto matching = hopcroft_karp(dc, n);
  const auto [cover_left, cover_right] = koenig_cover(dc, n, matching);

  std::vector<int> half;  // x_v = 1/2
  for (int v = 0; v < n; ++v) {
    const int units = cover_left[v] + cover_right[v];
    result.lp_half_units += units;
    if (units == 2) result.cover.push_back(v);
    else if (units == 1) half.push_back(v);
  }

  if (!half.empty()) {
    // Color G[half] greedily in reverse degeneracy order; every vertex sees
    // at most k' colored neighbors, so k'+1 colors suffice.
    const auto sub = induced_subgraph(g, half);
    const auto ord = degeneracy_ordering(sub.graph);
    const int nh = sub.graph.num_vertices();
    std::vector<int> color(nh, -1);
    int num_colors = 0;
    std::vector<char> used;
    for (int i = nh - 1; i >= 0; --i) {
      const int v = ord.order[i];
      used.assign(nh + 1, 0);
      for (int u : sub.graph.neighbors(v))
        if (color[u] >= 0) used[color[u]] = 1;
      int c = 0;
      while (used[c]) ++c;
      color[v] = c;
      num_colors = std::max(num_colors, c + 1);
    }
    std::vector<int> class_size(num_colors, 0);
    for (int v = 0; v < nh; ++v) ++class_size[color[v]];
    const int drop = static_cast<int>(
        std::max_element(class_size.begin(), class_size.end()) -
        class_size.begin());
    for (int v = 0; v < nh; ++v)
      if (color[v] != drop) result.cover.push_back(sub.to_global[v]);
  }
  std::sort(result.cover.begin(), result.cover.end());
  return result;
}

std::vector<int> max_clique_exact(const Graph& g, int threads) {
  if (g.num_vertices() == 0) return {};
  const auto fam = build_family(g, degeneracy_ordering(g));
  return best_over_family(
      fam, threads, [](const LocalGraph& lg, bool residual) {
        auto c = max_clique_local(lg);
        std::vector<int> out;
        if (!residual) out.push_back(lg.owner());
        for (int v : c) out.push_back(lg.global(v));
        std::sort(out.begin(), out.end());
        return out;
      });
}

CliqueSolver exact_clique_solver() {
  return {"exact", 1.0, [](const LocalGraph& g) { return max_clique_local(g); }};
}

CliqueSolver greedy_clique_solver() {
  return {"greedy", 0.0, [](const LocalGraph& g) {
            std::vector<int> cand(g.num_vertices());
            for (int v = 0; v < g.num_vertices(); ++v) cand[v] = v;
            std::vector<int> clique;
            while (!cand.empty()) {
              int pick = cand[0];
              for (int v : cand)
                if (g.degree(v) > g.degree(pick)) pick = v;
              clique.push_back(pick);
              std::vector<int> next;
              for (int v : cand)
                if (v != pick && g.adjacent(v, pick)) next.push_back(v);
              cand.swap(next);
            }
            return clique;
          }};
}

std::vector<int> max_clique_approx(const Graph& g, const CliqueSolver& solver,
                                   int threads) {
  if (!solver.solve) throw std::invalid_argument("solver has no callable");
  if (g.num_vertices() == 0) return {};
  const auto fam = build_family(g, degeneracy_ordering(g));
  return best_over_family(
      fam, threads, [&solver](const LocalGraph& lg, bool residual) {
        const LocalGraph target = residual ? lg : plus_graph(lg);
        auto c = solver.solve(target);
        validate_clique(target, c);
        std::vector<int> out;
        out.reserve(c.size());
        for (int v : c) out.push_back(target.global(v));
        std::sort(out.begin(), out.end());
        return out;
      });
}

}  // namespace kdeg
