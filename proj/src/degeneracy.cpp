#include "kdeg/degeneracy.hpp"

#include <algorithm>
#include <functional>

namespace kdeg {

DegeneracyOrdering degeneracy_ordering(const Graph& g) {
  const int n = g.num_vertices();
  DegeneracyOrdering out;
  out.order.reserve(n);
  out.rank.assign(n, -1);
  if (n == 0) return out;

  std::vector<int> deg(n);
  int max_deg = 0;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    max_deg = std::max(max_deg, deg[v]);
  }

  // bucket[d] is a min-heap on vertex id; entries go stale when a vertex's
  // degree drops, so pops skip anything whose recorded degree no longer
  // matches. Each vertex is pushed at most deg(v)+1 times.
  std::vector<std::vector<int>> bucket(max_deg + 1);
  for (int v = n - 1; v >= 0; --v) bucket[deg[v]].push_back(v);
  for (auto& b : bucket) std::make_heap(b.begin(), b.end(), std::greater<>());

  std::vector<char> removed(n, 0);
  int cur = 0;
  for (int step = 0; step < n; ++step) {
    int v = -1;
    while (true) {
      while (cur <= max_deg && bucket[cur].empty()) ++cur;
      auto& b = bucket[cur];
      int top = b.front();
      std::pop_heap(b.begin(), b.end(), std::greater<>());
      b.pop_back();
      if (!removed[top] && deg[top] == cur) {
        v = top;
        break;
      }
    }
    out.k = std::max(out.k, cur);
    out.rank[v] = step;
    out.order.push_back(v);
    removed[v] = 1;
    for (int u : g.neighbors(v)) {
      if (removed[u]) continue;
      --deg[u];
      auto& b = bucket[deg[u]];
      b.push_back(u);
      std::push_heap(b.begin(), b.end(), std::greater<>());
      cur = std::min(cur, deg[u]);
    }
  }
  return out;
}

}  // namespace kdeg
