#include "kdeg/subgraph_family.hpp"

#include <algorithm>
#include <utility>

namespace kdeg {

LocalGraph::LocalGraph(int owner, std::vector<int> members,
                       std::vector<std::vector<int>> adj, int bit_cap)
    : owner_(owner),
      nv_(static_cast<int>(members.size())),
      global_(std::move(members)),
      adj_(std::move(adj)) {
  std::size_t deg_sum = 0;
  for (const auto& lst : adj_) deg_sum += lst.size();
  ne_ = deg_sum / 2;
  if (nv_ > 0 && nv_ <= bit_cap) {
    row_words_ = (nv_ + 63) / 64;
    bits_.assign(static_cast<std::size_t>(row_words_) * nv_, 0);
    for (int a = 0; a < nv_; ++a)
      for (int b : adj_[a])
        bits_[static_cast<std::size_t>(a) * row_words_ + b / 64] |=
            std::uint64_t{1} << (b % 64);
  }
}

LocalGraph LocalGraph::from_graph(const Graph& g, int bit_cap) {
  const int n = g.num_vertices();
  std::vector<int> members(n);
  std::vector<std::vector<int>> adj(n);
  for (int v = 0; v < n; ++v) {
    members[v] = v;
    adj[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
  }
  return LocalGraph(-1, std::move(members), std::move(adj), bit_cap);
}

bool LocalGraph::adjacent(int a, int b) const {
  if (a == b) return false;
  if (row_words_ > 0)
    return (bits_[static_cast<std::size_t>(a) * row_words_ + b / 64] >>
            (b % 64)) &
           1;
  return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

SubgraphFamily build_family(const Graph& g, DegeneracyOrdering ord,
                            FamilyOptions opts) {
  const int n = g.num_vertices();
  SubgraphFamily fam;
  fam.ordering = std::move(ord);
  const auto& rank = fam.ordering.rank;
  const int k = fam.ordering.k;

  fam.forward.assign(n, {});
  for (int v = 0; v < n; ++v) {
    auto& d = fam.forward[v];
    for (int u : g.neighbors(v))
      if (rank[u] > rank[v]) d.push_back(u);
    std::sort(d.begin(), d.end(),
              [&rank](int a, int b) { return rank[a] < rank[b]; });
  }

  const int num_sub = std::max(0, n - k);
  fam.subgraphs.reserve(num_sub);
  for (int i = 0; i < num_sub; ++i) {
    const int vi = fam.ordering.order[i];
    const auto& members = fam.forward[vi];  // rank-sorted == local id order
    const int sz = static_cast<int>(members.size());
    std::vector<std::vector<int>> adj(sz);
    // Edge (j, j') exists iff members[j'] appears in the forward array of
    // members[j]; both sequences are rank-sorted so one merge suffices.
    for (int j = 0; j < sz; ++j) {
      const auto& dj = fam.forward[members[j]];
      std::size_t p = 0;
      for (int jp = j + 1; jp < sz; ++jp) {
        const int target_rank = rank[members[jp]];
        while (p < dj.size() && rank[dj[p]] < target_rank) ++p;
        if (p == dj.size()) break;
        if (rank[dj[p]] == target_rank) {
          adj[j].push_back(jp);
          adj[jp].push_back(j);
          ++p;
        }
      }
    }
    fam.subgraphs.emplace_back(vi, members, std::move(adj),
                               opts.bit_matrix_cap);
  }

  // Residual: the last min(k, n) vertices of the ordering.
  const int res_sz = n - num_sub;
  std::vector<int> res_members(res_sz);
  for (int j = 0; j < res_sz; ++j)
    res_members[j] = fam.ordering.order[num_sub + j];
  std::vector<std::vector<int>> res_adj(res_sz);
  for (int j = 0; j < res_sz; ++j) {
    for (int f : fam.forward[res_members[j]]) {
      const int jp = rank[f] - num_sub;
      res_adj[j].push_back(jp);
      res_adj[jp].push_back(j);
    }
  }
  for (auto& lst : res_adj) std::sort(lst.begin(), lst.end());
  fam.residual = LocalGraph(-1, std::move(res_members), std::move(res_adj),
                            opts.bit_matrix_cap);
  return fam;
}

}  // namespace kdeg
