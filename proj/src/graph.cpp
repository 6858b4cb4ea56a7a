#include "kdeg/graph.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <limits>
#include <sstream>

namespace kdeg {

namespace {

constexpr long long kMaxVertexId = std::numeric_limits<int>::max() - 1;

// Parses a non-negative integer token no larger than cap.
long long parse_number(const std::string& tok, std::size_t line,
                       long long cap, const char* overflow_msg) {
  if (tok.empty()) throw ParseError(line, "empty number");
  long long value = 0;
  for (char c : tok) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError(line, "expected non-negative integer, got '" + tok + "'");
    value = value * 10 + (c - '0');
    if (value > cap) throw ParseError(line, overflow_msg);
  }
  return value;
}

long long parse_id(const std::string& tok, std::size_t line) {
  return parse_number(tok, line, kMaxVertexId, "vertex id overflow");
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream iss(s);
  std::string tok;
  while (iss >> tok) out.push_back(tok);
  return out;
}

}  // namespace

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                        std::size_t* dropped) {
  Graph g;
  g.n_ = n;
  g.adj_.assign(n, {});
  std::size_t drop = 0;
  for (auto [u, v] : edges) {
    if (u == v) {
      ++drop;
      continue;
    }
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  std::size_t deg_sum = 0;
  for (auto& lst : g.adj_) {
    std::sort(lst.begin(), lst.end());
    auto last = std::unique(lst.begin(), lst.end());
    drop += static_cast<std::size_t>(lst.end() - last);
    lst.erase(last, lst.end());
    deg_sum += lst.size();
  }
  // Each duplicate record was counted once per direction.
  std::size_t loop_drops = 0;
  for (auto [u, v] : edges)
    if (u == v) ++loop_drops;
  drop = loop_drops + (drop - loop_drops) / 2;
  g.m_ = deg_sum / 2;
  if (dropped) *dropped = drop;
  return g;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  const auto& lst = adj_[u];
  return std::binary_search(lst.begin(), lst.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

LoadResult load_graph(std::istream& in, GraphFormat format) {
  std::vector<std::pair<int, int>> edges;
  std::string line;
  std::size_t lineno = 0;

  if (format == GraphFormat::EdgeList) {
    long long max_id = -1;
    while (std::getline(in, line)) {
      ++lineno;
      auto toks = split_ws(line);
      if (toks.empty() || toks[0][0] == '#') continue;
      if (toks.size() != 2)
        throw ParseError(lineno, "expected two vertex ids");
      long long u = parse_id(toks[0], lineno);
      long long v = parse_id(toks[1], lineno);
      max_id = std::max({max_id, u, v});
      edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    LoadResult res;
    res.graph = Graph::from_edges(static_cast<int>(max_id + 1), edges,
                                  &res.dropped_records);
    return res;
  }

  // DIMACS
  long long n = -1;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = split_ws(line);
    if (toks.empty() || toks[0] == "c") continue;
    if (toks[0] == "p") {
      if (n >= 0) throw ParseError(lineno, "duplicate problem line");
      if (toks.size() != 4 || toks[1] != "edge")
        throw ParseError(lineno, "expected 'p edge N M'");
      n = parse_id(toks[2], lineno);
      const auto m_declared = parse_number(
          toks[3], lineno, std::numeric_limits<long long>::max() / 16,
          "edge count overflow");
      edges.reserve(std::min<long long>(m_declared, 1 << 26));
    } else if (toks[0] == "e") {
      if (n < 0) throw ParseError(lineno, "edge before problem line");
      if (toks.size() != 3) throw ParseError(lineno, "expected 'e u v'");
      long long u = parse_id(toks[1], lineno);
      long long v = parse_id(toks[2], lineno);
      if (u < 1 || v < 1 || u > n || v > n)
        throw ParseError(lineno, "vertex id outside 1..N");
      edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
    } else {
      throw ParseError(lineno, "unrecognized line type '" + toks[0] + "'");
    }
  }
  if (n < 0) throw ParseError(lineno, "missing problem line");
  LoadResult res;
  res.graph =
      Graph::from_edges(static_cast<int>(n), edges, &res.dropped_records);
  return res;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> s) {
  for (int v : s)
    if (v < 0 || v >= g.num_vertices())
      throw std::out_of_range("induced_subgraph: vertex id out of range");
  InducedSubgraph out;
  out.to_global.assign(s.begin(), s.end());
  std::sort(out.to_global.begin(), out.to_global.end());
  out.to_global.erase(
      std::unique(out.to_global.begin(), out.to_global.end()),
      out.to_global.end());
  const int nv = static_cast<int>(out.to_global.size());
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < nv; ++a)
    for (int b = a + 1; b < nv; ++b)
      if (g.has_edge(out.to_global[a], out.to_global[b]))
        edges.emplace_back(a, b);
  out.graph = Graph::from_edges(nv, edges);
  return out;
}

}  // namespace kdeg
