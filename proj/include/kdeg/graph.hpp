#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kdeg {

/// Thrown on malformed input; the message carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Immutable simple undirected graph. Vertex ids are dense integers 0..n-1,
/// adjacency lists are sorted ascending and symmetric. Safe to read from
/// multiple threads once constructed.
class Graph {
 public:
  Graph() = default;

  // Self-loops and duplicate edges are dropped; *dropped, if non-null,
  // receives the number of dropped input records.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                          std::size_t* dropped = nullptr);

  int num_vertices() const { return n_; }
  std::size_t num_edges() const { return m_; }
  std::span<const int> neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;

  /// Edges as (u, v) pairs with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

 private:
  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::vector<int>> adj_;
};

enum class GraphFormat { EdgeList, Dimacs };

struct LoadResult {
  Graph graph;
  std::size_t dropped_records = 0;  // self-loops + duplicate edges in input
};

/// Reads a graph from a stream.
///
/// Edge list: one edge per line, two whitespace-separated non-negative
/// integers; lines starting with '#' and blank lines are ignored; n is the
/// largest mentioned id + 1. DIMACS: a 'p edge N M' header, 'c' comment
/// lines, and 1-based 'e u v' lines (shifted to 0-based on load).
LoadResult load_graph(std::istream& in, GraphFormat format);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_global;  // local id -> original id, ascending
};

/// G[s] with vertices relabeled 0..|s|-1 in ascending id order.
/// Throws std::out_of_range if s contains an id outside 0..n-1.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> s);

}  // namespace kdeg
