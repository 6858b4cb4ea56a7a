#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "kdeg/subgraph_family.hpp"

namespace kdeg {

/// A clique encoded as its vertex ids sorted by degeneracy rank.
using CliqueWord = std::vector<int>;

/// Emits every maximal clique of g exactly once, as ascending local ids.
/// The pivot maximizes |P ∩ N(pivot)| over P ∪ X; candidate sets are kept
/// sorted, so the emission order is deterministic. The zero-vertex graph
/// yields the empty clique.
void bron_kerbosch_pivot(
    const LocalGraph& g,
    const std::function<void(std::span<const int>)>& emit);

struct GraphCounters {
  std::uint64_t accepted = 0;
  std::uint64_t rejected = 0;
};

struct RejectionWitness {
  std::size_t graph_index;  // index of the rejected candidate's subgraph
  CliqueWord candidate;
  CliqueWord witness;  // earlier accepted word with candidate as proper suffix
};

struct PipelineStats {
  double family_ms = 0;  // ordering + subgraph family construction
  double bk_ms = 0;      // Bron-Kerbosch enumeration
  double dedup_ms = 0;   // word assembly, suffix queries and insertions
  double total_ms = 0;
};

struct CliqueEnumOptions {
  // Skip all suffix queries for a subgraph G_i when no stored suffix starts
  // with v_i. Pure optimization; results are identical either way.
  bool root_letter_skip = true;
  // Retain accepted words, record a containing witness for every rejection
  // and verify that no query word ever equals a stored full word.
  bool debug_witnesses = false;
  PipelineStats* stats = nullptr;
};

struct MaximalCliqueReport {
  std::vector<CliqueWord> cliques;
  std::vector<GraphCounters> per_graph;  // one per subgraph, residual last
  std::vector<RejectionWitness> witnesses;  // debug mode only
  // debug mode only: every candidate word with its producing graph index
  std::vector<std::pair<std::size_t, CliqueWord>> candidates;
};

/// Streams the maximal cliques of g in deterministic order: subgraphs G_1..
/// G_{n-k} in index order, then the residual graph. Candidates that are
/// proper suffixes of an earlier accepted clique word are rejected; accepted
/// words from the subgraphs are inserted into a generalized suffix tree,
/// residual words are only queried. Returns the number of cliques emitted.
/// The pipeline is inherently sequential: acceptance of a clique depends on
/// every earlier-indexed accepted clique being indexed first.
std::uint64_t for_each_maximal_clique(
    const Graph& g, const std::function<void(std::span<const int>)>& emit,
    const CliqueEnumOptions& opts = {});

MaximalCliqueReport list_maximal_cliques(const Graph& g,
                                         const CliqueEnumOptions& opts = {});

std::uint64_t count_maximal_cliques(const Graph& g,
                                    const CliqueEnumOptions& opts = {});

}  // namespace kdeg
