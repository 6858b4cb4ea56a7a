#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "kdeg/subgraph_family.hpp"

namespace kdeg {

struct VertexCoverResult {
  std::vector<int> cover;  // id-sorted; every edge has an endpoint here
  // Optimal LP relaxation value in half units (the LP optimum is
  // half-integral), so lp_half_units / 2 <= minimum vertex cover size.
  std::uint64_t lp_half_units = 0;

  double lp_lower_bound() const { return lp_half_units / 2.0; }
  double ratio_certificate() const {
    return lp_half_units == 0 ? 1.0
                              : 2.0 * cover.size() / lp_half_units;
  }
};

/// (2 - 1/k)-approximate minimum vertex cover for a k-degenerate graph.
/// Computes the half-integral LP optimum by maximum matching on the
/// bipartite double cover, takes the 1-valued vertices, properly colors the
/// subgraph induced on the 1/2-valued vertices along its own degeneracy
/// ordering with at most k'+1 colors, and adds all 1/2-vertices except the
/// largest color class. The resulting ratio 2 - 2/(k'+1) is at most 2 - 1/k
/// for every k >= 1.
VertexCoverResult vertex_cover_approx(const Graph& g);

/// Exact maximum clique: Bron-Kerbosch with max tracking and size pruning
/// on every G_i^+ and the residual graph, returning the largest. threads
/// splits the per-subgraph runs across workers (the result is identical).
std::vector<int> max_clique_exact(const Graph& g, int threads = 1);

/// A pluggable maximum-clique routine for small graphs: maps a LocalGraph
/// to a clique of it (local ids) and declares its approximation ratio.
struct CliqueSolver {
  std::string name;
  double ratio = 1.0;
  std::function<std::vector<int>(const LocalGraph&)> solve;
};

CliqueSolver exact_clique_solver();

/// Repeatedly adds the highest-degree vertex compatible with the clique so
/// far (smallest id on ties). Declares ratio 0, meaning no guarantee.
CliqueSolver greedy_clique_solver();

/// Runs the solver on every G_i^+ (G_i plus v_i joined to all of it) and on
/// the residual graph, returning the largest clique found. The result
/// inherits the solver's approximation ratio. Throws std::logic_error if
/// the solver emits a non-clique.
std::vector<int> max_clique_approx(const Graph& g, const CliqueSolver& solver,
                                   int threads = 1);

}  // namespace kdeg
