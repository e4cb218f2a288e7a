#pragma once

#include <cstdint>
#include <vector>

#include "loopcut/digraph.hpp"
#include "loopcut/multigraph.hpp"
#include "loopcut/solvers.hpp"

namespace loopcut {

struct OracleBudget {
  int max_vertices = 25;
  std::uint64_t max_nodes = 50'000'000;
};

/// Exact minimum-weight feedback vertex set by branch and bound: prune
/// leaves, find a short cycle, branch on including each of its finite-weight
/// vertices, bound by the best weight so far.
///
/// Throws BudgetExceededError when g has more than budget.max_vertices alive
/// vertices or the search expands more than budget.max_nodes nodes, and
/// UnbreakableCycleError when some cycle has no finite-weight vertex.
SolveResult min_wvfs(const WeightedMultigraph& g, const OracleBudget& budget = {});

/// Independent exhaustive-subset oracle (n <= 20). Checks every subset of
/// the alive vertices; used to cross-check min_wvfs.
SolveResult min_wvfs_exhaustive(const WeightedMultigraph& g);

/// Exact minimum-weight loop cutset: min_wvfs on the split graph, mapped
/// back through psi. budget.max_vertices counts network vertices.
SolveResult min_loop_cutset(const DirectedNetwork& d, const OracleBudget& budget = {});

/// All inclusion-minimal feedback vertex sets of g (n <= 12), in increasing
/// subset-mask order. Throws std::length_error when more than cap exist.
std::vector<VertexSet> enumerate_minimal_fvs(const WeightedMultigraph& g,
                                             std::size_t cap);

}  // namespace loopcut
