#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "loopcut/multigraph.hpp"

namespace loopcut {

enum class Algorithm { Ga, Mga, Exact };

const char* to_string(Algorithm a);
std::optional<Algorithm> algorithm_from_string(std::string_view s);

/// One greedy selection step: the chosen vertex, its ratio c_i = w_i/d_i, and
/// every edge removed during the step (the vertex's own incident edges first,
/// then the degree-0/1 pruning cascade) in removal order.
struct IterationRecord {
  std::uint32_t index = 0;  // 1-based
  VertexId selected = kNoVertex;
  double ratio = 0.0;
  std::vector<EdgeId> removed_edges;
};

/// Charge bookkeeping of a greedy run. Edges removed while forming the
/// working graph (before the first selection) carry no charge and are listed
/// in initial_pruned; every surviving edge is charged exactly once, at the
/// ratio of the iteration that removed it. edge_charge is indexed by edge id;
/// NaN marks an uncharged slot.
struct ChargeLedger {
  std::vector<double> edge_charge;
  std::vector<EdgeId> initial_pruned;
  std::vector<IterationRecord> iterations;
};

struct SolveResult {
  VertexSet set;
  ChargeLedger trace;
  /// Picks dropped by the redundancy-removal phase, in processing order
  /// (reverse selection order). Empty for GA and exact solves.
  std::vector<VertexId> phase2_removed;
  /// Set for loop-cutset solves: sum of ln(domain) over the cutset, and the
  /// exact product of domain sizes when it fits into 64 bits.
  std::optional<double> instance_count_log;
  std::optional<std::uint64_t> instance_count;

  Weight total_weight() const { return set.total_weight(); }
};

/// Greedy feedback-vertex-set approximation: repeatedly selects the vertex
/// minimizing weight/degree (ties broken by lowest id), removes it, and
/// prunes degree-0/1 vertices. Output weight is within 2(ln d + 1) of the
/// optimum, d being the working graph's maximum degree.
///
/// Throws UnbreakableCycleError when cycles remain but every remaining
/// vertex has infinite weight.
SolveResult run_ga(const WeightedMultigraph& g);

/// Modified greedy: like run_ga, but every removed edge's charge is
/// subtracted from the working weight of its surviving endpoints, and a
/// second phase drops redundant picks in reverse selection order. The result
/// is a minimal feedback vertex set of weight at most twice the optimum.
SolveResult run_mga(const WeightedMultigraph& g, bool skip_phase2 = false);

/// True iff f meets every cycle of g (removing f leaves a forest).
bool verify_fvs(const WeightedMultigraph& g, const VertexSet& f);

/// True iff f is an inclusion-minimal feedback vertex set.
/// Throws std::invalid_argument when f is not a feedback vertex set at all.
bool is_minimal_fvs(const WeightedMultigraph& g, const VertexSet& f);

/// Redundancy removal: processes picks in reverse order, dropping each whose
/// remaining companions still form a feedback vertex set. Returns the kept
/// picks in their original order. picks must form a feedback vertex set.
///
/// Incremental union-find implementation, O(m alpha(n)).
std::vector<VertexId> drop_redundant_picks(const WeightedMultigraph& g,
                                           const std::vector<VertexId>& picks);

/// Reference implementation of drop_redundant_picks that re-tests the forest
/// property from scratch per candidate. Always produces the same result.
std::vector<VertexId> drop_redundant_picks_rescan(const WeightedMultigraph& g,
                                                  const std::vector<VertexId>& picks);

/// Sum of charges over the edges incident to v in the charged (post-prune)
/// graph, counting a self-loop twice. For a selected vertex this equals its
/// original weight; for every other vertex it never exceeds it.
double incident_charge_sum(const WeightedMultigraph& g, const ChargeLedger& ledger,
                           VertexId v);

}  // namespace loopcut
