#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "loopcut/digraph.hpp"
#include "loopcut/multigraph.hpp"
#include "loopcut/solvers.hpp"

namespace loopcut {

/// Bijection between network vertices and their split counterparts.
/// Network vertex v maps to v_in (infinite weight, carries the in-edges) and
/// v_out (weight ln(domain), carries the out-edges), joined by one edge.
struct SplitMap {
  enum class Side { In, Out };
  struct Origin {
    VertexId network_vertex;
    Side side;
  };

  std::vector<VertexId> in_of;   // network id -> split id
  std::vector<VertexId> out_of;  // network id -> split id
  std::vector<Weight> network_weight;

  std::size_t network_size() const { return in_of.size(); }
  Origin origin(VertexId split_vertex) const;
};

/// Splitting reduction. The result has 2n vertices and m+n edges, and its
/// cycles correspond one-to-one with the loops of d.
/// Throws std::invalid_argument on cyclic input.
std::pair<WeightedMultigraph, SplitMap> split(const DirectedNetwork& d);

/// Collapses split vertices back to their originating network vertices.
/// Result weights are the network ln-domain weights.
VertexSet psi(const VertexSet& x, const SplitMap& map);

/// True iff s contains an allowed (non-sink) vertex of every loop of d,
/// tested as: split(d) minus {v_out : v in s} is a forest.
bool is_loop_cutset(const DirectedNetwork& d, const VertexSet& s);

struct LoopCutsetOptions {
  bool skip_phase2 = false;     // MGA only
  int exact_max_vertices = 25;  // exact only: network vertex budget
  std::uint64_t exact_max_nodes = 50'000'000;
};

/// Full pipeline: split, solve with the chosen algorithm, map back through
/// psi. The result is validated against is_loop_cutset and carries the
/// instance count (product of the cutset's domain sizes).
SolveResult loop_cutset(const DirectedNetwork& d, Algorithm algorithm,
                        const LoopCutsetOptions& options = {});

}  // namespace loopcut
