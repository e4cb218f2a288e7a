#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "loopcut/weight.hpp"

namespace loopcut {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr VertexId kNoVertex = static_cast<VertexId>(-1);
inline constexpr EdgeId kNoEdge = static_cast<EdgeId>(-1);

/// Duplicate-free set of vertex ids, kept sorted, tracking total weight.
class VertexSet {
 public:
  VertexSet() = default;

  /// Inserts v with weight w; returns false (and adds nothing) if present.
  bool insert(VertexId v, Weight w);
  bool contains(VertexId v) const;
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  Weight total_weight() const { return total_; }
  const std::vector<VertexId>& members() const { return members_; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.members_ == b.members_;
  }

 private:
  std::vector<VertexId> members_;  // ascending
  Weight total_;
};

/// Undirected multigraph with weighted vertices. Parallel edges and
/// self-loops are allowed; a self-loop contributes 2 to its vertex's degree.
///
/// Ids are insertion indices. They stay stable across removals and are never
/// reused; all deterministic tie-breaking derives from them. Removing a
/// vertex removes every incident edge.
class WeightedMultigraph {
 public:
  VertexId add_vertex(Weight w, std::string label = {});
  EdgeId add_edge(VertexId u, VertexId v);

  std::size_t vertex_count() const { return alive_vertices_; }
  std::size_t edge_count() const { return alive_edges_; }
  /// Number of vertex ids ever created (dead ones included).
  std::size_t vertex_slots() const { return vweight_.size(); }
  std::size_t edge_slots() const { return edges_.size(); }

  bool vertex_alive(VertexId v) const { return valive_[check_vertex(v)]; }
  bool edge_alive(EdgeId e) const { return ealive_[check_edge(e)]; }

  Weight weight(VertexId v) const { return vweight_[check_vertex(v)]; }
  const std::string& label(VertexId v) const { return vlabel_[check_vertex(v)]; }

  /// Count of incident edge slots; a self-loop counts twice.
  int degree(VertexId v) const { return degree_[check_vertex(v)]; }

  std::pair<VertexId, VertexId> endpoints(EdgeId e) const {
    check_edge(e);
    return {edges_[e].u, edges_[e].v};
  }

  /// The endpoint of e other than v (v itself for a self-loop).
  VertexId other_endpoint(EdgeId e, VertexId v) const {
    check_edge(e);
    return edges_[e].u == v ? edges_[e].v : edges_[e].u;
  }

  /// Incident edge ids in insertion order. May contain dead edges, and lists
  /// a self-loop twice; callers filter with edge_alive().
  const std::vector<EdgeId>& incident(VertexId v) const {
    return adjacency_[check_vertex(v)];
  }

  void remove_edge(EdgeId e);

  /// Kills v and removes its incident edges, appending them to *removed in
  /// adjacency order when given.
  void remove_vertex(VertexId v, std::vector<EdgeId>* removed = nullptr);

  /// Repeatedly removes vertices of degree 0 or 1 until none remain.
  /// Returns the removed edges in removal order.
  std::vector<EdgeId> prune_leaves();

  /// Alive vertex ids, ascending.
  std::vector<VertexId> vertices() const;

  /// Alive edge ids, ascending.
  std::vector<EdgeId> edges() const;

 private:
  struct EdgeRec {
    VertexId u, v;
  };

  VertexId check_vertex(VertexId v) const;
  EdgeId check_edge(EdgeId e) const;

  std::vector<Weight> vweight_;
  std::vector<std::string> vlabel_;
  std::vector<char> valive_;
  std::vector<int> degree_;
  std::vector<std::vector<EdgeId>> adjacency_;
  std::vector<EdgeRec> edges_;
  std::vector<char> ealive_;
  std::size_t alive_vertices_ = 0;
  std::size_t alive_edges_ = 0;
};

/// True iff g minus the excluded vertices (and their edges) has no cycle.
/// A surviving self-loop or parallel pair counts as a cycle.
bool is_forest(const WeightedMultigraph& g, const VertexSet& excluded);

/// Mask variant for hot paths; mask is indexed by vertex id (size vertex_slots).
bool is_forest(const WeightedMultigraph& g, const std::vector<char>& excluded_mask);

/// Copying form of WeightedMultigraph::prune_leaves.
std::pair<WeightedMultigraph, std::vector<EdgeId>> prune_leaves(WeightedMultigraph g);

/// Builds a VertexSet over g's vertices, summing their weights.
VertexSet make_vertex_set(const WeightedMultigraph& g, const std::vector<VertexId>& ids);

}  // namespace loopcut
