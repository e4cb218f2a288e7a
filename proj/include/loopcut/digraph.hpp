#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "loopcut/multigraph.hpp"
#include "loopcut/weight.hpp"

namespace loopcut {

/// Directed acyclic network skeleton: named vertices with integer domain
/// sizes and directed parent->child edges. Self-edges and duplicate edges are
/// rejected on insertion; acyclicity is validated at use boundaries.
class DirectedNetwork {
 public:
  VertexId add_vertex(std::string name, std::uint32_t domain_size);

  /// Adds parent->child. Throws on unknown ids, self-edges and duplicates.
  void add_edge(VertexId parent, VertexId child);

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& name(VertexId v) const { return names_.at(v); }
  std::uint32_t domain_size(VertexId v) const { return domains_.at(v); }
  std::optional<VertexId> find(std::string_view name) const;

  const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

  bool is_acyclic() const;

  /// Throws std::invalid_argument when the network has a directed cycle.
  void validate() const;

 private:
  std::vector<std::string> names_;
  std::vector<std::uint32_t> domains_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::unordered_map<std::string, VertexId> index_;
  std::unordered_map<std::uint64_t, char> edge_seen_;
};

/// Conditioning weight of a network vertex: ln of its domain size.
inline Weight vertex_weight(const DirectedNetwork& d, VertexId v) {
  return Weight::finite(std::log(static_cast<double>(d.domain_size(v))));
}

/// Builds a VertexSet over network vertices, summing ln-domain weights.
VertexSet make_vertex_set(const DirectedNetwork& d, const std::vector<VertexId>& ids);

}  // namespace loopcut
