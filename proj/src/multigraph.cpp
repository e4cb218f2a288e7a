#include "loopcut/multigraph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "loopcut/union_find.hpp"

namespace loopcut {

bool VertexSet::insert(VertexId v, Weight w) {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it != members_.end() && *it == v) return false;
  members_.insert(it, v);
  total_ += w;
  return true;
}

bool VertexSet::contains(VertexId v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

VertexId WeightedMultigraph::check_vertex(VertexId v) const {
  if (v >= vweight_.size()) throw std::out_of_range("unknown vertex id");
  return v;
}

EdgeId WeightedMultigraph::check_edge(EdgeId e) const {
  if (e >= edges_.size()) throw std::out_of_range("unknown edge id");
  return e;
}

VertexId WeightedMultigraph::add_vertex(Weight w, std::string label) {
  VertexId id = static_cast<VertexId>(vweight_.size());
  vweight_.push_back(w);
  vlabel_.push_back(label.empty() ? "v" + std::to_string(id) : std::move(label));
  valive_.push_back(1);
  degree_.push_back(0);
  adjacency_.emplace_back();
  ++alive_vertices_;
  return id;
}

EdgeId WeightedMultigraph::add_edge(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  if (!valive_[u] || !valive_[v])
    throw std::invalid_argument("edge endpoint is not alive");
  EdgeId id = static_cast<EdgeId>(edges_.size());
  edges_.push_back({u, v});
  ealive_.push_back(1);
  adjacency_[u].push_back(id);
  adjacency_[v].push_back(id);  // self-loop appears twice on purpose
  degree_[u] += 1;
  degree_[v] += 1;
  ++alive_edges_;
  return id;
}

void WeightedMultigraph::remove_edge(EdgeId e) {
  check_edge(e);
  if (!ealive_[e]) return;
  ealive_[e] = 0;
  degree_[edges_[e].u] -= 1;
  degree_[edges_[e].v] -= 1;
  --alive_edges_;
}

void WeightedMultigraph::remove_vertex(VertexId v, std::vector<EdgeId>* removed) {
  check_vertex(v);
  if (!valive_[v]) return;
  valive_[v] = 0;
  --alive_vertices_;
  for (EdgeId e : adjacency_[v]) {
    if (!ealive_[e]) continue;
    remove_edge(e);
    if (removed) removed->push_back(e);
  }
}

std::vector<EdgeId> WeightedMultigraph::prune_leaves() {
  std::vector<EdgeId> removed;
  std::deque<VertexId> queue;
  for (VertexId v = 0; v < vweight_.size(); ++v)
    if (valive_[v] && degree_[v] <= 1) queue.push_back(v);
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    if (!valive_[v] || degree_[v] > 1) continue;
    std::size_t first = removed.size();
    remove_vertex(v, &removed);
    for (std::size_t i = first; i < removed.size(); ++i) {
      VertexId o = other_endpoint(removed[i], v);
      if (valive_[o] && degree_[o] <= 1) queue.push_back(o);
    }
  }
  return removed;
}

std::vector<VertexId> WeightedMultigraph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(alive_vertices_);
  for (VertexId v = 0; v < vweight_.size(); ++v)
    if (valive_[v]) out.push_back(v);
  return out;
}

std::vector<EdgeId> WeightedMultigraph::edges() const {
  std::vector<EdgeId> out;
  out.reserve(alive_edges_);
  for (EdgeId e = 0; e < edges_.size(); ++e)
    if (ealive_[e]) out.push_back(e);
  return out;
}

bool is_forest(const WeightedMultigraph& g, const std::vector<char>& excluded_mask) {
  if (excluded_mask.size() != g.vertex_slots())
    throw std::invalid_argument("exclusion mask size mismatch");
  UnionFind uf(g.vertex_slots());
  for (EdgeId e = 0; e < g.edge_slots(); ++e) {
    if (!g.edge_alive(e)) continue;
    auto [u, v] = g.endpoints(e);
    if (excluded_mask[u] || excluded_mask[v]) continue;
    if (u == v) return false;  // self-loop
    if (!uf.unite(u, v)) return false;
  }
  return true;
}

bool is_forest(const WeightedMultigraph& g, const VertexSet& excluded) {
  std::vector<char> mask(g.vertex_slots(), 0);
  for (VertexId v : excluded.members()) {
    if (v >= g.vertex_slots() || !g.vertex_alive(v))
      throw std::invalid_argument("excluded set contains a vertex not in the graph");
    mask[v] = 1;
  }
  return is_forest(g, mask);
}

std::pair<WeightedMultigraph, std::vector<EdgeId>> prune_leaves(WeightedMultigraph g) {
  auto removed = g.prune_leaves();
  return {std::move(g), std::move(removed)};
}

VertexSet make_vertex_set(const WeightedMultigraph& g, const std::vector<VertexId>& ids) {
  VertexSet s;
  for (VertexId v : ids) s.insert(v, g.weight(v));
  return s;
}

}  // namespace loopcut
