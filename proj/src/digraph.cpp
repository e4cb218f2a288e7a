#include "loopcut/digraph.hpp"

#include <deque>
#include <stdexcept>

namespace loopcut {

VertexId DirectedNetwork::add_vertex(std::string name, std::uint32_t domain_size) {
  if (name.empty()) throw std::invalid_argument("vertex name must be nonempty");
  if (domain_size < 1) throw std::invalid_argument("domain size must be >= 1");
  if (index_.count(name)) throw std::invalid_argument("duplicate vertex name: " + name);
  VertexId id = static_cast<VertexId>(names_.size());
  index_.emplace(name, id);
  names_.push_back(std::move(name));
  domains_.push_back(domain_size);
  return id;
}

void DirectedNetwork::add_edge(VertexId parent, VertexId child) {
  if (parent >= names_.size() || child >= names_.size())
    throw std::out_of_range("unknown vertex id");
  if (parent == child)
    throw std::invalid_argument("self-edges are not allowed: " + names_[parent]);
  std::uint64_t key = (static_cast<std::uint64_t>(parent) << 32) | child;
  if (!edge_seen_.emplace(key, 1).second)
    throw std::invalid_argument("duplicate edge " + names_[parent] + " -> " + names_[child]);
  edges_.emplace_back(parent, child);
}

std::optional<VertexId> DirectedNetwork::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? std::nullopt : std::optional<VertexId>(it->second);
}

bool DirectedNetwork::is_acyclic() const {
  std::vector<int> indeg(names_.size(), 0);
  std::vector<std::vector<VertexId>> out(names_.size());
  for (auto [p, c] : edges_) {
    indeg[c] += 1;
    out[p].push_back(c);
  }
  std::deque<VertexId> ready;
  for (VertexId v = 0; v < names_.size(); ++v)
    if (indeg[v] == 0) ready.push_back(v);
  std::size_t seen = 0;
  while (!ready.empty()) {
    VertexId v = ready.front();
    ready.pop_front();
    ++seen;
    for (VertexId c : out[v])
      if (--indeg[c] == 0) ready.push_back(c);
  }
  return seen == names_.size();
}

void DirectedNetwork::validate() const {
  if (!is_acyclic())
    throw std::invalid_argument("network contains a directed cycle");
}

VertexSet make_vertex_set(const DirectedNetwork& d, const std::vector<VertexId>& ids) {
  VertexSet s;
  for (VertexId v : ids) s.insert(v, vertex_weight(d, v));
  return s;
}

}  // namespace loopcut
