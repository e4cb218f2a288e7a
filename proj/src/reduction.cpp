#include "loopcut/reduction.hpp"

#include <cmath>
#include <stdexcept>

#include "loopcut/errors.hpp"
#include "loopcut/exact.hpp"

namespace loopcut {

SplitMap::Origin SplitMap::origin(VertexId split_vertex) const {
  VertexId net = split_vertex / 2;
  if (net >= in_of.size()) throw std::out_of_range("unknown split vertex id");
  return {net, split_vertex % 2 == 0 ? Side::In : Side::Out};
}

std::pair<WeightedMultigraph, SplitMap> split(const DirectedNetwork& d) {
  d.validate();
  WeightedMultigraph g;
  SplitMap map;
  map.in_of.reserve(d.vertex_count());
  map.out_of.reserve(d.vertex_count());
  map.network_weight.reserve(d.vertex_count());
  for (VertexId v = 0; v < d.vertex_count(); ++v) {
    Weight w = vertex_weight(d, v);
    VertexId in = g.add_vertex(Weight::infinite(), d.name(v) + "_in");
    VertexId out = g.add_vertex(w, d.name(v) + "_out");
    g.add_edge(in, out);
    map.in_of.push_back(in);
    map.out_of.push_back(out);
    map.network_weight.push_back(w);
  }
  for (auto [parent, child] : d.edges())
    g.add_edge(map.out_of[parent], map.in_of[child]);
  return {std::move(g), std::move(map)};
}

VertexSet psi(const VertexSet& x, const SplitMap& map) {
  VertexSet out;
  for (VertexId sv : x.members()) {
    SplitMap::Origin o = map.origin(sv);
    out.insert(o.network_vertex, map.network_weight[o.network_vertex]);
  }
  return out;
}

bool is_loop_cutset(const DirectedNetwork& d, const VertexSet& s) {
  auto [g, map] = split(d);
  std::vector<char> mask(g.vertex_slots(), 0);
  for (VertexId v : s.members()) {
    if (v >= d.vertex_count())
      throw std::out_of_range("cutset vertex not in the network");
    mask[map.out_of[v]] = 1;
  }
  return is_forest(g, mask);
}

namespace {

void fill_instance_count(const DirectedNetwork& d, SolveResult& res) {
  double log_count = 0.0;
  std::uint64_t product = 1;
  bool fits = true;
  for (VertexId v : res.set.members()) {
    std::uint64_t ds = d.domain_size(v);
    log_count += std::log(static_cast<double>(ds));
    if (fits && __builtin_mul_overflow(product, ds, &product)) fits = false;
  }
  res.instance_count_log = log_count;
  if (fits) res.instance_count = product;
}

}  // namespace

SolveResult loop_cutset(const DirectedNetwork& d, Algorithm algorithm,
                        const LoopCutsetOptions& options) {
  SolveResult res;
  if (algorithm == Algorithm::Exact) {
    OracleBudget budget;
    budget.max_vertices = options.exact_max_vertices;
    budget.max_nodes = options.exact_max_nodes;
    res = min_loop_cutset(d, budget);
  } else {
    auto [g, map] = split(d);
    SolveResult raw = algorithm == Algorithm::Ga
                          ? run_ga(g)
                          : run_mga(g, options.skip_phase2);
    res.set = psi(raw.set, map);
    res.trace = std::move(raw.trace);
    for (VertexId sv : raw.phase2_removed)
      res.phase2_removed.push_back(map.origin(sv).network_vertex);
    fill_instance_count(d, res);
  }
  if (!is_loop_cutset(d, res.set))
    throw std::logic_error("solver output failed loop-cutset validation");
  return res;
}

}  // namespace loopcut
