#include "loopcut/exact.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

#include "loopcut/errors.hpp"
#include "loopcut/reduction.hpp"

namespace loopcut {

namespace {

// Vertices of a short cycle of g, found with one BFS per root. The returned
// set always contains a full cycle, so branching on its members is sound.
std::vector<VertexId> short_cycle_vertices(const WeightedMultigraph& g) {
  std::vector<VertexId> verts = g.vertices();
  const std::size_t nslots = g.vertex_slots();

  // Self-loops and parallel pairs first; they are the shortest cycles.
  for (EdgeId e = 0; e < g.edge_slots(); ++e) {
    if (!g.edge_alive(e)) continue;
    auto [u, v] = g.endpoints(e);
    if (u == v) return {u};
  }
  std::vector<std::uint64_t> pair_seen;
  for (EdgeId e = 0; e < g.edge_slots(); ++e) {
    if (!g.edge_alive(e)) continue;
    auto [u, v] = g.endpoints(e);
    std::uint64_t key = u < v ? (std::uint64_t(u) << 32) | v : (std::uint64_t(v) << 32) | u;
    pair_seen.push_back(key);
  }
  std::sort(pair_seen.begin(), pair_seen.end());
  for (std::size_t i = 1; i < pair_seen.size(); ++i)
    if (pair_seen[i] == pair_seen[i - 1])
      return {static_cast<VertexId>(pair_seen[i] >> 32),
              static_cast<VertexId>(pair_seen[i] & 0xffffffffu)};

  std::size_t best_len = std::numeric_limits<std::size_t>::max();
  std::vector<VertexId> best;
  std::vector<int> dist(nslots);
  std::vector<EdgeId> via(nslots);
  std::vector<VertexId> par(nslots);

  for (VertexId root : verts) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<VertexId> bfs{root};
    dist[root] = 0;
    via[root] = kNoEdge;
    par[root] = kNoVertex;
    bool done = false;
    while (!bfs.empty() && !done) {
      VertexId u = bfs.front();
      bfs.pop_front();
      if (static_cast<std::size_t>(dist[u]) * 2 >= best_len) break;
      for (EdgeId e : g.incident(u)) {
        if (!g.edge_alive(e) || e == via[u]) continue;
        VertexId w = g.other_endpoint(e, u);
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          via[w] = e;
          par[w] = u;
          bfs.push_back(w);
        } else {
          std::size_t len = static_cast<std::size_t>(dist[u]) + dist[w] + 1;
          if (len < best_len) {
            best_len = len;
            best.clear();
            for (VertexId x = u; x != kNoVertex; x = par[x]) best.push_back(x);
            for (VertexId x = w; x != kNoVertex; x = par[x]) best.push_back(x);
            std::sort(best.begin(), best.end());
            best.erase(std::unique(best.begin(), best.end()), best.end());
            done = true;
          }
        }
      }
    }
  }
  return best;
}

struct BnbState {
  const OracleBudget* budget;
  std::uint64_t nodes = 0;
  double best = std::numeric_limits<double>::infinity();
  std::vector<VertexId> best_set;
  bool found = false;
};

void bnb(WeightedMultigraph g, double acc, std::vector<VertexId>& chosen, BnbState& st) {
  if (++st.nodes > st.budget->max_nodes)
    throw BudgetExceededError("exact search exceeded its node budget");
  g.prune_leaves();
  if (g.edge_count() == 0) {
    if (acc < st.best) {
      st.best = acc;
      st.best_set = chosen;
      st.found = true;
    }
    return;
  }

  std::vector<VertexId> cycle = short_cycle_vertices(g);
  std::vector<VertexId> finite;
  for (VertexId v : cycle)
    if (!g.weight(v).is_infinite()) finite.push_back(v);
  if (finite.empty())
    throw UnbreakableCycleError("a cycle has no finite-weight vertex");
  std::sort(finite.begin(), finite.end(), [&](VertexId a, VertexId b) {
    double wa = g.weight(a).value(), wb = g.weight(b).value();
    return wa != wb ? wa < wb : a < b;
  });

  for (VertexId v : finite) {
    double next = acc + g.weight(v).value();
    if (next >= st.best) continue;
    WeightedMultigraph sub = g;
    sub.remove_vertex(v);
    chosen.push_back(v);
    bnb(std::move(sub), next, chosen, st);
    chosen.pop_back();
  }
}

SolveResult result_from(const WeightedMultigraph& g, const std::vector<VertexId>& set) {
  SolveResult res;
  res.set = make_vertex_set(g, set);
  return res;
}

}  // namespace

SolveResult min_wvfs(const WeightedMultigraph& g, const OracleBudget& budget) {
  if (budget.max_vertices <= 0 || budget.max_nodes == 0)
    throw std::invalid_argument("oracle budget must be positive");
  if (g.vertex_count() > static_cast<std::size_t>(budget.max_vertices))
    throw BudgetExceededError("graph exceeds the exact solver's vertex budget");
  BnbState st;
  st.budget = &budget;
  std::vector<VertexId> chosen;
  bnb(g, 0.0, chosen, st);
  return result_from(g, st.best_set);
}

SolveResult min_wvfs_exhaustive(const WeightedMultigraph& g) {
  std::vector<VertexId> verts = g.vertices();
  const std::size_t n = verts.size();
  if (n > 20)
    throw std::invalid_argument("exhaustive oracle is limited to 20 vertices");

  std::vector<char> mask(g.vertex_slots(), 0);
  double best = std::numeric_limits<double>::infinity();
  std::uint64_t best_bits = 0;
  bool found = false;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    double weight = 0.0;
    bool usable = true;
    for (std::size_t i = 0; i < n && usable; ++i) {
      if (!(bits & (std::uint64_t{1} << i))) continue;
      Weight w = g.weight(verts[i]);
      if (w.is_infinite())
        usable = false;
      else
        weight += w.value();
    }
    if (!usable || weight >= best) continue;
    std::fill(mask.begin(), mask.end(), 0);
    for (std::size_t i = 0; i < n; ++i)
      if (bits & (std::uint64_t{1} << i)) mask[verts[i]] = 1;
    if (!is_forest(g, mask)) continue;
    best = weight;
    best_bits = bits;
    found = true;
  }
  if (!found)
    throw UnbreakableCycleError("no finite-weight feedback vertex set exists");
  std::vector<VertexId> set;
  for (std::size_t i = 0; i < n; ++i)
    if (best_bits & (std::uint64_t{1} << i)) set.push_back(verts[i]);
  return result_from(g, set);
}

SolveResult min_loop_cutset(const DirectedNetwork& d, const OracleBudget& budget) {
  if (budget.max_vertices <= 0 || budget.max_nodes == 0)
    throw std::invalid_argument("oracle budget must be positive");
  if (d.vertex_count() > static_cast<std::size_t>(budget.max_vertices))
    throw BudgetExceededError("network exceeds the exact solver's vertex budget");
  auto [g, map] = split(d);
  OracleBudget split_budget;
  split_budget.max_vertices = 2 * budget.max_vertices;
  split_budget.max_nodes = budget.max_nodes;
  SolveResult raw = min_wvfs(g, split_budget);

  SolveResult res;
  res.set = psi(raw.set, map);
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
  return res;
}

std::vector<VertexSet> enumerate_minimal_fvs(const WeightedMultigraph& g,
                                             std::size_t cap) {
  std::vector<VertexId> verts = g.vertices();
  const std::size_t n = verts.size();
  if (n > 12)
    throw std::invalid_argument("minimal-FVS enumeration is limited to 12 vertices");

  std::vector<VertexSet> out;
  std::vector<char> mask(g.vertex_slots(), 0);
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    std::fill(mask.begin(), mask.end(), 0);
    for (std::size_t i = 0; i < n; ++i)
      if (bits & (1u << i)) mask[verts[i]] = 1;
    if (!is_forest(g, mask)) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < n && minimal; ++i) {
      if (!(bits & (1u << i))) continue;
      mask[verts[i]] = 0;
      if (is_forest(g, mask)) minimal = false;
      mask[verts[i]] = 1;
    }
    if (!minimal) continue;
    std::vector<VertexId> members;
    for (std::size_t i = 0; i < n; ++i)
      if (bits & (1u << i)) members.push_back(verts[i]);
    out.push_back(make_vertex_set(g, members));
    if (out.size() > cap)
      throw std::length_error("minimal feedback vertex set cap exceeded");
  }
  return out;
}

}  // namespace loopcut
