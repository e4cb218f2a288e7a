#include "loopcut/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <queue>
#include <stdexcept>

#include "loopcut/errors.hpp"
#include "loopcut/union_find.hpp"

namespace loopcut {

const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Ga: return "ga";
    case Algorithm::Mga: return "mga";
    case Algorithm::Exact: return "exact";
  }
  return "?";
}

std::optional<Algorithm> algorithm_from_string(std::string_view s) {
  if (s == "ga") return Algorithm::Ga;
  if (s == "mga") return Algorithm::Mga;
  if (s == "exact") return Algorithm::Exact;
  return std::nullopt;
}

namespace {

struct HeapEntry {
  double weight;      // finite working weight snapshot
  std::uint32_t deg;  // degree snapshot
  VertexId vertex;
  std::uint64_t version;
};

// Min-heap on (weight/deg, vertex id); cross-multiplied comparison.
struct EntryAfter {
  bool operator()(const HeapEntry& a, const HeapEntry& b) const {
    double lhs = a.weight * static_cast<double>(b.deg);
    double rhs = b.weight * static_cast<double>(a.deg);
    if (lhs != rhs) return lhs > rhs;
    return a.vertex > b.vertex;
  }
};

struct Phase1Output {
  std::vector<VertexId> picks;
  ChargeLedger ledger;
};

Phase1Output greedy_phase1(const WeightedMultigraph& input, bool decrement_weights) {
  WeightedMultigraph g = input;
  const std::size_t nslots = g.vertex_slots();

  std::vector<double> work(nslots, 0.0);
  std::vector<char> infinite(nslots, 0);
  for (VertexId v = 0; v < nslots; ++v) {
    if (!g.vertex_alive(v)) continue;
    Weight w = g.weight(v);
    infinite[v] = w.is_infinite();
    work[v] = infinite[v] ? 0.0 : w.value();
  }

  Phase1Output out;
  out.ledger.edge_charge.assign(g.edge_slots(), std::numeric_limits<double>::quiet_NaN());
  out.ledger.initial_pruned = g.prune_leaves();

  std::priority_queue<HeapEntry, std::vector<HeapEntry>, EntryAfter> heap;
  std::vector<std::uint64_t> version(nslots, 0);
  auto push_entry = [&](VertexId v) {
    if (g.vertex_alive(v) && !infinite[v])
      heap.push({work[v], static_cast<std::uint32_t>(g.degree(v)), v, version[v]});
  };
  for (VertexId v = 0; v < nslots; ++v) push_entry(v);

  double prev_ratio = 0.0;
  std::uint32_t iter = 0;
  std::vector<EdgeId> removed;
  std::deque<VertexId> prune_queue;

  while (g.vertex_count() > 0) {
    VertexId sel = kNoVertex;
    while (!heap.empty()) {
      const HeapEntry& top = heap.top();
      if (g.vertex_alive(top.vertex) && version[top.vertex] == top.version) {
        sel = top.vertex;
        break;
      }
      heap.pop();
    }
    if (sel == kNoVertex)
      throw UnbreakableCycleError(
          "every remaining cycle consists of infinite-weight vertices");
    heap.pop();

    ++iter;
    double ratio = work[sel] / static_cast<double>(g.degree(sel));
    // Selection order guarantees nondecreasing ratios in exact arithmetic;
    // clamp away division rounding so the recorded trace obeys it too.
    ratio = std::max(ratio, prev_ratio);
    prev_ratio = ratio;

    IterationRecord rec;
    rec.index = iter;
    rec.selected = sel;
    rec.ratio = ratio;

    auto process_removed = [&](std::size_t first) {
      for (std::size_t i = first; i < removed.size(); ++i) {
        EdgeId e = removed[i];
        out.ledger.edge_charge[e] = ratio;
        rec.removed_edges.push_back(e);
        auto [a, b] = g.endpoints(e);
        for (VertexId x : {a, b}) {
          if (!g.vertex_alive(x)) continue;
          if (decrement_weights && !infinite[x]) {
            work[x] -= ratio;
            if (work[x] < 0.0) work[x] = 0.0;  // fp noise only
          }
          ++version[x];
          push_entry(x);
          if (g.degree(x) <= 1) prune_queue.push_back(x);
        }
      }
    };

    std::size_t first = removed.size();
    g.remove_vertex(sel, &removed);
    process_removed(first);
    out.picks.push_back(sel);

    while (!prune_queue.empty()) {
      VertexId v = prune_queue.front();
      prune_queue.pop_front();
      if (!g.vertex_alive(v) || g.degree(v) > 1) continue;
      first = removed.size();
      g.remove_vertex(v, &removed);
      process_removed(first);
    }

    out.ledger.iterations.push_back(std::move(rec));
  }
  return out;
}

std::vector<char> members_mask(const WeightedMultigraph& g, const VertexSet& f) {
  std::vector<char> mask(g.vertex_slots(), 0);
  for (VertexId v : f.members()) {
    if (v >= g.vertex_slots() || !g.vertex_alive(v))
      throw std::invalid_argument("set contains a vertex not in the graph");
    mask[v] = 1;
  }
  return mask;
}

}  // namespace

SolveResult run_ga(const WeightedMultigraph& g) {
  Phase1Output p1 = greedy_phase1(g, /*decrement_weights=*/false);
  SolveResult res;
  res.set = make_vertex_set(g, p1.picks);
  res.trace = std::move(p1.ledger);
  return res;
}

SolveResult run_mga(const WeightedMultigraph& g, bool skip_phase2) {
  Phase1Output p1 = greedy_phase1(g, /*decrement_weights=*/true);
  SolveResult res;
  res.trace = std::move(p1.ledger);
  if (skip_phase2) {
    res.set = make_vertex_set(g, p1.picks);
    return res;
  }
  std::vector<VertexId> kept = drop_redundant_picks(g, p1.picks);
  std::vector<char> in_kept(g.vertex_slots(), 0);
  for (VertexId v : kept) in_kept[v] = 1;
  for (auto it = p1.picks.rbegin(); it != p1.picks.rend(); ++it)
    if (!in_kept[*it]) res.phase2_removed.push_back(*it);
  res.set = make_vertex_set(g, kept);
  return res;
}

bool verify_fvs(const WeightedMultigraph& g, const VertexSet& f) {
  return is_forest(g, members_mask(g, f));
}

bool is_minimal_fvs(const WeightedMultigraph& g, const VertexSet& f) {
  std::vector<char> mask = members_mask(g, f);
  if (!is_forest(g, mask))
    throw std::invalid_argument("set is not a feedback vertex set");
  for (VertexId v : f.members()) {
    mask[v] = 0;
    bool still_fvs = is_forest(g, mask);
    mask[v] = 1;
    if (still_fvs) return false;
  }
  return true;
}

std::vector<VertexId> drop_redundant_picks(const WeightedMultigraph& g,
                                           const std::vector<VertexId>& picks) {
  const std::size_t nslots = g.vertex_slots();
  std::vector<char> in_f(nslots, 0);
  for (VertexId v : picks) in_f[v] = 1;

  UnionFind uf(nslots);
  for (EdgeId e = 0; e < g.edge_slots(); ++e) {
    if (!g.edge_alive(e)) continue;
    auto [u, v] = g.endpoints(e);
    if (in_f[u] || in_f[v]) continue;
    if (u == v || !uf.unite(u, v))
      throw std::invalid_argument("picks do not form a feedback vertex set");
  }

  // Re-inserting a pick creates a cycle iff it has a self-loop or two of its
  // surviving incident edges land in one component.
  std::vector<std::uint32_t> mark(nslots, 0);
  std::uint32_t stamp = 0;
  std::vector<char> keep(picks.size(), 1);
  for (std::size_t i = picks.size(); i-- > 0;) {
    VertexId v = picks[i];
    ++stamp;
    bool cycle = false;
    for (EdgeId e : g.incident(v)) {
      if (!g.edge_alive(e)) continue;
      VertexId o = g.other_endpoint(e, v);
      if (o == v) {
        cycle = true;
        break;
      }
      if (in_f[o]) continue;
      std::uint32_t root = uf.find(o);
      if (mark[root] == stamp) {
        cycle = true;
        break;
      }
      mark[root] = stamp;
    }
    if (cycle) continue;
    in_f[v] = 0;
    keep[i] = 0;
    for (EdgeId e : g.incident(v)) {
      if (!g.edge_alive(e)) continue;
      VertexId o = g.other_endpoint(e, v);
      if (!in_f[o]) uf.unite(v, o);
    }
  }

  std::vector<VertexId> result;
  for (std::size_t i = 0; i < picks.size(); ++i)
    if (keep[i]) result.push_back(picks[i]);
  return result;
}

std::vector<VertexId> drop_redundant_picks_rescan(const WeightedMultigraph& g,
                                                  const std::vector<VertexId>& picks) {
  std::vector<char> excluded(g.vertex_slots(), 0);
  for (VertexId v : picks) excluded[v] = 1;
  if (!is_forest(g, excluded))
    throw std::invalid_argument("picks do not form a feedback vertex set");
  std::vector<char> keep(picks.size(), 1);
  for (std::size_t i = picks.size(); i-- > 0;) {
    excluded[picks[i]] = 0;
    if (is_forest(g, excluded)) {
      keep[i] = 0;
    } else {
      excluded[picks[i]] = 1;
    }
  }
  std::vector<VertexId> result;
  for (std::size_t i = 0; i < picks.size(); ++i)
    if (keep[i]) result.push_back(picks[i]);
  return result;
}

double incident_charge_sum(const WeightedMultigraph& g, const ChargeLedger& ledger,
                           VertexId v) {
  double sum = 0.0;
  // A self-loop shows up twice in the adjacency list and is meant to count
  // twice, matching its degree contribution.
  for (EdgeId e : g.incident(v)) {
    double c = ledger.edge_charge[e];
    if (!std::isnan(c)) sum += c;
  }
  return sum;
}

}  // namespace loopcut
