#include "postman/troad.hpp"

#include <algorithm>

#include "postman/flow.hpp"

namespace postman {

TerminalGraph attach_terminals(const UndirectedMultigraph& h, const DemandFn& t) {
  if (t.size() != h.order()) fail(Errc::internal, "demand size mismatch");
  if (t.sum() != 0) fail(Errc::demand_sum, "demands must sum to zero");
  int n = h.order();
  TerminalGraph tg;
  tg.source = n + 1;
  tg.sink = n + 2;
  tg.graph = UndirectedMultigraph(n + 2);
  for (const auto& [k, c] : h.edges()) tg.graph.add(k.first, k.second, c);
  for (int v = 1; v <= n; ++v) {
    if (t(v) > 0) {
      tg.graph.add(tg.source, v, t(v));
      tg.demand += t(v);
    } else if (t(v) < 0) {
      tg.graph.add(v, tg.sink, -t(v));
    }
  }
  return tg;
}

std::optional<DemandRoute> find_demand_route(const UndirectedMultigraph& h, const DemandFn& t) {
  TerminalGraph tg = attach_terminals(h, t);
  int n = h.order();
  DemandRoute route;
  route.arcs = DirectedMultigraph(n);
  if (tg.demand == 0) return route;

  // Each undirected edge class becomes a pair of antiparallel arcs whose net
  // flow stays within the class multiplicity.
  FlowNetwork net(n + 2);
  std::vector<std::pair<EdgeKey, std::pair<int, int>>> gadgets;  // class -> (fwd id, bwd id)
  for (const auto& [k, c] : tg.graph.edges()) {
    int fwd = net.add_arc(k.first - 1, k.second - 1, 0, c, 0);
    int bwd = net.add_arc(k.second - 1, k.first - 1, 0, c, 0);
    gadgets.push_back({k, {fwd, bwd}});
  }
  MaxFlowResult mf = max_flow(net, tg.source - 1, tg.sink - 1);
  if (mf.value < tg.demand) return std::nullopt;

  for (const auto& [k, ids] : gadgets) {
    if (k.first > n || k.second > n) continue;  // terminal edges
    long long net_flow = mf.assignment.flow[ids.first] - mf.assignment.flow[ids.second];
    if (net_flow > 0)
      route.arcs.add(k.first, k.second, net_flow);
    else if (net_flow < 0)
      route.arcs.add(k.second, k.first, -net_flow);
  }
  return route;
}

std::optional<DemandRoute> find_demand_route(const MixedGraph& g, const DemandFn& t) {
  return find_demand_route(g.edge_multigraph(), t);
}

namespace {

// Terminal reachability with some copies removed: a class is passable while
// at least one copy survives.
bool separates(const TerminalGraph& tg, const EdgeMultiset& removed) {
  int n = tg.graph.order();
  std::vector<std::vector<int>> adj(n + 1);
  for (const auto& [k, c] : tg.graph.edges()) {
    long long gone = 0;
    if (auto it = removed.find(k); it != removed.end()) gone = it->second;
    if (c - gone >= 1) {
      adj[k.first].push_back(k.second);
      adj[k.second].push_back(k.first);
    }
  }
  std::vector<char> seen(n + 1, 0);
  std::vector<int> stack{tg.source};
  seen[tg.source] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return !seen[tg.sink];
}

}  // namespace

bool is_minimal_terminal_cut(const TerminalGraph& tg, const EdgeMultiset& f) {
  for (const auto& [k, c] : f) {
    if (c < 0 || c > tg.graph.mult(k.first, k.second))
      fail(Errc::internal, "cut multiset exceeds graph multiplicities");
  }
  if (!separates(tg, f)) return false;
  for (const auto& [k, c] : f) {
    if (c == 0) continue;
    EdgeMultiset less = f;
    less[k] = c - 1;
    if (separates(tg, less)) return false;
  }
  return true;
}

std::vector<EdgeMultiset> enumerate_deficient_cuts(const TerminalGraph& tg) {
  std::vector<EdgeMultiset> cuts;
  if (tg.demand <= 0) return cuts;

  std::vector<std::pair<EdgeKey, long long>> classes(tg.graph.edges().begin(),
                                                     tg.graph.edges().end());
  int m = static_cast<int>(classes.size());

  // Depth-first over subsets of complete classes with total size < demand.
  EdgeMultiset current;
  long long used = 0;
  auto rec = [&](auto&& self, int idx) -> void {
    if (is_minimal_terminal_cut(tg, current)) cuts.push_back(current);
    for (int i = idx; i < m; ++i) {
      long long c = classes[i].second;
      if (used + c >= tg.demand) continue;
      current[classes[i].first] = c;
      used += c;
      self(self, i + 1);
      used -= c;
      current.erase(classes[i].first);
    }
  };
  rec(rec, 0);
  return cuts;
}

std::set<EdgeKey> bottleneck_union(const MixedGraph& g, const DemandFn& t) {
  std::set<EdgeKey> result;
  if (t.sum() != 0) fail(Errc::demand_sum, "demands must sum to zero");
  if (t.positive_total() == 0) return result;
  TerminalGraph tg = attach_terminals(g.edge_multigraph(), t);
  for (const auto& cut : enumerate_deficient_cuts(tg))
    for (const auto& [k, c] : cut)
      if (c > 0 && g.has_edge(k.first, k.second)) result.insert(k);
  return result;
}

bool is_sparse_route(const DemandRoute& route, const MixedGraph& g,
                     const std::set<EdgeKey>& reusable) {
  for (const auto& e : g.edges()) {
    EdgeKey k{e.u, e.v};
    if (reusable.count(k)) continue;
    if (route.arcs.mu(e.u, e.v) + route.arcs.mu(e.v, e.u) > 1) return false;
  }
  return true;
}

DirectedMultigraph orient(const UndirectedMultigraph& h, const DemandRoute& route,
                          const DemandFn& t) {
  int n = h.order();
  UndirectedMultigraph rest(n);
  for (const auto& [k, c] : h.edges()) rest.add(k.first, k.second, c);
  for (const auto& [k, c] : route.arcs.arcs()) {
    if (rest.mult(k.first, k.second) < c)
      fail(Errc::internal, "route is not a sub-multigraph of h");
    rest.add(k.first, k.second, -c);
  }
  for (int v = 1; v <= n; ++v)
    if ((h.degree(v) - t(v)) % 2 != 0) fail(Errc::parity, "degree minus demand must be even");

  // The remainder has even degrees; walk Euler tours component by component,
  // smallest start vertex first, smallest neighbour first.
  DirectedMultigraph d(n);
  std::vector<std::map<int, long long>> adj(n + 1);
  for (const auto& [k, c] : rest.edges()) {
    adj[k.first][k.second] += c;
    adj[k.second][k.first] += c;
  }
  for (int start = 1; start <= n; ++start) {
    while (!adj[start].empty()) {
      // Closed trail from `start`; even degrees guarantee it returns.
      int v = start;
      do {
        auto it = adj[v].begin();
        int w = it->first;
        if (--it->second == 0) adj[v].erase(it);
        auto back = adj[w].find(v);
        if (--back->second == 0) adj[w].erase(back);
        d.add(v, w, 1);
        v = w;
      } while (v != start);
    }
  }
  for (const auto& [k, c] : route.arcs.arcs()) d.add(k.first, k.second, c);
  return d;
}

Subdivision subdivide_for_cuts(const UndirectedMultigraph& h) {
  Subdivision out;
  int next = h.order() + 1;
  std::vector<std::pair<int, int>> half_edges;
  std::vector<Subdivision::Midpoint> mids;
  for (const auto& [k, c] : h.edges()) {
    for (long long copy = 0; copy < c; ++copy) {
      int m = next++;
      mids.push_back({m, k.first, k.second});
      half_edges.push_back({k.first, m});
      half_edges.push_back({m, k.second});
    }
  }
  out.graph = UndirectedMultigraph(next - 1);
  for (const auto& [u, v] : half_edges) out.graph.add(u, v, 1);
  out.midpoints = std::move(mids);
  return out;
}

}  // namespace postman
