#include "postman/graph.hpp"

#include <algorithm>
#include <numeric>

namespace postman {

void DirectedMultigraph::add(int u, int v, long long count) {
  if (count == 0) return;
  if (u < 1 || u > n_ || v < 1 || v > n_ || u == v)
    fail(Errc::internal, "arc endpoints out of range");
  auto it = mu_.find({u, v});
  long long cur = (it == mu_.end()) ? 0 : it->second;
  long long next = cur + count;
  if (next < 0) fail(Errc::internal, "negative arc multiplicity");
  if (next == 0) {
    if (it != mu_.end()) mu_.erase(it);
  } else {
    mu_[{u, v}] = next;
  }
  out_[u] += count;
  in_[v] += count;
  total_ += count;
}

long long DirectedMultigraph::mu(int u, int v) const {
  auto it = mu_.find({u, v});
  return it == mu_.end() ? 0 : it->second;
}

std::vector<long long> DirectedMultigraph::encode() const {
  std::vector<long long> out;
  out.reserve(mu_.size() * 3);
  for (const auto& [k, c] : mu_) {
    out.push_back(k.first);
    out.push_back(k.second);
    out.push_back(c);
  }
  return out;
}

void UndirectedMultigraph::add(int u, int v, long long count) {
  if (count == 0) return;
  if (u < 1 || u > n_ || v < 1 || v > n_ || u == v)
    fail(Errc::internal, "edge endpoints out of range");
  EdgeKey k = edge_key(u, v);
  auto it = mult_.find(k);
  long long cur = (it == mult_.end()) ? 0 : it->second;
  long long next = cur + count;
  if (next < 0) fail(Errc::internal, "negative edge multiplicity");
  if (next == 0) {
    if (it != mult_.end()) mult_.erase(it);
  } else {
    mult_[k] = next;
  }
  deg_[u] += count;
  deg_[v] += count;
  total_ += count;
}

long long UndirectedMultigraph::mult(int u, int v) const {
  auto it = mult_.find(edge_key(u, v));
  return it == mult_.end() ? 0 : it->second;
}

std::vector<long long> UndirectedMultigraph::encode() const {
  std::vector<long long> out;
  out.reserve(mult_.size() * 3);
  for (const auto& [k, c] : mult_) {
    out.push_back(k.first);
    out.push_back(k.second);
    out.push_back(c);
  }
  return out;
}

MixedGraph MixedGraph::make(int n, std::vector<Link> edges, std::vector<Link> arcs) {
  if (n < 0) fail(Errc::parse, "negative vertex count");
  MixedGraph g;
  g.n_ = n;
  for (auto& e : edges) {
    if (e.u < 1 || e.u > n || e.v < 1 || e.v > n) fail(Errc::parse, "edge endpoint out of range");
    if (e.u == e.v) fail(Errc::parse, "self-loop");
    if (e.w < 0) fail(Errc::parse, "negative weight");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  for (const auto& a : arcs) {
    if (a.u < 1 || a.u > n || a.v < 1 || a.v > n) fail(Errc::parse, "arc endpoint out of range");
    if (a.u == a.v) fail(Errc::parse, "self-loop");
    if (a.w < 0) fail(Errc::parse, "negative weight");
  }
  std::sort(edges.begin(), edges.end(),
            [](const Link& a, const Link& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  std::sort(arcs.begin(), arcs.end(),
            [](const Link& a, const Link& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  for (const auto& e : edges) {
    if (!g.edge_w_.emplace(EdgeKey{e.u, e.v}, e.w).second)
      fail(Errc::duplicate_link, "parallel edge");
  }
  for (const auto& a : arcs) {
    if (g.edge_w_.count(edge_key(a.u, a.v)))
      fail(Errc::duplicate_link, "edge and arc between the same pair");
    if (!g.arc_w_.emplace(ArcKey{a.u, a.v}, a.w).second) fail(Errc::duplicate_link, "parallel arc");
    if (g.arc_w_.count(ArcKey{a.v, a.u})) fail(Errc::duplicate_link, "antiparallel arcs");
  }
  g.edges_ = std::move(edges);
  g.arcs_ = std::move(arcs);
  // Keep solution weights comfortably inside 64 bits: any solution multiplies
  // each link weight by a small traversal bound.
  Weight total = 0;
  for (const auto& e : g.edges_) total += e.w;
  for (const auto& a : g.arcs_) total += a.w;
  if (total > (1LL << 50)) fail(Errc::too_large, "total weight too large");
  return g;
}

bool MixedGraph::has_link(int u, int v) const {
  return has_edge(u, v) || has_arc(u, v) || has_arc(v, u);
}

Weight MixedGraph::edge_weight(int u, int v) const {
  auto it = edge_w_.find(edge_key(u, v));
  if (it == edge_w_.end()) fail(Errc::unknown_link, "no such edge");
  return it->second;
}

Weight MixedGraph::arc_weight(int u, int v) const {
  auto it = arc_w_.find({u, v});
  if (it == arc_w_.end()) fail(Errc::unknown_link, "no such arc");
  return it->second;
}

std::optional<Weight> MixedGraph::link_weight(int u, int v) const {
  if (auto it = edge_w_.find(edge_key(u, v)); it != edge_w_.end()) return it->second;
  if (auto it = arc_w_.find(ArcKey{u, v}); it != arc_w_.end()) return it->second;
  if (auto it = arc_w_.find(ArcKey{v, u}); it != arc_w_.end()) return it->second;
  return std::nullopt;
}

Weight MixedGraph::total_edge_weight() const {
  Weight s = 0;
  for (const auto& e : edges_) s += e.w;
  return s;
}

long long MixedGraph::edge_degree(int v) const {
  long long d = 0;
  for (const auto& e : edges_)
    if (e.u == v || e.v == v) ++d;
  return d;
}

UndirectedMultigraph MixedGraph::edge_multigraph() const {
  UndirectedMultigraph h(n_);
  for (const auto& e : edges_) h.add(e.u, e.v, 1);
  return h;
}

MixedGraph MixedGraph::induced(const std::vector<int>& verts) const {
  std::map<int, int> new_of_old;
  for (int i = 0; i < static_cast<int>(verts.size()); ++i) new_of_old[verts[i]] = i + 1;
  std::vector<Link> es, as;
  for (const auto& e : edges_) {
    auto iu = new_of_old.find(e.u), iv = new_of_old.find(e.v);
    if (iu != new_of_old.end() && iv != new_of_old.end())
      es.push_back({iu->second, iv->second, e.w});
  }
  for (const auto& a : arcs_) {
    auto iu = new_of_old.find(a.u), iv = new_of_old.find(a.v);
    if (iu != new_of_old.end() && iv != new_of_old.end())
      as.push_back({iu->second, iv->second, a.w});
  }
  return MixedGraph::make(static_cast<int>(verts.size()), std::move(es), std::move(as));
}

long long DemandFn::sum() const { return std::accumulate(t.begin(), t.end(), 0LL); }

long long DemandFn::positive_total() const {
  long long p = 0;
  for (long long x : t)
    if (x > 0) p += x;
  return p;
}

ParityFn parity_from_demand(const DemandFn& t) {
  ParityFn h;
  h.h.assign(t.t.size(), Parity::Even);
  for (int v = 1; v <= t.size(); ++v) h.h[v] = parity_of(t(v) < 0 ? -t(v) : t(v));
  return h;
}

namespace {

// Reachability over per-vertex successor lists.
std::vector<char> reach_from(int start, int n, const std::vector<std::vector<int>>& adj) {
  std::vector<char> seen(n + 1, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return seen;
}

}  // namespace

bool is_strongly_connected(const MixedGraph& g) {
  int n = g.order();
  if (n <= 1) return true;
  std::vector<std::vector<int>> fwd(n + 1), bwd(n + 1);
  for (const auto& e : g.edges()) {
    fwd[e.u].push_back(e.v);
    fwd[e.v].push_back(e.u);
    bwd[e.u].push_back(e.v);
    bwd[e.v].push_back(e.u);
  }
  for (const auto& a : g.arcs()) {
    fwd[a.u].push_back(a.v);
    bwd[a.v].push_back(a.u);
  }
  auto f = reach_from(1, n, fwd);
  auto b = reach_from(1, n, bwd);
  for (int v = 1; v <= n; ++v)
    if (!f[v] || !b[v]) return false;
  return true;
}

bool is_connected(const MixedGraph& g) {
  int n = g.order();
  if (n <= 1) return true;
  std::vector<std::vector<int>> adj(n + 1);
  for (const auto& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (const auto& a : g.arcs()) {
    adj[a.u].push_back(a.v);
    adj[a.v].push_back(a.u);
  }
  auto seen = reach_from(1, n, adj);
  for (int v = 1; v <= n; ++v)
    if (!seen[v]) return false;
  return true;
}

bool is_balanced(const DirectedMultigraph& d) {
  for (int v = 1; v <= d.order(); ++v)
    if (d.imbalance(v) != 0) return false;
  return true;
}

bool is_t_balanced(const DirectedMultigraph& d, const DemandFn& t) {
  if (d.order() != t.size()) return false;
  for (int v = 1; v <= d.order(); ++v)
    if (d.imbalance(v) != t(v)) return false;
  return true;
}

bool is_eulerian(const DirectedMultigraph& d) {
  int n = d.order();
  for (int v = 1; v <= n; ++v)
    if (d.imbalance(v) != 0) return false;
  // Connectivity of the undirected version, ignoring isolated vertices.
  std::vector<std::vector<int>> adj(n + 1);
  for (const auto& [k, c] : d.arcs()) {
    adj[k.first].push_back(k.second);
    adj[k.second].push_back(k.first);
  }
  int start = 0;
  for (int v = 1; v <= n; ++v)
    if (d.out_degree(v) + d.in_degree(v) > 0) {
      start = v;
      break;
    }
  if (start == 0) return true;  // no arcs at all
  auto seen = reach_from(start, n, adj);
  for (int v = 1; v <= n; ++v)
    if (d.out_degree(v) + d.in_degree(v) > 0 && !seen[v]) return false;
  return true;
}

ClosedWalk eulerian_circuit(const DirectedMultigraph& d) {
  if (!is_eulerian(d)) fail(Errc::not_eulerian, "multigraph is not Eulerian");
  int n = d.order();
  if (d.empty()) {
    ClosedWalk w;
    if (n >= 1) w.vertices.push_back(1);
    return w;
  }
  // Sorted successor lists with remaining counts; Hierholzer with a stack,
  // always consuming the lexicographically smallest available head.
  std::vector<std::vector<std::pair<int, long long>>> succ(n + 1);
  for (const auto& [k, c] : d.arcs()) succ[k.first].push_back({k.second, c});
  std::vector<size_t> cursor(n + 1, 0);
  int start = 0;
  for (int v = 1; v <= n && start == 0; ++v)
    if (!succ[v].empty()) start = v;
  std::vector<int> stack{start}, circuit;
  while (!stack.empty()) {
    int v = stack.back();
    while (cursor[v] < succ[v].size() && succ[v][cursor[v]].second == 0) ++cursor[v];
    if (cursor[v] == succ[v].size()) {
      circuit.push_back(v);
      stack.pop_back();
    } else {
      auto& [head, left] = succ[v][cursor[v]];
      --left;
      stack.push_back(head);
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  return ClosedWalk{std::move(circuit)};
}

bool is_multi_orientation(const DirectedMultigraph& d, const MixedGraph& g) {
  if (d.order() != g.order()) return false;
  for (const auto& [k, c] : d.arcs()) {
    if (c <= 0) continue;
    // Arcs of g must be traversed in their own direction only; pairs without
    // a link must be unused.
    if (!g.has_edge(k.first, k.second) && !g.has_arc(k.first, k.second)) return false;
  }
  for (const auto& e : g.edges())
    if (d.mu(e.u, e.v) + d.mu(e.v, e.u) < 1) return false;
  for (const auto& a : g.arcs())
    if (d.mu(a.u, a.v) < 1) return false;
  return true;
}

bool is_h_balanced(const UndirectedMultigraph& h, const ParityFn& parity) {
  for (int v = 1; v <= h.order(); ++v)
    if (parity_of(h.degree(v)) != parity(v)) return false;
  return true;
}

Weight total_weight(const DirectedMultigraph& d, const MixedGraph& g) {
  Weight total = 0;
  for (const auto& [k, c] : d.arcs()) {
    if (c == 0) continue;
    auto w = g.link_weight(k.first, k.second);
    if (!w) fail(Errc::unknown_link, "multiplicity on a pair with no link");
    total += c * *w;
  }
  return total;
}

Weight total_weight(const UndirectedMultigraph& h, const MixedGraph& g) {
  Weight total = 0;
  for (const auto& [k, c] : h.edges()) {
    if (c == 0) continue;
    auto w = g.link_weight(k.first, k.second);
    if (!w) fail(Errc::unknown_link, "multiplicity on a pair with no link");
    total += c * *w;
  }
  return total;
}

DirectedMultigraph walk_traversal_counts(const ClosedWalk& walk, int n) {
  DirectedMultigraph d(n);
  for (size_t i = 0; i + 1 < walk.vertices.size(); ++i)
    d.add(walk.vertices[i], walk.vertices[i + 1], 1);
  return d;
}

bool walk_is_legal(const ClosedWalk& walk, const MixedGraph& g) {
  if (walk.vertices.empty()) return true;
  if (walk.vertices.front() != walk.vertices.back()) return false;
  for (size_t i = 0; i + 1 < walk.vertices.size(); ++i) {
    int u = walk.vertices[i], v = walk.vertices[i + 1];
    if (!g.has_edge(u, v) && !g.has_arc(u, v)) return false;
  }
  return true;
}

}  // namespace postman
