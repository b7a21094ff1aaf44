#include "postman/solvers.hpp"

#include <algorithm>

#include "postman/flow.hpp"
#include "postman/karc.hpp"
#include "postman/troad.hpp"
#include "postman/xjoin.hpp"

namespace postman {

CppSolution solve_ucpp(const MixedGraph& g) {
  if (!g.arcs().empty()) fail(Errc::usage, "UCPP instance must have no arcs");
  if (!is_connected(g)) fail(Errc::disconnected, "UCPP needs a connected graph");

  std::vector<int> odd;
  for (int v = 1; v <= g.order(); ++v)
    if (g.edge_degree(v) % 2 != 0) odd.push_back(v);
  XJoinResult join = min_weight_xjoin(g, odd);

  UndirectedMultigraph h = g.edge_multigraph();
  for (const auto& [k, c] : join.join.edges()) h.add(k.first, k.second, c);

  DemandRoute empty_route;
  empty_route.arcs = DirectedMultigraph(g.order());
  CppSolution sol;
  sol.multigraph = orient(h, empty_route, DemandFn::zero(g.order()));
  sol.weight = g.total_edge_weight() + join.weight;
  return sol;
}

CppSolution solve_dcpp(const MixedGraph& g) {
  if (!g.edges().empty()) fail(Errc::usage, "DCPP instance must have no edges");
  if (!is_strongly_connected(g)) fail(Errc::not_strongly_connected, "DCPP needs strong connectivity");

  int m = static_cast<int>(g.arcs().size());
  FlowNetwork net(g.order());
  std::vector<int> optional_arc(m);
  for (int i = 0; i < m; ++i) {
    const Link& a = g.arcs()[i];
    net.add_arc(a.u - 1, a.v - 1, 1, 1, a.w);
    optional_arc[i] = net.add_arc(a.u - 1, a.v - 1, 0, kUnbounded, a.w);
  }
  auto fa = min_cost_circulation(net);
  if (!fa) fail(Errc::not_strongly_connected, "no feasible circulation");

  CppSolution sol;
  sol.multigraph = DirectedMultigraph(g.order());
  for (int i = 0; i < m; ++i) {
    const Link& a = g.arcs()[i];
    sol.multigraph.add(a.u, a.v, 1 + fa->flow[optional_arc[i]]);
  }
  sol.weight = total_weight(sol.multigraph, g);
  return sol;
}

CppSolution solve_mcpp_edges(const MixedGraph& g) {
  if (!is_strongly_connected(g))
    fail(Errc::not_strongly_connected, "MCPP needs strong connectivity");

  int k = static_cast<int>(g.edges().size());
  int m_arcs = static_cast<int>(g.arcs().size());
  if (k > 25) fail(Errc::too_large, "2^|E| assignments beyond the guard");

  bool have = false;
  CppSolution best;
  std::vector<long long> best_encode;

  for (std::uint64_t mask = 0; mask < (1ULL << k); ++mask) {
    FlowNetwork net(g.order());
    std::vector<int> arc_opt(m_arcs);
    for (int i = 0; i < m_arcs; ++i) {
      const Link& a = g.arcs()[i];
      net.add_arc(a.u - 1, a.v - 1, 1, 1, a.w);
      arc_opt[i] = net.add_arc(a.u - 1, a.v - 1, 0, kUnbounded, a.w);
    }
    std::vector<std::pair<int, int>> edge_dirs(k);
    for (int i = 0; i < k; ++i) {
      const Link& e = g.edges()[i];
      bool reversed = (mask >> i) & 1;  // which direction carries the unit lower bound
      int fwd = net.add_arc(e.u - 1, e.v - 1, reversed ? 0 : 1, kUnbounded, e.w);
      int bwd = net.add_arc(e.v - 1, e.u - 1, reversed ? 1 : 0, kUnbounded, e.w);
      edge_dirs[i] = {fwd, bwd};
    }
    auto fa = min_cost_circulation(net);
    if (!fa) continue;

    CppSolution cand;
    cand.multigraph = DirectedMultigraph(g.order());
    for (int i = 0; i < m_arcs; ++i) {
      const Link& a = g.arcs()[i];
      cand.multigraph.add(a.u, a.v, 1 + fa->flow[arc_opt[i]]);
    }
    for (int i = 0; i < k; ++i) {
      const Link& e = g.edges()[i];
      cand.multigraph.add(e.u, e.v, fa->flow[edge_dirs[i].first]);
      cand.multigraph.add(e.v, e.u, fa->flow[edge_dirs[i].second]);
    }
    cand.weight = total_weight(cand.multigraph, g);

    if (!have || cand.weight < best.weight) {
      have = true;
      best = cand;
      best_encode = cand.multigraph.encode();
    } else if (cand.weight == best.weight) {
      auto enc = cand.multigraph.encode();
      if (enc < best_encode) {
        best = cand;
        best_encode = std::move(enc);
      }
    }
  }
  if (!have) fail(Errc::internal, "no edge-direction assignment was feasible");
  return best;
}

namespace {

// Exhaustive search over per-link traversal counts with exact-balance and
// weight/arc-count lower-bound pruning. Keeps the (weight, arc count,
// canonical encoding)-least candidate, so the result is an arc-minimal
// optimum.
class OracleSearch {
 public:
  OracleSearch(const MixedGraph& g, std::vector<long long> target, long long edge_cap,
               long long arc_cap)
      : g_(g), target_(std::move(target)) {
    int n = g.order();
    imb_.assign(n + 1, 0);
    rem_.assign(n + 1, 0);
    last_idx_.assign(n + 1, -1);
    for (const auto& e : g.edges()) links_.push_back({false, e.u, e.v, e.w, edge_cap});
    for (const auto& a : g.arcs()) links_.push_back({true, a.u, a.v, a.w, arc_cap});
    int nl = static_cast<int>(links_.size());
    chosen_.assign(nl, {0, 0});
    suf_w_.assign(nl + 1, 0);
    suf_links_.assign(nl + 1, 0);
    for (int i = nl - 1; i >= 0; --i) {
      suf_w_[i] = suf_w_[i + 1] + links_[i].w;
      suf_links_[i] = suf_links_[i + 1] + 1;
    }
    for (int i = 0; i < nl; ++i) {
      rem_[links_[i].u] += links_[i].cap;
      rem_[links_[i].v] += links_[i].cap;
      last_idx_[links_[i].u] = i;
      last_idx_[links_[i].v] = i;
    }
  }

  std::optional<CppSolution> run() {
    for (int v = 1; v <= g_.order(); ++v)
      if (last_idx_[v] < 0 && target_[v] != 0) return std::nullopt;
    dfs(0);
    if (!found_) return std::nullopt;
    CppSolution sol;
    sol.weight = best_w_;
    sol.multigraph = std::move(best_d_);
    return sol;
  }

 private:
  struct LinkState {
    bool directed;
    int u, v;
    Weight w;
    long long cap;
  };

  void consider() {
    if (found_) {
      if (cur_w_ > best_w_ || (cur_w_ == best_w_ && cur_arcs_ > best_arcs_)) return;
      if (cur_w_ == best_w_ && cur_arcs_ == best_arcs_) {
        DirectedMultigraph d = build();
        auto enc = d.encode();
        if (enc < best_encode_) {
          best_d_ = std::move(d);
          best_encode_ = std::move(enc);
        }
        return;
      }
    }
    found_ = true;
    best_w_ = cur_w_;
    best_arcs_ = cur_arcs_;
    best_d_ = build();
    best_encode_ = best_d_.encode();
  }

  DirectedMultigraph build() const {
    DirectedMultigraph d(g_.order());
    for (size_t i = 0; i < links_.size(); ++i) {
      const auto& l = links_[i];
      if (chosen_[i].first) d.add(l.u, l.v, chosen_[i].first);
      if (chosen_[i].second) d.add(l.v, l.u, chosen_[i].second);
    }
    return d;
  }

  bool endpoints_ok(int i, int u, int v) const {
    for (int x : {u, v}) {
      long long gap = target_[x] - imb_[x];
      if (last_idx_[x] == i) {
        if (gap != 0) return false;
      } else if (gap > rem_[x] || -gap > rem_[x]) {
        return false;
      }
    }
    return true;
  }

  void dfs(int i) {
    if (found_) {
      Weight lb_w = cur_w_ + suf_w_[i];
      long long lb_a = cur_arcs_ + suf_links_[i];
      if (lb_w > best_w_ || (lb_w == best_w_ && lb_a > best_arcs_)) return;
    }
    if (i == static_cast<int>(links_.size())) {
      consider();
      return;
    }
    const LinkState& l = links_[i];
    rem_[l.u] -= l.cap;
    rem_[l.v] -= l.cap;
    if (l.directed) {
      for (long long c = 1; c <= l.cap; ++c) {
        imb_[l.u] += c;
        imb_[l.v] -= c;
        cur_w_ += l.w * c;
        cur_arcs_ += c;
        chosen_[i] = {c, 0};
        if (endpoints_ok(i, l.u, l.v)) dfs(i + 1);
        imb_[l.u] -= c;
        imb_[l.v] += c;
        cur_w_ -= l.w * c;
        cur_arcs_ -= c;
      }
    } else {
      for (long long f = 0; f <= l.cap; ++f) {
        for (long long b = (f == 0 ? 1 : 0); f + b <= l.cap; ++b) {
          imb_[l.u] += f - b;
          imb_[l.v] += b - f;
          cur_w_ += l.w * (f + b);
          cur_arcs_ += f + b;
          chosen_[i] = {f, b};
          if (endpoints_ok(i, l.u, l.v)) dfs(i + 1);
          imb_[l.u] -= f - b;
          imb_[l.v] -= b - f;
          cur_w_ -= l.w * (f + b);
          cur_arcs_ -= f + b;
        }
      }
    }
    chosen_[i] = {0, 0};
    rem_[l.u] += l.cap;
    rem_[l.v] += l.cap;
  }

  const MixedGraph& g_;
  std::vector<LinkState> links_;
  std::vector<long long> target_, imb_, rem_;
  std::vector<int> last_idx_;
  std::vector<Weight> suf_w_;
  std::vector<long long> suf_links_;
  std::vector<std::pair<long long, long long>> chosen_;
  Weight cur_w_ = 0;
  long long cur_arcs_ = 0;
  bool found_ = false;
  Weight best_w_ = 0;
  long long best_arcs_ = 0;
  std::vector<long long> best_encode_;
  DirectedMultigraph best_d_;
};

}  // namespace

CppSolution oracle_mcpp(const MixedGraph& g) {
  if (g.edges().size() + g.arcs().size() > 9 || g.order() > 7)
    fail(Errc::too_large, "oracle guard: at most 9 links and 7 vertices");
  if (!is_strongly_connected(g))
    fail(Errc::not_strongly_connected, "MCPP needs strong connectivity");
  long long k = static_cast<long long>(g.arcs().size());
  long long edge_cap = std::max(arc_traversal_bound(k), 2LL);
  long long arc_cap = 2 * k;
  // Full coverage plus a strongly connected instance makes every candidate's
  // undirected version connected, so exact balance alone certifies Eulerian.
  OracleSearch search(g, std::vector<long long>(g.order() + 1, 0), edge_cap, arc_cap);
  auto sol = search.run();
  if (!sol) fail(Errc::internal, "no Eulerian multi-orientation found");
  return *sol;
}

std::optional<CppSolution> oracle_bcpp(const MixedGraph& g, const DemandFn& t) {
  if (!g.arcs().empty()) fail(Errc::usage, "demand instances have no arcs");
  if (t.size() != g.order()) fail(Errc::usage, "demand size mismatch");
  if (t.sum() != 0) fail(Errc::demand_sum, "demands must sum to zero");
  long long p = t.positive_total();
  if (g.edges().size() > 9 || g.order() > 7 || p > 4)
    fail(Errc::too_large, "oracle guard: at most 9 edges, 7 vertices, p <= 4");
  long long edge_cap = std::max(p, 2LL);
  OracleSearch search(g, t.t, edge_cap, 0);
  return search.run();
}

}  // namespace postman
