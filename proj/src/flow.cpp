#include "postman/flow.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace postman {

namespace {
constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
}

int FlowNetwork::add_arc(int from, int to, long long lower, long long upper, long long cost) {
  if (from < 0 || from >= nodes_ || to < 0 || to >= nodes_)
    fail(Errc::internal, "flow arc endpoint out of range");
  if (lower < 0 || cost < 0) fail(Errc::internal, "negative lower bound or cost");
  if (upper != kUnbounded && upper < lower) fail(Errc::internal, "upper below lower");
  arcs_.push_back({from, to, lower, upper, cost});
  lower_sum_ += lower;
  return static_cast<int>(arcs_.size()) - 1;
}

long long FlowNetwork::effective_upper(int i) const {
  const FlowArc& a = arcs_.at(i);
  if (a.upper != kUnbounded) return a.upper;
  return std::max(a.lower, lower_sum_);
}

namespace {

// Shared residual-graph representation: paired forward/backward entries.
struct Residual {
  struct Entry {
    int to;
    long long cap;
    long long cost;
  };
  std::vector<Entry> entries;
  std::vector<std::vector<int>> adj;

  explicit Residual(int nodes) : adj(nodes) {}

  int add(int from, int to, long long cap, long long cost) {
    int id = static_cast<int>(entries.size());
    entries.push_back({to, cap, cost});
    entries.push_back({from, 0, -cost});
    adj[from].push_back(id);
    adj[to].push_back(id + 1);
    return id;
  }

  long long flow_on(int id) const { return entries[id + 1].cap; }
};

bool dinic_bfs(const Residual& r, int s, int t, std::vector<int>& level) {
  std::fill(level.begin(), level.end(), -1);
  std::deque<int> q{s};
  level[s] = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int id : r.adj[v]) {
      const auto& e = r.entries[id];
      if (e.cap > 0 && level[e.to] < 0) {
        level[e.to] = level[v] + 1;
        q.push_back(e.to);
      }
    }
  }
  return level[t] >= 0;
}

long long dinic_dfs(Residual& r, int v, int t, long long limit, const std::vector<int>& level,
                    std::vector<size_t>& it) {
  if (v == t || limit == 0) return limit;
  long long pushed = 0;
  for (; it[v] < r.adj[v].size(); ++it[v]) {
    int id = r.adj[v][it[v]];
    auto& e = r.entries[id];
    if (e.cap <= 0 || level[e.to] != level[v] + 1) continue;
    long long got = dinic_dfs(r, e.to, t, std::min(limit - pushed, e.cap), level, it);
    if (got > 0) {
      e.cap -= got;
      r.entries[id ^ 1].cap += got;
      pushed += got;
      if (pushed == limit) break;
    }
  }
  return pushed;
}

}  // namespace

MaxFlowResult max_flow(const FlowNetwork& net, int s, int t) {
  if (s == t) fail(Errc::internal, "source equals sink");
  for (int i = 0; i < net.arc_count(); ++i)
    if (net.arc(i).lower != 0) fail(Errc::internal, "max_flow requires zero lower bounds");

  Residual r(net.size());
  std::vector<int> arc_entry(net.arc_count());
  for (int i = 0; i < net.arc_count(); ++i) {
    const FlowArc& a = net.arc(i);
    arc_entry[i] = r.add(a.from, a.to, net.effective_upper(i), 0);
  }

  long long value = 0;
  std::vector<int> level(net.size());
  std::vector<size_t> it(net.size());
  while (dinic_bfs(r, s, t, level)) {
    std::fill(it.begin(), it.end(), 0);
    while (long long got = dinic_dfs(r, s, t, kInf, level, it)) value += got;
  }

  MaxFlowResult res;
  res.value = value;
  res.assignment.flow.resize(net.arc_count());
  for (int i = 0; i < net.arc_count(); ++i) res.assignment.flow[i] = r.flow_on(arc_entry[i]);
  return res;
}

std::optional<FlowAssignment> min_cost_circulation(const FlowNetwork& net) {
  // Standard excess-node transformation: ship each lower bound up front and
  // restore conservation with a super source/sink pair.
  int n = net.size();
  int s = n, t = n + 1;
  Residual r(n + 2);

  std::vector<long long> excess(n, 0);
  std::vector<int> arc_entry(net.arc_count(), -1);
  for (int i = 0; i < net.arc_count(); ++i) {
    const FlowArc& a = net.arc(i);
    long long span = net.effective_upper(i) - a.lower;
    arc_entry[i] = r.add(a.from, a.to, span, a.cost);
    excess[a.to] += a.lower;
    excess[a.from] -= a.lower;
  }
  long long need = 0;
  for (int v = 0; v < n; ++v) {
    if (excess[v] > 0) {
      r.add(s, v, excess[v], 0);
      need += excess[v];
    } else if (excess[v] < 0) {
      r.add(v, t, -excess[v], 0);
    }
  }

  // Successive shortest augmenting paths; SPFA tolerates the negative
  // residual costs that appear after augmentation.
  long long shipped = 0;
  std::vector<long long> dist(n + 2);
  std::vector<int> pre(n + 2);
  std::vector<char> inq(n + 2);
  while (shipped < need) {
    std::fill(dist.begin(), dist.end(), kInf);
    std::fill(pre.begin(), pre.end(), -1);
    std::fill(inq.begin(), inq.end(), 0);
    dist[s] = 0;
    std::deque<int> q{s};
    inq[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      inq[v] = 0;
      for (int id : r.adj[v]) {
        const auto& e = r.entries[id];
        if (e.cap > 0 && dist[v] + e.cost < dist[e.to]) {
          dist[e.to] = dist[v] + e.cost;
          pre[e.to] = id;
          if (!inq[e.to]) {
            inq[e.to] = 1;
            q.push_back(e.to);
          }
        }
      }
    }
    if (dist[t] >= kInf) return std::nullopt;  // demand cannot be met
    long long push = need - shipped;
    for (int v = t; v != s;) {
      int id = pre[v];
      push = std::min(push, r.entries[id].cap);
      v = r.entries[id ^ 1].to;
    }
    for (int v = t; v != s;) {
      int id = pre[v];
      r.entries[id].cap -= push;
      r.entries[id ^ 1].cap += push;
      v = r.entries[id ^ 1].to;
    }
    shipped += push;
  }

  FlowAssignment fa;
  fa.flow.resize(net.arc_count());
  for (int i = 0; i < net.arc_count(); ++i)
    fa.flow[i] = net.arc(i).lower + r.flow_on(arc_entry[i]);
  return fa;
}

long long circulation_cost(const FlowNetwork& net, const FlowAssignment& fa) {
  long long total = 0;
  for (int i = 0; i < net.arc_count(); ++i) total += net.arc(i).cost * fa.flow[i];
  return total;
}

}  // namespace postman
