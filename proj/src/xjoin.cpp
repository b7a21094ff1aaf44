#include "postman/xjoin.hpp"

#include <algorithm>

namespace postman {

std::vector<int> ApspTable::path(int u, int v) const {
  std::vector<int> p{u};
  while (u != v) {
    u = next_hop[u][v];
    if (u < 0) fail(Errc::internal, "path requested between unreachable vertices");
    p.push_back(u);
  }
  return p;
}

ApspTable all_pairs_shortest_paths(const MixedGraph& g) {
  int n = g.order();
  ApspTable t;
  t.n = n;
  t.dist.assign(n + 1, std::vector<Weight>(n + 1, kUnreachable));
  t.next_hop.assign(n + 1, std::vector<int>(n + 1, -1));
  for (int v = 1; v <= n; ++v) {
    t.dist[v][v] = 0;
    t.next_hop[v][v] = v;
  }
  for (const auto& e : g.edges()) {
    if (e.w < t.dist[e.u][e.v]) {
      t.dist[e.u][e.v] = t.dist[e.v][e.u] = e.w;
      t.next_hop[e.u][e.v] = e.v;
      t.next_hop[e.v][e.u] = e.u;
    }
  }
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= n; ++i) {
      if (t.dist[i][k] >= kUnreachable) continue;
      for (int j = 1; j <= n; ++j) {
        if (t.dist[k][j] >= kUnreachable) continue;
        Weight via = t.dist[i][k] + t.dist[k][j];
        if (via < t.dist[i][j]) {
          t.dist[i][j] = via;
          t.next_hop[i][j] = t.next_hop[i][k];
        }
      }
    }
  return t;
}

Matching min_weight_perfect_matching(const std::vector<std::vector<Weight>>& w) {
  int m = static_cast<int>(w.size());
  if (m % 2 != 0) fail(Errc::odd_order, "perfect matching needs an even vertex count");
  Matching result;
  if (m == 0) return result;
  if (m > 22) fail(Errc::too_large, "matching instance beyond the subset-DP guard");

  int full = 1 << m;
  std::vector<Weight> dp(full, kUnreachable);
  std::vector<int> choice(full, -1);
  dp[0] = 0;
  for (int mask = 1; mask < full; ++mask) {
    int i = 0;
    while (!(mask & (1 << i))) ++i;
    for (int j = i + 1; j < m; ++j) {
      if (!(mask & (1 << j))) continue;
      int rest = mask ^ (1 << i) ^ (1 << j);
      if (dp[rest] >= kUnreachable || w[i][j] >= kUnreachable) continue;
      Weight cand = dp[rest] + w[i][j];
      if (cand < dp[mask]) {
        dp[mask] = cand;
        choice[mask] = j;
      }
    }
  }
  if (dp[full - 1] >= kUnreachable)
    fail(Errc::disconnected, "no finite-weight perfect matching");
  result.weight = dp[full - 1];
  int mask = full - 1;
  while (mask) {
    int i = 0;
    while (!(mask & (1 << i))) ++i;
    int j = choice[mask];
    result.pairs.push_back({i, j});
    mask ^= (1 << i) ^ (1 << j);
  }
  return result;
}

XJoinResult min_weight_xjoin(const MixedGraph& g, const std::vector<int>& x) {
  if (x.size() % 2 != 0) fail(Errc::odd_x, "|X| must be even");
  XJoinResult result;
  result.join = UndirectedMultigraph(g.order());
  if (x.empty()) return result;

  std::vector<int> xs = x;
  std::sort(xs.begin(), xs.end());

  ApspTable apsp = all_pairs_shortest_paths(g);
  int m = static_cast<int>(xs.size());
  std::vector<std::vector<Weight>> w(m, std::vector<Weight>(m, kUnreachable));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) w[i][j] = w[j][i] = apsp.dist[xs[i]][xs[j]];

  Matching matching;
  try {
    matching = min_weight_perfect_matching(w);
  } catch (const Error& e) {
    if (e.code() == Errc::disconnected)
      fail(Errc::disconnected, "a component contains an odd part of X");
    throw;
  }

  // Symmetric difference of the matched shortest paths: pairwise overlaps
  // cancel, which under nonnegative weights cannot increase the weight.
  std::map<EdgeKey, int> flips;
  for (const auto& [i, j] : matching.pairs) {
    std::vector<int> p = apsp.path(xs[i], xs[j]);
    for (size_t k = 0; k + 1 < p.size(); ++k) flips[edge_key(p[k], p[k + 1])] ^= 1;
  }
  for (const auto& [key, bit] : flips) {
    if (!bit) continue;
    result.join.add(key.first, key.second, 1);
    result.weight += g.edge_weight(key.first, key.second);
  }
  return result;
}

}  // namespace postman
