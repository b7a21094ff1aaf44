#pragma once

#include <limits>
#include <vector>

#include "postman/graph.hpp"

namespace postman {

inline constexpr Weight kUnreachable = std::numeric_limits<Weight>::max() / 4;

/// Floyd-Warshall distances with next-hop reconstruction over the edges of g
/// (arcs ignored; g must have none for the X-join use).
struct ApspTable {
  int n = 0;
  std::vector<std::vector<Weight>> dist;    // kUnreachable when disconnected
  std::vector<std::vector<int>> next_hop;   // -1 when disconnected

  bool reachable(int u, int v) const { return dist[u][v] < kUnreachable; }
  /// Vertex sequence of a minimum-weight u-v path (u == v gives {u}).
  std::vector<int> path(int u, int v) const;
};

ApspTable all_pairs_shortest_paths(const MixedGraph& g);

struct Matching {
  std::vector<std::pair<int, int>> pairs;  // 0-based indices into the input
  Weight weight = 0;
};

/// Minimum-weight perfect matching on a complete weighted graph given as a
/// symmetric matrix (kUnreachable entries are forbidden pairs). Exhaustive
/// subset dynamic program; exact. Throws ODD_ORDER for odd m, TOO_LARGE for
/// m > 22, DISCONNECTED when no finite-weight perfect matching exists.
Matching min_weight_perfect_matching(const std::vector<std::vector<Weight>>& w);

struct XJoinResult {
  UndirectedMultigraph join;  // multiplicities always 0/1 after canonicalization
  Weight weight = 0;
};

/// Minimum-weight edge set whose incidence parity is odd exactly at x.
/// Shortest-path matching construction; overlapping paths cancel pairwise.
/// Throws ODD_X, and DISCONNECTED when some component traps an odd part of x.
XJoinResult min_weight_xjoin(const MixedGraph& g, const std::vector<int>& x);

}  // namespace postman
