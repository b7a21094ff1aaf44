#pragma once

#include <vector>

#include "postman/graph.hpp"

namespace postman {

struct MultiLink {
  bool directed = false;
  int u = 0;
  int v = 0;  // arc direction u -> v when directed
  Weight w = 0;
};

/// Mixed multigraph instance: parallel links and edge/arc conflicts allowed.
struct MixedMultigraph {
  int n = 0;
  std::vector<MultiLink> links;
};

/// Result of normalizing a mixed multigraph to a simple MixedGraph.
/// Subdivided links run through a fresh midpoint with weights split (w, 0);
/// the weighted half starts at the original tail (arcs) or the smaller
/// endpoint (edges).
struct SimplifiedInstance {
  MixedGraph graph;

  struct Origin {
    bool directed = false;
    int u = 0;
    int v = 0;
    Weight w = 0;
    int midpoint = 0;  // 0 when the link was kept as-is
  };
  std::vector<Origin> origins;  // one entry per input link, same order

  struct LinkUse {
    long long forward = 0;   // u -> v traversals
    long long backward = 0;  // v -> u traversals (edges only)
  };

  /// Map a solution multigraph on the simplified graph back to per-input-link
  /// traversal counts. Preserves per-vertex imbalance, coverage, and weight.
  std::vector<LinkUse> translate_back(const DirectedMultigraph& d) const;

  Weight translated_weight(const std::vector<LinkUse>& use) const;
};

/// Subdivide parallel/conflicting links with fresh midpoints so the result is
/// simple. At most doubles the link count.
SimplifiedInstance simplify_instance(const MixedMultigraph& in);

}  // namespace postman
