#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "postman/graph.hpp"

namespace postman {

/// Plain undirected graph on an explicit vertex subset of 1..n (labels kept).
struct SimpleGraph {
  std::vector<int> vertices;             // sorted, distinct
  std::vector<std::pair<int, int>> edges;  // u < v, sorted

  static SimpleGraph from_edges(const MixedGraph& g);
  bool has_vertex(int v) const;
};

enum class NodeKind { Leaf, Introduce, Forget, Join };

const char* node_kind_name(NodeKind k);

struct DecompNode {
  std::vector<int> bag;  // sorted
  int parent = -1;
  std::vector<int> children;
  NodeKind kind = NodeKind::Leaf;
};

/// Tree decomposition. Unrooted form uses tree_edges (root == -1); rooted
/// nice form uses parent/children/kind. When restricted is set, node kinds
/// are read on the bags intersected with `cprime`.
struct TreeDecomposition {
  std::vector<DecompNode> nodes;
  int root = -1;
  std::vector<std::pair<int, int>> tree_edges;  // unrooted form only
  bool nice = false;
  bool restricted = false;      // alpha = bag ∩ cprime (otherwise alpha = bag)
  std::vector<int> cprime;      // sorted

  std::vector<int> alpha(int x) const;
  /// Union of the bags over the subtree rooted at x (rooted form only).
  std::vector<int> gamma(int x) const;
  int width() const;
};

struct ValidationResult {
  bool ok = true;
  std::string reason;
};

/// The three decomposition conditions plus, for rooted decompositions, the
/// node-kind rules on the alpha-restriction.
ValidationResult validate_decomposition(const SimpleGraph& g, const TreeDecomposition& td);
ValidationResult validate_decomposition(const MixedGraph& g, const TreeDecomposition& td);

/// Graph on s: an edge wherever g has one inside s or a path whose internal
/// vertices all avoid s.
SimpleGraph torso(const SimpleGraph& g, const std::vector<int>& s);

/// Valid tree decomposition; exact minimum width up to 12 vertices
/// (elimination-order subset DP), min-fill heuristic beyond.
TreeDecomposition compute_tree_decomposition(const SimpleGraph& g);

/// Rooted binary nice decomposition of the same width.
TreeDecomposition make_nice(const TreeDecomposition& td);

struct CutDecomposition {
  std::vector<int> cprime;       // endpoints of the bottleneck edges
  std::set<EdgeKey> bottleneck;  // union of all deficient cuts
  TreeDecomposition td;
  long long max_alpha = 0;       // achieved max |bag ∩ cprime|
};

/// The decomposition driving the demand DP, or nullopt when the bottleneck
/// union is empty and the routing fast path applies.
std::optional<CutDecomposition> build_cut_decomposition(const MixedGraph& g, const DemandFn& t);

/// Single all-vertex leaf with empty cprime; lets the DP run on instances
/// that have a demand route.
CutDecomposition trivial_cut_decomposition(const MixedGraph& g);

std::string serialize_decomposition(const CutDecomposition& cd);

}  // namespace postman
