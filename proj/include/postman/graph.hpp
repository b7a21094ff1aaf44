#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "postman/error.hpp"

namespace postman {

using Weight = long long;

// Unordered vertex pair, stored with first < second.
using EdgeKey = std::pair<int, int>;
// Ordered pair (tail, head).
using ArcKey = std::pair<int, int>;

inline EdgeKey edge_key(int u, int v) { return u < v ? EdgeKey{u, v} : EdgeKey{v, u}; }

struct Link {
  int u = 0;
  int v = 0;
  Weight w = 0;
};

/// Directed multigraph as an explicit multiplicity map; absent pairs mean 0.
class DirectedMultigraph {
 public:
  DirectedMultigraph() = default;
  explicit DirectedMultigraph(int n) : n_(n), out_(n + 1, 0), in_(n + 1, 0) {}

  int order() const { return n_; }

  void add(int u, int v, long long count = 1);
  long long mu(int u, int v) const;

  long long out_degree(int v) const { return out_.at(v); }
  long long in_degree(int v) const { return in_.at(v); }
  long long imbalance(int v) const { return out_.at(v) - in_.at(v); }
  long long arc_count() const { return total_; }
  bool empty() const { return mu_.empty(); }

  const std::map<ArcKey, long long>& arcs() const { return mu_; }

  /// Canonical encoding: (u, v, count) triples in lexicographic order.
  std::vector<long long> encode() const;

  bool operator==(const DirectedMultigraph& o) const { return n_ == o.n_ && mu_ == o.mu_; }

 private:
  int n_ = 0;
  std::map<ArcKey, long long> mu_;
  std::vector<long long> out_, in_;
  long long total_ = 0;
};

/// Undirected multigraph as an explicit multiplicity map keyed by unordered pairs.
class UndirectedMultigraph {
 public:
  UndirectedMultigraph() = default;
  explicit UndirectedMultigraph(int n) : n_(n), deg_(n + 1, 0) {}

  int order() const { return n_; }

  void add(int u, int v, long long count = 1);
  long long mult(int u, int v) const;

  long long degree(int v) const { return deg_.at(v); }
  long long edge_count() const { return total_; }
  bool empty() const { return mult_.empty(); }

  const std::map<EdgeKey, long long>& edges() const { return mult_; }

  std::vector<long long> encode() const;

  bool operator==(const UndirectedMultigraph& o) const { return n_ == o.n_ && mult_ == o.mult_; }

 private:
  int n_ = 0;
  std::map<EdgeKey, long long> mult_;
  std::vector<long long> deg_;
  long long total_ = 0;
};

/// Simple weighted mixed graph on vertices 1..n: disjoint edge and arc sets,
/// at most one link per unordered vertex pair, no self-loops, weights >= 0.
class MixedGraph {
 public:
  MixedGraph() = default;
  static MixedGraph make(int n, std::vector<Link> edges, std::vector<Link> arcs = {});

  int order() const { return n_; }
  const std::vector<Link>& edges() const { return edges_; }
  const std::vector<Link>& arcs() const { return arcs_; }

  bool has_edge(int u, int v) const { return edge_w_.count(edge_key(u, v)) > 0; }
  bool has_arc(int u, int v) const { return arc_w_.count({u, v}) > 0; }
  bool has_link(int u, int v) const;

  Weight edge_weight(int u, int v) const;
  Weight arc_weight(int u, int v) const;
  /// Weight of whatever link joins u and v (edge, or arc in either direction).
  std::optional<Weight> link_weight(int u, int v) const;

  Weight total_edge_weight() const;
  long long edge_degree(int v) const;

  /// One copy of every edge, arcs ignored.
  UndirectedMultigraph edge_multigraph() const;

  /// Induced subgraph on `verts`, relabeled to 1..k in the given order.
  MixedGraph induced(const std::vector<int>& verts) const;

 private:
  int n_ = 0;
  std::vector<Link> edges_;  // u < v, sorted
  std::vector<Link> arcs_;   // sorted by (u, v)
  std::map<EdgeKey, Weight> edge_w_;
  std::map<ArcKey, Weight> arc_w_;
};

/// Per-vertex integer demands; index 0 unused.
struct DemandFn {
  std::vector<long long> t;

  static DemandFn zero(int n) { return DemandFn{std::vector<long long>(n + 1, 0)}; }
  long long operator()(int v) const { return t.at(v); }
  int size() const { return static_cast<int>(t.size()) - 1; }
  long long sum() const;
  /// p = sum of the positive demands.
  long long positive_total() const;
};

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

/// Group addition in Z2 with Even as the identity.
inline Parity parity_add(Parity a, Parity b) {
  return (a == b) ? Parity::Even : Parity::Odd;
}

inline Parity parity_of(long long x) { return (x % 2 != 0) ? Parity::Odd : Parity::Even; }

struct ParityFn {
  std::vector<Parity> h;  // index 0 unused
  Parity operator()(int v) const { return h.at(v); }
  int size() const { return static_cast<int>(h.size()) - 1; }
};

/// h(v) = Odd exactly when t(v) is odd.
ParityFn parity_from_demand(const DemandFn& t);

struct ClosedWalk {
  std::vector<int> vertices;
};

// ---- predicates and basic operations ----

bool is_strongly_connected(const MixedGraph& g);

/// All n vertices lie in one component of the undirected skeleton.
bool is_connected(const MixedGraph& g);

bool is_balanced(const DirectedMultigraph& d);
bool is_t_balanced(const DirectedMultigraph& d, const DemandFn& t);

/// Balanced at every vertex that has arcs, and the undirected version of the
/// arc set is connected (isolated vertices ignored).
bool is_eulerian(const DirectedMultigraph& d);

/// Closed walk using each arc exactly its multiplicity; deterministic under
/// lexicographic arc selection. Throws NOT_EULERIAN.
ClosedWalk eulerian_circuit(const DirectedMultigraph& d);

bool is_multi_orientation(const DirectedMultigraph& d, const MixedGraph& g);

bool is_h_balanced(const UndirectedMultigraph& h, const ParityFn& parity);

/// Sum of multiplicity times link weight. Throws UNKNOWN_LINK when a positive
/// multiplicity has no underlying link in g.
Weight total_weight(const DirectedMultigraph& d, const MixedGraph& g);
Weight total_weight(const UndirectedMultigraph& h, const MixedGraph& g);

/// Traversal-count multigraph of a closed walk.
DirectedMultigraph walk_traversal_counts(const ClosedWalk& walk, int n);

/// Every consecutive step of the walk traverses a link of g in a legal direction.
bool walk_is_legal(const ClosedWalk& walk, const MixedGraph& g);

}  // namespace postman
