#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "postman/graph.hpp"

namespace postman {

/// Orientation of a sub-multigraph of some host multigraph whose per-vertex
/// imbalance matches a demand function.
struct DemandRoute {
  DirectedMultigraph arcs;
};

/// Host multigraph augmented with a terminal pair: t(v) parallel edges from
/// the source to each positive-demand vertex, -t(v) from each negative-demand
/// vertex to the sink.
struct TerminalGraph {
  UndirectedMultigraph graph;  // order = h.order() + 2
  int source = 0;
  int sink = 0;
  long long demand = 0;  // p = total positive demand
};

TerminalGraph attach_terminals(const UndirectedMultigraph& h, const DemandFn& t);

/// A route realizing t, or nullopt when the terminal max flow falls short of
/// the demand.
std::optional<DemandRoute> find_demand_route(const UndirectedMultigraph& h, const DemandFn& t);
std::optional<DemandRoute> find_demand_route(const MixedGraph& g, const DemandFn& t);

/// Edge multiset in a multigraph: copies removed per unordered pair.
using EdgeMultiset = std::map<EdgeKey, long long>;

/// Removing f separates the terminals, and restoring any single copy
/// reconnects them.
bool is_minimal_terminal_cut(const TerminalGraph& tg, const EdgeMultiset& f);

/// All minimal terminal cuts with fewer than `demand` copies, by exhaustive
/// enumeration over complete parallel classes (a cut containing a partial
/// class is never minimal).
std::vector<EdgeMultiset> enumerate_deficient_cuts(const TerminalGraph& tg);

/// Union over all deficient cuts of their restriction to E(g).
std::set<EdgeKey> bottleneck_union(const MixedGraph& g, const DemandFn& t);

/// True when the route uses each edge outside `reusable` at most once.
bool is_sparse_route(const DemandRoute& route, const MixedGraph& g,
                     const std::set<EdgeKey>& reusable);

/// Orient h so that every vertex ends up with imbalance t(v): remove the
/// route, orient the even remainder along per-component Euler tours, then add
/// the route's arcs back. Requires d_h(v) - t(v) even everywhere (PARITY).
DirectedMultigraph orient(const UndirectedMultigraph& h, const DemandRoute& route,
                          const DemandFn& t);

/// Each edge copy replaced by a path through a fresh midpoint vertex.
struct Subdivision {
  UndirectedMultigraph graph;
  struct Midpoint {
    int vertex;
    int u, v;  // original endpoints, u < v
  };
  std::vector<Midpoint> midpoints;
};

Subdivision subdivide_for_cuts(const UndirectedMultigraph& h);

}  // namespace postman
