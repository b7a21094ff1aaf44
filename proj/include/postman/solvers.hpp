#pragma once

#include <optional>

#include "postman/graph.hpp"

namespace postman {

/// A postman solution: a multi-orientation of the instance (Eulerian for the
/// closed-walk problems, t-balanced for the demand variant) plus its weight.
/// The walk is filled in only when a caller asks for one.
struct CppSolution {
  Weight weight = 0;
  DirectedMultigraph multigraph;
  std::optional<ClosedWalk> walk;
};

/// Optimal undirected postman tour: double a minimum X-join over the
/// odd-degree vertices and orient the even multigraph along an Euler tour.
CppSolution solve_ucpp(const MixedGraph& g);

/// Optimal directed postman tour via a minimum-cost circulation with a
/// mandatory unit copy and an unbounded optional copy per arc.
CppSolution solve_dcpp(const MixedGraph& g);

/// Mixed postman tour, exponential in |E|: one circulation per assignment of
/// which direction of each edge carries the unit lower bound.
CppSolution solve_mcpp_edges(const MixedGraph& g);

/// Exhaustive reference optimum for tiny mixed instances. Among optima it
/// returns one with the fewest arcs, then the lexicographically least
/// canonical encoding. Guards are hard errors (TOO_LARGE), never silent
/// truncation.
CppSolution oracle_mcpp(const MixedGraph& g);

/// Exhaustive reference optimum for tiny demand instances; nullopt when no
/// t-balanced multi-orientation exists within the per-edge bound.
std::optional<CppSolution> oracle_bcpp(const MixedGraph& g, const DemandFn& t);

}  // namespace postman
