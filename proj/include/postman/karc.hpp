#pragma once

#include <vector>

#include "postman/graph.hpp"
#include "postman/solvers.hpp"

namespace postman {

/// Upper bound on the total number of arc traversals in an arc-minimal
/// optimum: floor(k^2/2 + 2k).
inline long long arc_traversal_bound(long long k) { return (k * k + 4 * k) / 2; }

/// Guessed traversal count per arc, aligned with MixedGraph::arcs() order.
struct ArcGuess {
  std::vector<long long> count;  // each >= 1
  long long total() const;
};

/// Every guess with per-arc count >= 1 and total <= cap, in lexicographic
/// order; exactly C(cap, k) of them. Throws EMPTY when cap < k.
std::vector<ArcGuess> enumerate_arc_guesses(int k, long long cap);

/// Demand instance left after fixing the arc traversals: the edge graph with
/// w restricted to E, and per-vertex demand = guessed in-traversals minus
/// out-traversals.
struct EdgeRestriction {
  MixedGraph graph;  // edges only
  DemandFn demand;
};

EdgeRestriction restrict_to_edges(const MixedGraph& g, const ArcGuess& guess);

/// Add guess(a) copies of each arc back onto an edge-side solution.
DirectedMultigraph recombine(const DirectedMultigraph& edge_solution, const MixedGraph& g,
                             const ArcGuess& guess);

struct KarcOptions {
  bool force_dp = false;  // forwarded to the demand solver
};

/// Optimal mixed postman tour parameterized by the arcs: minimize over all
/// arc guesses the edge-side optimum plus the guessed arc weight.
CppSolution solve_karc(const MixedGraph& g, const KarcOptions& opt = {});

}  // namespace postman
