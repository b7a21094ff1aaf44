#pragma once

#include <optional>
#include <vector>

#include "postman/error.hpp"

namespace postman {

inline constexpr long long kUnbounded = -1;

struct FlowArc {
  int from = 0;
  int to = 0;
  long long lower = 0;
  long long upper = 0;  // kUnbounded for no explicit cap
  long long cost = 0;
};

/// Directed flow network on nodes 0..size-1 with per-arc lower bounds, upper
/// bounds and costs. Unbounded uppers are capped at the sum of all lower
/// bounds: any feasible circulation can be reduced, cycle by cycle, to one
/// whose per-arc flow never exceeds that sum.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : nodes_(nodes) {}

  int add_arc(int from, int to, long long lower, long long upper, long long cost);

  int size() const { return nodes_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const FlowArc& arc(int i) const { return arcs_.at(i); }
  const std::vector<FlowArc>& arcs() const { return arcs_; }

  long long lower_sum() const { return lower_sum_; }
  long long effective_upper(int i) const;

 private:
  int nodes_;
  std::vector<FlowArc> arcs_;
  long long lower_sum_ = 0;
};

struct FlowAssignment {
  std::vector<long long> flow;  // indexed by arc id
};

struct MaxFlowResult {
  long long value = 0;
  FlowAssignment assignment;
};

/// Maximum s-t flow; requires all lower bounds zero. Integral.
MaxFlowResult max_flow(const FlowNetwork& net, int s, int t);

/// Minimum-cost feasible circulation, or nullopt when none exists. Integral.
std::optional<FlowAssignment> min_cost_circulation(const FlowNetwork& net);

long long circulation_cost(const FlowNetwork& net, const FlowAssignment& fa);

}  // namespace postman
