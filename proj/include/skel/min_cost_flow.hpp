#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skel/diff_system.hpp"

namespace skel {

struct FlowArc {
  NodeId from = 0;
  NodeId to = 0;
  long long cost = 0;
  std::optional<long long> capacity;  // nullopt = uncapacitated
};

// Min-cost-flow network with integer costs and node excesses
// (positive = supply, negative = demand; excesses sum to zero).
struct FlowNetwork {
  int node_count = 0;
  std::vector<FlowArc> arcs;
  std::vector<long long> excess;
};

// Integer flow together with optimal node potentials.  Conservation at each
// node: outflow - inflow = excess(node).  At optimality every residual arc
// satisfies cost + p(from) - p(to) >= 0, with equality on arcs carrying flow.
struct Flow {
  std::vector<long long> arc_flow;
  long long total_cost = 0;
  std::vector<long long> potentials;
};

enum class FlowOutcome {
  optimal,
  infeasible,  // some supply cannot reach a demand
  unbounded,   // negative-cost cycle of uncapacitated arcs
};

struct FlowResult {
  FlowOutcome outcome = FlowOutcome::optimal;
  Flow flow;            // valid iff optimal
  NegativeCycle cycle;  // valid iff unbounded; nodes in arc (from -> to) order
};

// Successive shortest paths with node potentials; one initial Bellman-Ford
// pass tolerates negative arc costs.  Uncapacitated arcs are capped
// internally at the total positive supply, which preserves the optimum.
// Shortest-path ties are broken towards the lower node id.
FlowResult solve_min_cost_flow(const FlowNetwork& net);

std::string dump(const FlowNetwork& net);

// Objective over the nodes of a difference system; the root coefficient
// must be zero (constant terms fold out at the caller).
struct LinearObjective {
  std::vector<long long> coeffs;
};

enum class LpOutcome {
  optimal,
  infeasible,  // the difference system has a negative cycle
  unbounded,   // objective unbounded below over the feasible region
};

struct DiffLpResult {
  LpOutcome outcome = LpOutcome::optimal;
  Valuation valuation;      // valid iff optimal
  long long objective = 0;  // valid iff optimal
  NegativeCycle cycle;      // valid iff infeasible; DiffSystem arc order
};

// Minimizes sum(coeffs * values) over feasible valuations with
// value(root) = 0.
//
// Dual construction (orientation fixed here once and guarded by the
// oracle-equivalence tests): each constraint (u,v,b) becomes the flow arc
// u -> v with cost b and unbounded capacity; excess(w) = -coeffs[w] for
// w != root and excess(root) = sum of coeffs over the other nodes.  The LP
// optimum equals minus the min flow cost.  The valuation is recovered as
// shortest-path distances in the residual graph (constraint arcs v -> u
// with weight b, plus u -> v with weight -b where the flow is positive),
// computed from a virtual source reaching every node and shifted so that
// the root maps to 0.
DiffLpResult solve_difference_lp(const DiffSystem& system, const LinearObjective& obj);

}  // namespace skel
