#pragma once

#include <string>
#include <variant>
#include <vector>

#include "skel/common.hpp"

namespace skel {

// value(u) - value(v) <= bound
struct DiffConstraint {
  NodeId u = 0;
  NodeId v = 0;
  long long bound = 0;
};

// A system of two-variable difference constraints with a pinned root node
// (value(root) = 0).  Each constraint (u,v,b) induces the arc v -> u with
// weight b; shortest-path distances from the root give the componentwise
// maximal feasible valuation.  All bounds are exact integers.
struct DiffSystem {
  int node_count = 0;
  NodeId root = 0;
  std::vector<DiffConstraint> constraints;
};

struct Valuation {
  std::vector<long long> values;
};

// Witness of infeasibility: nodes c_0, ..., c_{L-1} such that each
// consecutive pair (c_i, c_{i+1 mod L}) is an arc of the constraint graph,
// i.e. some constraint (u = c_{i+1}, v = c_i, b), and the bounds along the
// cycle sum to weight < 0.
struct NegativeCycle {
  std::vector<NodeId> nodes;
  long long weight = 0;
};

struct ConstraintViolation {
  NodeId u = 0;
  NodeId v = 0;
  long long bound = 0;
  long long actual = 0;  // values[u] - values[v], or values[root] for the root pin
};

// Throws std::invalid_argument when node ids are out of range or a
// constraint relates a node to itself.
void validate(const DiffSystem& system);

// Componentwise-maximal feasible valuation with value(root) = 0, or a
// negative cycle when the system is infeasible.  Every node must be
// reachable from the root in the arc graph (throws std::logic_error
// otherwise); builders that cannot guarantee this must go through
// solve_difference_lp instead.
std::variant<Valuation, NegativeCycle> solve_max(const DiffSystem& system);

// Empty iff the valuation satisfies every constraint and pins the root to 0.
std::vector<ConstraintViolation> check_valuation(const DiffSystem& system,
                                                 const Valuation& valuation);

// Line-oriented debug dump, one constraint per line.
std::string dump(const DiffSystem& system);

// Sum of constraint bounds along a cycle in arc order; < 0 for a genuine
// witness.  Throws std::invalid_argument if some pair is not an arc.
long long cycle_weight(const DiffSystem& system, const std::vector<NodeId>& cycle);

}  // namespace skel
