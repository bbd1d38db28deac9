#include <random>

#include <doctest.h>

#include "skel/min_cost_flow.hpp"

using namespace skel;

namespace {

// Feasibility + complementary slackness certify optimality of an integer flow.
void check_optimality(const FlowNetwork& net, const Flow& flow) {
  REQUIRE(flow.arc_flow.size() == net.arcs.size());
  std::vector<long long> balance(net.node_count, 0);
  long long cost = 0;
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    const auto& a = net.arcs[i];
    long long f = flow.arc_flow[i];
    CHECK(f >= 0);
    if (a.capacity) CHECK(f <= *a.capacity);
    balance[a.from] += f;
    balance[a.to] -= f;
    cost += f * a.cost;
    long long reduced = a.cost + flow.potentials[a.from] - flow.potentials[a.to];
    if (!a.capacity || f < *a.capacity) CHECK(reduced >= 0);
    if (f > 0) CHECK(reduced <= 0);
  }
  for (int v = 0; v < net.node_count; ++v) CHECK(balance[v] == net.excess[v]);
  CHECK(cost == flow.total_cost);
}

// Minimum over all feasible valuations in a box, brute force.
struct BoxMin {
  bool feasible = false;
  long long objective = 0;
};

BoxMin box_min(const DiffSystem& sys, const LinearObjective& obj, long long limit) {
  BoxMin best;
  std::vector<long long> vals(sys.node_count, -limit);
  vals[sys.root] = 0;
  while (true) {
    bool ok = true;
    for (const auto& c : sys.constraints)
      if (vals[c.u] - vals[c.v] > c.bound) { ok = false; break; }
    if (ok) {
      long long o = 0;
      for (int i = 0; i < sys.node_count; ++i) o += obj.coeffs[i] * vals[i];
      if (!best.feasible || o < best.objective) best = {true, o};
    }
    int i = 0;
    for (; i < sys.node_count; ++i) {
      if (i == sys.root) continue;
      if (vals[i] < limit) { ++vals[i]; break; }
      vals[i] = -limit;
    }
    if (i == sys.node_count) break;
  }
  return best;
}

}  // namespace

TEST_CASE("single arc ships the unit") {
  FlowNetwork net{2, {{0, 1, 3, std::nullopt}}, {1, -1}};
  auto res = solve_min_cost_flow(net);
  REQUIRE(res.outcome == FlowOutcome::optimal);
  CHECK(res.flow.arc_flow == std::vector<long long>{1});
  CHECK(res.flow.total_cost == 3);
  check_optimality(net, res.flow);
}

TEST_CASE("cheaper two-hop path beats the direct arc") {
  FlowNetwork net{3,
                  {{0, 2, 5, std::nullopt}, {0, 1, 1, std::nullopt}, {1, 2, 1, std::nullopt}},
                  {2, 0, -2}};
  auto res = solve_min_cost_flow(net);
  REQUIRE(res.outcome == FlowOutcome::optimal);
  CHECK(res.flow.total_cost == 4);
  CHECK(res.flow.arc_flow == std::vector<long long>{0, 2, 2});
  check_optimality(net, res.flow);
}

TEST_CASE("capacity forces a split") {
  FlowNetwork net{3, {{0, 2, 5, std::nullopt}, {0, 1, 1, 1}, {1, 2, 1, std::nullopt}},
                  {2, 0, -2}};
  auto res = solve_min_cost_flow(net);
  REQUIRE(res.outcome == FlowOutcome::optimal);
  CHECK(res.flow.total_cost == 7);
  check_optimality(net, res.flow);
}

TEST_CASE("disconnected demand is infeasible") {
  FlowNetwork net{3, {{0, 1, 1, std::nullopt}}, {1, 0, -1}};
  CHECK(solve_min_cost_flow(net).outcome == FlowOutcome::infeasible);
}

TEST_CASE("uncapacitated negative cycle is unbounded") {
  FlowNetwork net{2, {{0, 1, -2, std::nullopt}, {1, 0, 1, std::nullopt}}, {0, 0}};
  auto res = solve_min_cost_flow(net);
  REQUIRE(res.outcome == FlowOutcome::unbounded);
  CHECK(res.cycle.weight == -1);
  CHECK(res.cycle.nodes.size() == 2);
}

TEST_CASE("negative arc costs without a cycle are handled") {
  FlowNetwork net{3, {{0, 1, -4, std::nullopt}, {1, 2, -1, std::nullopt}}, {1, 0, -1}};
  auto res = solve_min_cost_flow(net);
  REQUIRE(res.outcome == FlowOutcome::optimal);
  CHECK(res.flow.total_cost == -5);
  check_optimality(net, res.flow);
}

TEST_CASE("random networks satisfy complementary slackness") {
  std::mt19937_64 rng(97);
  for (int iter = 0; iter < 200; ++iter) {
    int n = 3 + static_cast<int>(rng() % 3);
    FlowNetwork net;
    net.node_count = n;
    net.excess.assign(n, 0);
    long long supply = 1 + static_cast<long long>(rng() % 4);
    net.excess[0] = supply;
    net.excess[n - 1] = -supply;
    // forward arcs only, so negative costs cannot close a cycle
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (rng() % 3 == 0 && !(u == 0 && v == n - 1)) continue;
        std::optional<long long> cap;
        if (rng() % 2) cap = 1 + static_cast<long long>(rng() % 4);
        net.arcs.push_back({u, v, static_cast<long long>(rng() % 11) - 3, cap});
      }
    auto res = solve_min_cost_flow(net);
    if (res.outcome == FlowOutcome::optimal) check_optimality(net, res.flow);
  }
}

TEST_CASE("difference LP on a one-constraint system") {
  DiffSystem sys{2, 0, {{1, 0, 2}}};  // a - r <= 2
  SUBCASE("maximize a") {
    auto res = solve_difference_lp(sys, LinearObjective{{0, -1}});
    REQUIRE(res.outcome == LpOutcome::optimal);
    CHECK(res.objective == -2);
    CHECK(res.valuation.values == std::vector<long long>{0, 2});
  }
  SUBCASE("minimize a with a lower bound") {
    DiffSystem both = sys;
    both.constraints.push_back({0, 1, 0});  // r - a <= 0
    auto res = solve_difference_lp(both, LinearObjective{{0, 1}});
    REQUIRE(res.outcome == LpOutcome::optimal);
    CHECK(res.objective == 0);
    CHECK(res.valuation.values == std::vector<long long>{0, 0});
  }
  SUBCASE("minimize a alone is unbounded") {
    CHECK(solve_difference_lp(sys, LinearObjective{{0, 1}}).outcome == LpOutcome::unbounded);
  }
}

TEST_CASE("difference LP reports negative cycles as infeasible") {
  DiffSystem sys{2, 0, {{0, 1, -1}, {1, 0, 0}}};
  auto res = solve_difference_lp(sys, LinearObjective{{0, 1}});
  REQUIRE(res.outcome == LpOutcome::infeasible);
  CHECK(res.cycle.weight == -1);
  CHECK(cycle_weight(sys, res.cycle.nodes) == -1);
}

TEST_CASE("difference LP matches box enumeration on random bounded systems") {
  std::mt19937_64 rng(4242);
  for (int iter = 0; iter < 150; ++iter) {
    int n = 2 + static_cast<int>(rng() % 3);
    DiffSystem sys{n, 0, {}};
    for (NodeId i = 1; i < n; ++i) {
      sys.constraints.push_back({i, 0, static_cast<long long>(rng() % 5)});
      sys.constraints.push_back({0, i, static_cast<long long>(rng() % 5)});
    }
    int extra = static_cast<int>(rng() % n);
    for (int e = 0; e < extra; ++e) {
      NodeId u = static_cast<NodeId>(rng() % n);
      NodeId v = static_cast<NodeId>(rng() % n);
      if (u == v) continue;
      sys.constraints.push_back({u, v, static_cast<long long>(rng() % 7) - 3});
    }
    LinearObjective obj{std::vector<long long>(n, 0)};
    for (int i = 1; i < n; ++i) obj.coeffs[i] = static_cast<long long>(rng() % 7) - 3;
    auto res = solve_difference_lp(sys, obj);
    auto ref = box_min(sys, obj, 6);
    if (res.outcome == LpOutcome::infeasible) {
      CHECK(!ref.feasible);
      CHECK(cycle_weight(sys, res.cycle.nodes) < 0);
      continue;
    }
    REQUIRE(res.outcome == LpOutcome::optimal);  // box bounds rule out unbounded
    REQUIRE(ref.feasible);
    CHECK(res.objective == ref.objective);
    CHECK(check_valuation(sys, res.valuation).empty());
    long long at = 0;
    for (int i = 0; i < n; ++i) at += obj.coeffs[i] * res.valuation.values[i];
    CHECK(at == res.objective);
  }
}
