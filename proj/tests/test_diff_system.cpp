#include <algorithm>
#include <random>

#include <doctest.h>

#include "skel/diff_system.hpp"

using namespace skel;

namespace {

// All feasible valuations with values in [-limit, limit] and root pinned to 0.
std::vector<std::vector<long long>> enumerate_box(const DiffSystem& sys, long long limit) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> vals(sys.node_count, -limit);
  vals[sys.root] = 0;
  while (true) {
    bool ok = true;
    for (const auto& c : sys.constraints)
      if (vals[c.u] - vals[c.v] > c.bound) { ok = false; break; }
    if (ok) out.push_back(vals);
    int i = 0;
    for (; i < sys.node_count; ++i) {
      if (i == sys.root) continue;
      if (vals[i] < limit) { ++vals[i]; break; }
      vals[i] = -limit;
    }
    if (i == sys.node_count) break;
  }
  return out;
}

}  // namespace

TEST_CASE("two-constraint chain gives maximal valuation") {
  // r=0, a=1, b=2: a - r <= 2, b - a <= -1
  DiffSystem sys{3, 0, {{1, 0, 2}, {2, 1, -1}}};
  validate(sys);
  auto res = solve_max(sys);
  REQUIRE(std::holds_alternative<Valuation>(res));
  auto& val = std::get<Valuation>(res);
  CHECK(val.values == std::vector<long long>{0, 2, 1});
  CHECK(check_valuation(sys, val).empty());
}

TEST_CASE("negative cycle is reported with its weight") {
  // a=0 (root), b=1: a - b <= -1, b - a <= 0
  DiffSystem sys{2, 0, {{0, 1, -1}, {1, 0, 0}}};
  auto res = solve_max(sys);
  REQUIRE(std::holds_alternative<NegativeCycle>(res));
  auto& cyc = std::get<NegativeCycle>(res);
  CHECK(cyc.weight == -1);
  CHECK(cycle_weight(sys, cyc.nodes) == cyc.weight);
  CHECK(cyc.nodes.size() == 2);
}

TEST_CASE("single bound pins the non-root node") {
  DiffSystem sys{2, 0, {{1, 0, 0}}};
  auto res = solve_max(sys);
  REQUIRE(std::holds_alternative<Valuation>(res));
  CHECK(std::get<Valuation>(res).values == std::vector<long long>{0, 0});
}

TEST_CASE("validate rejects bad ids and self-loops") {
  CHECK_THROWS_AS(validate(DiffSystem{2, 0, {{2, 0, 1}}}), std::invalid_argument);
  CHECK_THROWS_AS(validate(DiffSystem{2, 0, {{1, -1, 1}}}), std::invalid_argument);
  CHECK_THROWS_AS(validate(DiffSystem{2, 0, {{1, 1, 1}}}), std::invalid_argument);
  CHECK_THROWS_AS(validate(DiffSystem{2, 2, {}}), std::invalid_argument);
}

TEST_CASE("check_valuation flags violated constraints and root pin") {
  DiffSystem sys{2, 0, {{1, 0, 2}}};
  auto bad = check_valuation(sys, Valuation{{0, 3}});
  REQUIRE(bad.size() == 1);
  CHECK(bad[0].u == 1);
  CHECK(bad[0].actual == 3);
  auto pin = check_valuation(sys, Valuation{{1, 2}});
  REQUIRE(pin.size() == 1);
  CHECK(pin[0].u == 0);
  CHECK(pin[0].v == 0);
}

TEST_CASE("unreachable node is a usage error") {
  DiffSystem sys{2, 0, {{0, 1, 3}}};  // arc 1 -> 0 only
  CHECK_THROWS_AS(solve_max(sys), std::logic_error);
}

TEST_CASE("dump is stable and line oriented") {
  DiffSystem sys{2, 0, {{1, 0, -3}}};
  CHECK(dump(sys) == "nodes 2 root 0\nle 1 0 -3\n");
}

TEST_CASE("solve_max is componentwise maximal on random reachable systems") {
  std::mt19937_64 rng(20260823);
  for (int iter = 0; iter < 120; ++iter) {
    int n = 2 + static_cast<int>(rng() % 3);  // 2..4 nodes
    DiffSystem sys{n, 0, {}};
    for (NodeId i = 1; i < n; ++i)
      sys.constraints.push_back({i, 0, static_cast<long long>(rng() % 5)});
    int extra = static_cast<int>(rng() % (2 * n));
    for (int e = 0; e < extra; ++e) {
      NodeId u = static_cast<NodeId>(rng() % n);
      NodeId v = static_cast<NodeId>(rng() % n);
      if (u == v) continue;
      sys.constraints.push_back({u, v, static_cast<long long>(rng() % 7) - 3});
    }
    auto feas = enumerate_box(sys, 14);
    auto res = solve_max(sys);
    if (std::holds_alternative<NegativeCycle>(res)) {
      CHECK(feas.empty());
      CHECK(cycle_weight(sys, std::get<NegativeCycle>(res).nodes) < 0);
      continue;
    }
    auto& val = std::get<Valuation>(res);
    CHECK(check_valuation(sys, val).empty());
    REQUIRE(!feas.empty());
    std::vector<long long> best(n, -100);
    for (const auto& w : feas)
      for (int i = 0; i < n; ++i) best[i] = std::max(best[i], w[i]);
    CHECK(val.values == best);
  }
}
