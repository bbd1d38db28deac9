#include <doctest.h>

#include "skel/oracle.hpp"

using namespace skel;

TEST_CASE("equal-length oracle on the three-job instance") {
  EqualInstance inst{1, 2, {{0, 7}, {0, 4}, {3, 7}}};
  auto res = brute_equal(inst);
  REQUIRE(res.feasible);
  CHECK(res.total_completion == 12);
  auto rep = verify_equal(inst, res.witness);
  CHECK(rep.ok());
  CHECK(rep.objective == 12);
}

TEST_CASE("equal-length oracle detects infeasibility") {
  auto res = brute_equal(EqualInstance{1, 2, {{0, 2}, {0, 2}}});
  CHECK(!res.feasible);
  CHECK(res.total_completion == 0);
}

TEST_CASE("equal-length oracle on a single job") {
  auto res = brute_equal(EqualInstance{1, 3, {{2, 9}}});
  REQUIRE(res.feasible);
  CHECK(res.total_completion == 5);
}

TEST_CASE("equal-length oracle size guard") {
  EqualInstance big{1, 1, {{0, 9}, {0, 9}, {0, 9}, {0, 9}, {0, 9}, {0, 9}, {0, 9}}};
  CHECK_THROWS_AS(brute_equal(big), SizeGuardError);
}

TEST_CASE("tall/small oracle on the two-machine example") {
  TallSmallInstance inst{2, {{1, 3}, {1, 3}}, {{1, 2}}};
  auto res = brute_tallsmall(inst);
  REQUIRE(res.feasible);
  CHECK(res.tall_completion == 2);
  CHECK(verify_tallsmall(inst, res.witness).ok());
}

TEST_CASE("tall/small oracle detects infeasibility") {
  auto res = brute_tallsmall(TallSmallInstance{1, {{1, 2}}, {{1, 2}}});
  CHECK(!res.feasible);
}

TEST_CASE("tall/small oracle on an empty instance") {
  auto res = brute_tallsmall(TallSmallInstance{1, {}, {}});
  CHECK(res.feasible);
  CHECK(res.tall_completion == 0);
}

TEST_CASE("prefetch oracle finds the one-stall plan") {
  auto trace = prepare(PrefetchInstance{2, 2, {"a", "b", "a", "c"}, std::nullopt});
  auto res = brute_prefetch(trace);
  CHECK(res.stall == 1);
  auto rep = simulate(trace, res.witness);
  CHECK(rep.ok());
  CHECK(rep.stall == 1);
}

TEST_CASE("prefetch oracle pays the full fetch on a tight cache") {
  auto trace = prepare(PrefetchInstance{1, 2, {"a", "a", "b", "b"}, std::nullopt});
  auto res = brute_prefetch(trace);
  CHECK(res.stall == 2);
  auto rep = simulate(trace, res.witness);
  CHECK(rep.ok());
  CHECK(rep.stall == 2);
}

TEST_CASE("prefetch oracle keeps a covered trace fetch free") {
  auto trace = prepare(PrefetchInstance{2, 3, {"a", "b", "b", "a"}, std::nullopt});
  auto res = brute_prefetch(trace);
  CHECK(res.stall == 0);
  CHECK(res.witness.fetches.empty());
}

TEST_CASE("prefetch oracle size guard") {
  std::vector<std::string> reqs(9, "a");
  reqs.push_back("b");
  CHECK_THROWS_AS(brute_prefetch(prepare(PrefetchInstance{1, 1, reqs, std::nullopt})),
                  SizeGuardError);
}
