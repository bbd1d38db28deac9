#include <random>

#include <doctest.h>

#include "skel/generator.hpp"
#include "skel/oracle.hpp"
#include "skel/prefetch.hpp"

using namespace skel;

namespace {

PreparedTrace abac() {
  return prepare(PrefetchInstance{2, 2, {"a", "b", "a", "c"}, std::nullopt});
}

PreparedTrace aabb() {
  return prepare(PrefetchInstance{1, 2, {"a", "a", "b", "b"}, std::nullopt});
}

}  // namespace

TEST_CASE("prepare interns pages and defaults the cache") {
  auto t = abac();
  CHECK(t.requests == std::vector<int>{0, 1, 0, 2});
  CHECK(t.initial_cache == std::vector<int>{0, 1});
  CHECK(t.page_names == std::vector<std::string>{"a", "b", "c"});
  CHECK_THROWS_AS(prepare(PrefetchInstance{3, 1, {"a", "b", "a"}, std::nullopt}),
                  std::invalid_argument);
  CHECK_THROWS_AS(prepare(PrefetchInstance{1, 1, {"a"}, std::vector<std::string>{"b"}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      prepare(PrefetchInstance{2, 1, {"a", "b"}, std::vector<std::string>{"a"}}),
      std::invalid_argument);
}

TEST_CASE("distinct counts per request window") {
  auto d = distinct_counts({0, 1, 0, 2});
  CHECK(d[0][3] == 3);
  CHECK(d[1][2] == 2);
  CHECK(d[2][2] == 1);
  auto c = distinct_counts({0, 0, 0});
  CHECK(c[0][2] == 1);
}

TEST_CASE("LP carries the tight serve constraint") {
  auto lp = build_lp(aabb());
  // O_2 - I_4 <= -1: node 4 is O_2, node 3 is I_4
  bool found = false;
  for (const auto& c : lp.system.constraints)
    if (c.u == 4 && c.v == 3) {
      found = true;
      CHECK(c.bound == -1);
    }
  CHECK(found);
  long long sum = 0;
  for (long long v : lp.objective.coeffs) sum += v;
  CHECK(sum == aabb().fetch_duration);
}

TEST_CASE("profile for the abac trace stalls once") {
  auto t = abac();
  auto pr = solve_profile(t);
  CHECK(pr.stall == 1);
  CHECK(pr.profile.left == std::vector<long long>{0, 0, 1, 1});
  CHECK(pr.profile.entered == std::vector<long long>{0, 0, 0, 1});
  CHECK(extract_intervals(t, pr.profile) ==
        std::vector<FetchInterval>{{3, 4}});
}

TEST_CASE("profile for the aabb trace stalls twice") {
  auto t = aabb();
  auto pr = solve_profile(t);
  CHECK(pr.stall == 2);
  CHECK(pr.profile.left == std::vector<long long>{0, 0, 1, 1});
  CHECK(pr.profile.entered == std::vector<long long>{0, 0, 1, 1});
  CHECK(extract_intervals(t, pr.profile) ==
        std::vector<FetchInterval>{{3, 3}});
}

TEST_CASE("fully cached trace needs no fetches") {
  auto t = prepare(PrefetchInstance{2, 3, {"a", "b", "a", "b"}, std::nullopt});
  auto pr = solve_profile(t);
  CHECK(pr.stall == 0);
  CHECK(extract_intervals(t, pr.profile).empty());
  auto sched = greedy_pages(t, {});
  CHECK(sched.fetches.empty());
  auto rep = simulate(t, sched);
  CHECK(rep.ok());
  CHECK(rep.stall == 0);
}

TEST_CASE("single request is trivial") {
  auto t = prepare(PrefetchInstance{1, 5, {"a"}, std::nullopt});
  auto pr = solve_profile(t);
  CHECK(pr.stall == 0);
  CHECK(extract_intervals(t, pr.profile).empty());
}

TEST_CASE("malformed profiles are rejected") {
  auto t = abac();
  CHECK_THROWS_AS(extract_intervals(t, CacheProfile{{0, 0, 1}, {0, 0, 1, 1}}),
                  MalformedProfile);
  // I_n != O_n
  CHECK_THROWS_AS(extract_intervals(t, CacheProfile{{0, 0, 0, 0}, {0, 0, 1, 1}}),
                  MalformedProfile);
  // interval longer than F: O says start at 1, I says end at 4
  CHECK_THROWS_AS(extract_intervals(t, CacheProfile{{0, 0, 0, 1}, {1, 1, 1, 1}}),
                  MalformedProfile);
}

TEST_CASE("greedy evicts furthest and fetches nearest") {
  auto t = abac();
  auto sched = greedy_pages(t, {{3, 4}});
  REQUIRE(sched.fetches.size() == 1);
  CHECK(sched.fetches[0].start == 3);
  CHECK(sched.fetches[0].evicted == 1);  // b never requested again
  CHECK(sched.fetches[0].end == 4);
  CHECK(sched.fetches[0].fetched == 2);  // c
  auto rep = simulate(t, sched);
  CHECK(rep.ok());
  CHECK(rep.stall == 1);
  CHECK(invariant_check(t, solve_profile(t).profile, sched).empty());
}

TEST_CASE("zero-length fetch stalls for the full duration") {
  auto t = aabb();
  auto sched = greedy_pages(t, {{3, 3}});
  REQUIRE(sched.fetches.size() == 1);
  CHECK(sched.fetches[0].evicted == 0);
  CHECK(sched.fetches[0].fetched == 1);
  auto rep = simulate(t, sched);
  CHECK(rep.ok());
  CHECK(rep.stall == 2);
}

TEST_CASE("simulation flags bad schedules") {
  auto t = abac();
  SUBCASE("evicting the page requested now") {
    FetchSchedule bad{{{2, 1, 4, 2}}};
    // at time 2 request b is evicted before being served
    CHECK(!simulate(t, bad).ok());
  }
  SUBCASE("fetching an already cached page") {
    FetchSchedule bad{{{3, 1, 4, 0}}};
    CHECK(!simulate(t, bad).ok());
  }
  SUBCASE("overlapping fetches") {
    FetchSchedule bad{{{2, 1, 4, 2}, {3, 0, 4, 1}}};
    CHECK(!simulate(t, bad).ok());
  }
  SUBCASE("missing page at the end") {
    FetchSchedule bad{{}};
    CHECK(!simulate(t, bad).ok());
  }
}

TEST_CASE("solver pipeline matches the exhaustive oracle") {
  std::mt19937_64 rng(909090);
  for (int iter = 0; iter < 150; ++iter) {
    auto inst = gen_prefetch(rng(), PrefetchGenParams{6, 3, 3, 4});
    auto trace = prepare(inst);
    auto pr = solve_profile(trace);
    auto oracle = brute_prefetch(trace);
    CHECK(pr.stall == oracle.stall);
    auto intervals = extract_intervals(trace, pr.profile);
    long long interval_stall = 0;
    for (auto [s, e] : intervals) interval_stall += trace.fetch_duration - (e - s);
    CHECK(interval_stall == pr.stall);
    auto sched = greedy_pages(trace, intervals);
    auto rep = simulate(trace, sched);
    CHECK(rep.ok());
    CHECK(rep.stall == pr.stall);
    CHECK(invariant_check(trace, pr.profile, sched).empty());
  }
}
