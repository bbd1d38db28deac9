#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skel/min_cost_flow.hpp"

namespace skel {

struct PrefetchInstance {
  int cache_size = 1;
  long long fetch_duration = 1;
  std::vector<std::string> requests;
  std::optional<std::vector<std::string>> initial_cache;
};

// Instance with pages interned to dense ids; initial cache defaulted to the
// first k distinct requests when absent.
struct PreparedTrace {
  int cache_size = 1;
  long long fetch_duration = 1;
  std::vector<int> requests;       // page ids 0..page_count-1
  std::vector<int> initial_cache;  // exactly cache_size pages
  std::vector<std::string> page_names;
};

// Throws std::invalid_argument on fewer than k distinct requests, a
// wrong-sized explicit cache, or x_1 missing from it.
PreparedTrace prepare(const PrefetchInstance& inst);

// d[s][t] = distinct pages among requests s..t (0-based, s <= t).
std::vector<std::vector<int>> distinct_counts(const std::vector<int>& requests);

// Nodes: root 0 (I_1 and O_1 merged), I_t -> t-1 and O_t -> n+t-2 for
// t in [2,n].  Objective: (F-1) on O_n, -1 on inner O_t, +1 on I_t and I_n.
struct PrefetchLp {
  DiffSystem system;
  LinearObjective objective;
};

PrefetchLp build_lp(const PreparedTrace& trace);

// Cumulative entered/left counts; index t-1 holds time t, both 0 at time 1.
struct CacheProfile {
  std::vector<long long> entered;  // I_t
  std::vector<long long> left;     // O_t
};

struct ProfileResult {
  CacheProfile profile;
  long long stall = 0;  // LP objective = minimal total stall
};

ProfileResult solve_profile(const PreparedTrace& trace);

using FetchInterval = std::pair<long long, long long>;  // (s, e), s <= e <= s+F

// Interval j: s_j = first time with O_t >= j, e_j = first time with
// I_t >= j.  Throws MalformedProfile when the extracted pairs violate
// ordering or length.
std::vector<FetchInterval> extract_intervals(const PreparedTrace& trace,
                                             const CacheProfile& profile);

struct Fetch {
  long long start = 0;
  int evicted = 0;
  long long end = 0;
  int fetched = 0;
};

struct FetchSchedule {
  std::vector<Fetch> fetches;
};

// Furthest-in-future eviction at each interval start, nearest-in-future
// fetch at each end; ties towards the smaller page id.  An interval with no
// page left to fetch (every page already cached) is dropped; that only
// happens to zero-stall intervals.
FetchSchedule greedy_pages(const PreparedTrace& trace,
                           const std::vector<FetchInterval>& intervals);

struct SimulationReport {
  long long stall = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

// Replays the timeline: at each time, fetch completions and evictions are
// applied before the request is checked against the cache.
SimulationReport simulate(const PreparedTrace& trace, const FetchSchedule& sched);

// Checks I_t - I_s >= |{x_s..x_t} \ C_s| for all s <= t, with C_s taken
// from replaying the schedule.  Report-only test oracle.
std::vector<std::pair<long long, long long>> invariant_check(const PreparedTrace& trace,
                                                             const CacheProfile& profile,
                                                             const FetchSchedule& sched);

}  // namespace skel
