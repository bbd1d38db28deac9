#include "skel/oracle.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace skel {

namespace {
constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
}

EqualOracleResult brute_equal(const EqualInstance& inst) {
  validate(inst);
  const int n = static_cast<int>(inst.jobs.size());
  if (n > 6) throw SizeGuardError("brute_equal: more than 6 jobs");
  const long long p = inst.length;
  const TimePoints tp = time_points(inst);

  std::vector<std::vector<long long>> candidates(n);
  for (int j = 0; j < n; ++j)
    for (long long t : tp.points)
      if (t >= inst.jobs[j].release && t + p <= inst.jobs[j].deadline)
        candidates[j].push_back(t);

  EqualOracleResult best;
  long long best_cost = kInf;
  std::vector<long long> starts(n);
  std::vector<long long> suffix_min(n + 1, 0);  // lower bound on remaining cost
  for (int j = n - 1; j >= 0; --j)
    suffix_min[j] = suffix_min[j + 1] + inst.jobs[j].release + p;

  auto load_ok = [&](int placed) {
    std::vector<long long> sorted(starts.begin(), starts.begin() + placed);
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i + inst.machines < placed; ++i)
      if (sorted[i + inst.machines] - sorted[i] < p) return false;
    return true;
  };

  auto rec = [&](auto&& self, int j, long long cost) -> void {
    if (cost + suffix_min[j] >= best_cost) return;
    if (j == n) {
      best_cost = cost;
      best.feasible = true;
      // round-robin machines over start order
      std::vector<int> idx(n);
      for (int i = 0; i < n; ++i) idx[i] = i;
      std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (starts[a] != starts[b]) return starts[a] < starts[b];
        return a < b;
      });
      best.witness.jobs.assign(n, {});
      for (int i = 0; i < n; ++i)
        best.witness.jobs[idx[i]] = {i % inst.machines + 1, starts[idx[i]]};
      return;
    }
    for (long long t : candidates[j]) {
      starts[j] = t;
      if (!load_ok(j + 1)) continue;
      self(self, j + 1, cost + t + p);
    }
  };
  rec(rec, 0, 0);
  best.total_completion = best.feasible ? best_cost : 0;
  return best;
}

TallSmallOracleResult brute_tallsmall(const TallSmallInstance& inst) {
  validate(inst);
  const int n1 = static_cast<int>(inst.small.size());
  const int n2 = static_cast<int>(inst.tall.size());
  if (n1 + n2 > 6) throw SizeGuardError("brute_tallsmall: more than 6 jobs");

  std::set<long long> slot_set;
  for (const auto& j : inst.small)
    for (long long t = j.release; t < j.deadline; ++t) slot_set.insert(t);
  for (const auto& j : inst.tall)
    for (long long t = j.release; t < j.deadline; ++t) slot_set.insert(t);
  if (slot_set.size() > 10) throw SizeGuardError("brute_tallsmall: slot range too large");
  std::vector<long long> slots(slot_set.begin(), slot_set.end());

  auto smalls_fit = [&](const std::set<long long>& tall_used,
                        std::vector<std::pair<int, long long>>& placement) {
    // EDD with per-slot capacity; exact for unit jobs
    std::vector<int> order(n1);
    for (int i = 0; i < n1; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (inst.small[a].release != inst.small[b].release)
        return inst.small[a].release < inst.small[b].release;
      return a < b;
    });
    placement.assign(n1, {0, 0});
    std::set<std::pair<long long, int>> ready;  // (deadline, job)
    size_t next = 0;
    int placed = 0;
    for (long long t : slots) {
      while (next < order.size() && inst.small[order[next]].release <= t)
        ready.insert({inst.small[order[next]].deadline, order[next]}), ++next;
      int cap = tall_used.count(t) ? 0 : inst.machines;
      for (int machine = 1; machine <= cap && !ready.empty(); ++machine) {
        auto [deadline, job] = *ready.begin();
        if (t + 1 > deadline) return false;
        ready.erase(ready.begin());
        placement[job] = {machine, t};
        ++placed;
      }
      if (!ready.empty() && ready.begin()->first <= t + 1) return false;
    }
    return placed == n1 && ready.empty();
  };

  TallSmallOracleResult best;
  long long best_cost = kInf;
  std::vector<long long> tall_at(n2);
  std::set<long long> used;

  auto rec = [&](auto&& self, int j, long long cost) -> void {
    if (cost >= best_cost) return;
    if (j == n2) {
      std::vector<std::pair<int, long long>> placement;
      if (!smalls_fit(used, placement)) return;
      best_cost = cost;
      best.feasible = true;
      best.witness.tall_slot.assign(tall_at.begin(), tall_at.end());
      best.witness.small_slot = placement;
      best.witness.idle_tall_slots.clear();
      return;
    }
    for (long long t = inst.tall[j].release; t < inst.tall[j].deadline; ++t) {
      if (used.count(t)) continue;
      used.insert(t);
      tall_at[j] = t;
      self(self, j + 1, cost + t + 1);
      used.erase(t);
    }
  };
  rec(rec, 0, 0);
  best.tall_completion = best_cost == kInf ? 0 : best_cost;
  if (n1 + n2 == 0) best.feasible = true;
  return best;
}

PrefetchOracleResult brute_prefetch(const PreparedTrace& trace) {
  const long long n = static_cast<long long>(trace.requests.size());
  const long long F = trace.fetch_duration;
  const int pages = static_cast<int>(trace.page_names.size());
  if (n > 8) throw SizeGuardError("brute_prefetch: more than 8 requests");
  if (trace.cache_size > 3) throw SizeGuardError("brute_prefetch: cache larger than 3");

  long long best = kInf;
  FetchSchedule best_witness;
  std::vector<Fetch> current;

  std::set<int> cache(trace.initial_cache.begin(), trace.initial_cache.end());

  // served_until: all requests at times <= served_until hit the cache state
  // they saw; free_from: earliest admissible next fetch start.
  auto rec = [&](auto&& self, long long free_from, long long served_until,
                 long long stall) -> void {
    if (stall >= best) return;
    // option: stop fetching
    bool rest_ok = true;
    for (long long t = served_until + 1; t <= n; ++t)
      if (!cache.count(trace.requests[t - 1])) { rest_ok = false; break; }
    if (rest_ok) {
      best = stall;
      best_witness.fetches = current;
    }
    if (static_cast<long long>(current.size()) >= n) return;

    for (long long s = std::max(free_from, 1LL); s <= n; ++s) {
      // requests strictly before s must hit the current cache
      if (s > served_until + 1 &&
          !cache.count(trace.requests[s - 2]))  // time s-1 unserved
        break;
      for (long long e = std::min(s + F, n); e >= s; --e) {
        long long cost = F - (e - s);
        if (stall + cost >= best) continue;
        for (int y : std::vector<int>(cache.begin(), cache.end())) {
          // an eviction at an already-served time must not take that page
          if (s <= served_until && y == trace.requests[s - 1]) continue;
          // during [s, e-1] the cache lacks y
          bool ok = true;
          for (long long t = std::max(s, served_until + 1); t < e && ok; ++t) {
            int x = trace.requests[t - 1];
            if (x == y || !cache.count(x)) ok = false;
          }
          if (!ok) continue;
          for (int z = 0; z < pages; ++z) {
            if (z == y || cache.count(z)) continue;
            int xe = trace.requests[e - 1];
            if (!((cache.count(xe) && xe != y) || xe == z)) continue;
            cache.erase(y);
            cache.insert(z);
            current.push_back({s, y, e, z});
            self(self, e, e, stall + cost);
            current.pop_back();
            cache.erase(z);
            cache.insert(y);
          }
        }
      }
    }
  };
  rec(rec, 1, 0, 0);
  if (best >= kInf) throw std::logic_error("brute_prefetch: no valid fetch sequence");
  PrefetchOracleResult out;
  out.stall = best;
  out.witness = best_witness;
  return out;
}

}  // namespace skel
