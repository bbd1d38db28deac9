#include "skel/prefetch.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace skel {

namespace {

constexpr long long kNever = std::numeric_limits<long long>::max();

// next request of page at time >= from (1-based), kNever if none
long long next_request(const std::vector<std::vector<long long>>& occurrences, int page,
                       long long from) {
  const auto& occ = occurrences[page];
  auto it = std::lower_bound(occ.begin(), occ.end(), from);
  return it == occ.end() ? kNever : *it;
}

std::vector<std::vector<long long>> occurrence_lists(const PreparedTrace& trace) {
  size_t pages = trace.page_names.size();
  std::vector<std::vector<long long>> occ(pages);
  for (size_t t = 0; t < trace.requests.size(); ++t)
    occ[trace.requests[t]].push_back(static_cast<long long>(t) + 1);
  return occ;
}

}  // namespace

PreparedTrace prepare(const PrefetchInstance& inst) {
  if (inst.cache_size < 1) throw std::invalid_argument("cache size must be positive");
  if (inst.fetch_duration < 1) throw std::invalid_argument("fetch duration must be positive");
  if (inst.requests.empty()) throw std::invalid_argument("empty request sequence");

  PreparedTrace trace;
  trace.cache_size = inst.cache_size;
  trace.fetch_duration = inst.fetch_duration;

  std::map<std::string, int> ids;
  auto intern = [&](const std::string& name) {
    auto it = ids.find(name);
    if (it != ids.end()) return it->second;
    int id = static_cast<int>(trace.page_names.size());
    ids.emplace(name, id);
    trace.page_names.push_back(name);
    return id;
  };
  for (const auto& p : inst.requests) trace.requests.push_back(intern(p));

  std::vector<int> first_distinct;
  std::set<int> seen;
  for (int p : trace.requests)
    if (seen.insert(p).second) first_distinct.push_back(p);
  if (static_cast<int>(first_distinct.size()) < inst.cache_size)
    throw std::invalid_argument("requests contain fewer than k distinct pages");

  if (inst.initial_cache) {
    if (static_cast<int>(inst.initial_cache->size()) != inst.cache_size)
      throw std::invalid_argument("initial cache size differs from k");
    std::set<int> cache;
    for (const auto& p : *inst.initial_cache)
      if (!cache.insert(intern(p)).second)
        throw std::invalid_argument("duplicate page in initial cache");
    if (!cache.count(trace.requests.front()))
      throw std::invalid_argument("first request not in the initial cache");
    trace.initial_cache.assign(cache.begin(), cache.end());
  } else {
    trace.initial_cache.assign(first_distinct.begin(),
                               first_distinct.begin() + inst.cache_size);
    std::sort(trace.initial_cache.begin(), trace.initial_cache.end());
  }
  return trace;
}

std::vector<std::vector<int>> distinct_counts(const std::vector<int>& requests) {
  const int n = static_cast<int>(requests.size());
  std::vector<std::vector<int>> d(n, std::vector<int>(n, 0));
  for (int s = 0; s < n; ++s) {
    std::set<int> seen;
    for (int t = s; t < n; ++t) {
      seen.insert(requests[t]);
      d[s][t] = static_cast<int>(seen.size());
    }
  }
  return d;
}

PrefetchLp build_lp(const PreparedTrace& trace) {
  const long long n = static_cast<long long>(trace.requests.size());
  const long long F = trace.fetch_duration;
  const long long k = trace.cache_size;
  const auto d = distinct_counts(trace.requests);

  auto i_node = [&](long long t) { return t == 1 ? 0 : static_cast<NodeId>(t - 1); };
  auto o_node = [&](long long t) { return t == 1 ? 0 : static_cast<NodeId>(n + t - 2); };

  std::map<std::pair<NodeId, NodeId>, long long> tight;
  auto add = [&](NodeId u, NodeId v, long long b) {
    if (u == v) return;
    auto key = std::make_pair(u, v);
    auto it = tight.find(key);
    if (it == tight.end() || b < it->second) tight[key] = b;
  };

  for (long long t = 2; t <= n; ++t) {
    add(o_node(t - 1), o_node(t), 0);  // O nondecreasing
    add(i_node(t - 1), i_node(t), 0);  // I nondecreasing
    add(i_node(t), o_node(t), 0);      // cache cannot overflow
    add(o_node(t), i_node(t), 1);      // fetches do not overlap
  }
  for (long long t = 1; t <= n; ++t)   // fetch length at most F
    add(o_node(t), i_node(std::min(t + F, n)), 0);
  for (long long s = 1; s <= n; ++s)   // enough fetches to serve all requests
    for (long long t = s; t <= n; ++t)
      add(o_node(s), i_node(t), k - d[s - 1][t - 1]);

  PrefetchLp lp;
  lp.system.node_count = static_cast<int>(2 * n - 1);
  lp.system.root = 0;
  for (const auto& [key, b] : tight)
    lp.system.constraints.push_back({key.first, key.second, b});

  lp.objective.coeffs.assign(lp.system.node_count, 0);
  if (n > 1) {
    lp.objective.coeffs[o_node(n)] = F - 1;
    lp.objective.coeffs[i_node(n)] = 1;
    for (long long t = 2; t < n; ++t) {
      lp.objective.coeffs[o_node(t)] = -1;
      lp.objective.coeffs[i_node(t)] = 1;
    }
  }
  return lp;
}

ProfileResult solve_profile(const PreparedTrace& trace) {
  const long long n = static_cast<long long>(trace.requests.size());
  PrefetchLp lp = build_lp(trace);
  DiffLpResult res = solve_difference_lp(lp.system, lp.objective);
  if (res.outcome != LpOutcome::optimal)
    throw std::logic_error("prefetch LP unsolvable on a valid instance");

  ProfileResult out;
  out.stall = res.objective;
  out.profile.entered.resize(n);
  out.profile.left.resize(n);
  out.profile.entered[0] = 0;
  out.profile.left[0] = 0;
  for (long long t = 2; t <= n; ++t) {
    out.profile.entered[t - 1] = res.valuation.values[t - 1];
    out.profile.left[t - 1] = res.valuation.values[n + t - 2];
  }
  return out;
}

std::vector<FetchInterval> extract_intervals(const PreparedTrace& trace,
                                             const CacheProfile& profile) {
  const long long n = static_cast<long long>(profile.entered.size());
  const long long F = trace.fetch_duration;
  if (profile.left.size() != profile.entered.size())
    throw MalformedProfile("profile arrays differ in length");
  if (n == 0 || profile.entered[0] != 0 || profile.left[0] != 0)
    throw MalformedProfile("profile must start at zero");
  if (profile.entered[n - 1] != profile.left[n - 1])
    throw MalformedProfile("open fetch at the end of the trace");

  long long count = profile.left[n - 1];
  std::vector<FetchInterval> intervals;
  for (long long j = 1; j <= count; ++j) {
    long long s = 0, e = 0;
    for (long long t = 1; t <= n; ++t)
      if (profile.left[t - 1] >= j) { s = t; break; }
    for (long long t = 1; t <= n; ++t)
      if (profile.entered[t - 1] >= j) { e = t; break; }
    if (s == 0 || e == 0 || s > e || e > s + F)
      throw MalformedProfile("extracted interval violates ordering or length");
    if (!intervals.empty() && intervals.back().second > s)
      throw MalformedProfile("extracted intervals overlap");
    intervals.push_back({s, e});
  }
  return intervals;
}

FetchSchedule greedy_pages(const PreparedTrace& trace,
                           const std::vector<FetchInterval>& intervals) {
  const auto occ = occurrence_lists(trace);
  const int pages = static_cast<int>(trace.page_names.size());
  std::set<int> cache(trace.initial_cache.begin(), trace.initial_cache.end());

  FetchSchedule sched;
  for (const auto& [s, e] : intervals) {
    if (static_cast<int>(cache.size()) >= pages) continue;  // nothing fetchable
    int evict = -1;
    long long evict_next = -1;
    for (int p : cache) {
      long long nx = next_request(occ, p, s);
      if (nx > evict_next) { evict = p; evict_next = nx; }
    }
    int fetch = -1;
    long long fetch_next = kNever;
    for (int p = 0; p < pages; ++p) {
      if (cache.count(p) || p == evict) continue;
      long long nx = next_request(occ, p, e);
      if (nx < fetch_next) { fetch = p; fetch_next = nx; }
    }
    cache.erase(evict);
    cache.insert(fetch);
    sched.fetches.push_back({s, evict, e, fetch});
  }
  return sched;
}

SimulationReport simulate(const PreparedTrace& trace, const FetchSchedule& sched) {
  const long long n = static_cast<long long>(trace.requests.size());
  const long long F = trace.fetch_duration;
  SimulationReport rep;

  for (size_t j = 0; j < sched.fetches.size(); ++j) {
    const auto& f = sched.fetches[j];
    if (f.start < 1 || f.end > n || f.start > f.end || f.end > f.start + F)
      rep.violations.push_back("fetch " + std::to_string(j) + ": bad interval geometry");
    if (j + 1 < sched.fetches.size() && sched.fetches[j + 1].start < f.end)
      rep.violations.push_back("fetches " + std::to_string(j) + "," + std::to_string(j + 1) +
                               " overlap in more than one time point");
    rep.stall += F - (f.end - f.start);
  }
  if (!rep.violations.empty()) return rep;

  // Events in fetch-sequence order: the eviction of fetch j precedes its
  // completion, and a completion at time t precedes the next eviction at t.
  std::set<int> cache(trace.initial_cache.begin(), trace.initial_cache.end());
  size_t next_event = 0;  // 2j = start of fetch j, 2j+1 = its end
  bool pending = false;
  for (long long t = 1; t <= n; ++t) {
    while (next_event < 2 * sched.fetches.size()) {
      const auto& f = sched.fetches[next_event / 2];
      bool is_start = next_event % 2 == 0;
      if ((is_start ? f.start : f.end) != t) break;
      if (is_start) {
        if (pending)
          rep.violations.push_back("second fetch starts while one is pending at t=" +
                                   std::to_string(t));
        if (!cache.count(f.evicted))
          rep.violations.push_back("evicted page not in cache at t=" + std::to_string(t));
        cache.erase(f.evicted);
        pending = true;
      } else {
        if (cache.count(f.fetched))
          rep.violations.push_back("fetched page already cached at t=" + std::to_string(t));
        cache.insert(f.fetched);
        pending = false;
      }
      ++next_event;
    }
    if (static_cast<int>(cache.size()) > trace.cache_size)
      rep.violations.push_back("cache overflows at t=" + std::to_string(t));
    if (!cache.count(trace.requests[t - 1])) {
      rep.violations.push_back("request at t=" + std::to_string(t) + " not served");
      return rep;
    }
  }
  return rep;
}

std::vector<std::pair<long long, long long>> invariant_check(const PreparedTrace& trace,
                                                             const CacheProfile& profile,
                                                             const FetchSchedule& sched) {
  const long long n = static_cast<long long>(trace.requests.size());
  // C_s after all movements at time s
  std::vector<std::set<int>> cache_at(n + 1);
  std::set<int> cache(trace.initial_cache.begin(), trace.initial_cache.end());
  size_t next_event = 0;
  for (long long t = 1; t <= n; ++t) {
    while (next_event < 2 * sched.fetches.size()) {
      const auto& f = sched.fetches[next_event / 2];
      bool is_start = next_event % 2 == 0;
      if ((is_start ? f.start : f.end) != t) break;
      if (is_start)
        cache.erase(f.evicted);
      else
        cache.insert(f.fetched);
      ++next_event;
    }
    cache_at[t] = cache;
  }

  std::vector<std::pair<long long, long long>> violations;
  for (long long s = 1; s <= n; ++s)
    for (long long t = s; t <= n; ++t) {
      std::set<int> missing;
      for (long long u = s; u <= t; ++u)
        if (!cache_at[s].count(trace.requests[u - 1])) missing.insert(trace.requests[u - 1]);
      if (profile.entered[t - 1] - profile.entered[s - 1] <
          static_cast<long long>(missing.size()))
        violations.push_back({s, t});
    }
  return violations;
}

}  // namespace skel
