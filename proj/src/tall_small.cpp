#include "skel/tall_small.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace skel {

void validate(const TallSmallInstance& inst) {
  if (inst.machines < 1) throw std::invalid_argument("machines must be positive");
  for (const auto& j : inst.small)
    if (j.deadline < j.release + 1) throw std::invalid_argument("small job window empty");
  for (const auto& j : inst.tall)
    if (j.deadline < j.release + 1) throw std::invalid_argument("tall job window empty");
}

std::vector<NormalizedPart> normalize(const TallSmallInstance& inst) {
  validate(inst);
  // live slot ranges [r, D-1]; components split at dead slots
  struct Range { long long lo, hi; bool small; int id; };
  std::vector<Range> ranges;
  for (size_t i = 0; i < inst.small.size(); ++i)
    ranges.push_back({inst.small[i].release, inst.small[i].deadline - 1, true, (int)i});
  for (size_t i = 0; i < inst.tall.size(); ++i)
    ranges.push_back({inst.tall[i].release, inst.tall[i].deadline - 1, false, (int)i});
  if (ranges.empty()) return {};
  std::sort(ranges.begin(), ranges.end(),
            [](const Range& a, const Range& b) { return a.lo < b.lo; });

  std::vector<NormalizedPart> parts;
  size_t i = 0;
  while (i < ranges.size()) {
    long long lo = ranges[i].lo, hi = ranges[i].hi;
    size_t j = i + 1;
    while (j < ranges.size() && ranges[j].lo <= hi + 1) {
      hi = std::max(hi, ranges[j].hi);
      ++j;
    }
    NormalizedPart part;
    part.shift = lo - 1;
    part.inst.machines = inst.machines;
    for (size_t k = i; k < j; ++k) {
      const auto& src = ranges[k].small ? inst.small[ranges[k].id] : inst.tall[ranges[k].id];
      UnitJob shifted{src.release - part.shift, src.deadline - part.shift};
      if (ranges[k].small) {
        part.small_ids.push_back(ranges[k].id);
        part.inst.small.push_back(shifted);
      } else {
        part.tall_ids.push_back(ranges[k].id);
        part.inst.tall.push_back(shifted);
      }
    }
    parts.push_back(std::move(part));
    i = j;
  }
  return parts;
}

long long horizon(const TallSmallInstance& inst) {
  long long h = 0;
  for (const auto& j : inst.small) h = std::max(h, j.deadline);
  for (const auto& j : inst.tall) h = std::max(h, j.deadline);
  return h;
}

namespace {

void require_normalized(const TallSmallInstance& inst) {
  validate(inst);
  for (const auto& j : inst.small)
    if (j.release < 1) throw std::invalid_argument("instance not normalized");
  for (const auto& j : inst.tall)
    if (j.release < 1) throw std::invalid_argument("instance not normalized");
}

}  // namespace

DemandCounts demand_counts(const TallSmallInstance& inst) {
  require_normalized(inst);
  const long long H = horizon(inst);
  DemandCounts dc;
  dc.small_in.assign(H + 1, std::vector<int>(H + 1, 0));
  dc.tall_in.assign(H + 1, std::vector<int>(H + 1, 0));
  for (long long s = 1; s <= H; ++s)
    for (long long t = s; t <= H; ++t) {
      for (const auto& j : inst.small)
        if (s <= j.release && j.deadline <= t) ++dc.small_in[s][t];
      for (const auto& j : inst.tall)
        if (s <= j.release && j.deadline <= t) ++dc.tall_in[s][t];
    }
  return dc;
}

DiffSystem build_system(const TallSmallInstance& inst) {
  require_normalized(inst);
  const long long H = horizon(inst);
  const DemandCounts dc = demand_counts(inst);
  const long long m = inst.machines;

  std::map<std::pair<NodeId, NodeId>, long long> tight;
  auto add = [&](NodeId u, NodeId v, long long b) {
    if (u == v) return;
    auto key = std::make_pair(u, v);
    auto it = tight.find(key);
    if (it == tight.end() || b < it->second) tight[key] = b;
  };

  for (long long t = 1; t <= H; ++t) {
    add(t - 1, t, 0);  // nondecreasing
    add(t, t - 1, 1);  // at most one tall slot per unit interval
  }
  for (long long s = 1; s <= H; ++s)
    for (long long t = s; t <= H; ++t) {
      long long tall = dc.tall_in[s][t];
      long long small = dc.small_in[s][t];
      if (tall > 0) add(s - 1, t - 1, -tall);
      if (small > 0) add(t - 1, s - 1, (t - s) - (small + m - 1) / m);
    }

  DiffSystem sys;
  sys.node_count = static_cast<int>(H + 1);
  sys.root = 0;
  for (const auto& [key, b] : tight) sys.constraints.push_back({key.first, key.second, b});
  return sys;
}

std::variant<TallProfile, NegativeCycle> solve_skeleton(const TallSmallInstance& inst) {
  DiffSystem sys = build_system(inst);
  auto res = solve_max(sys);
  if (std::holds_alternative<NegativeCycle>(res))
    return std::get<NegativeCycle>(res);
  return TallProfile{std::get<Valuation>(res).values};
}

TallSmallSchedule assign_jobs(const TallSmallInstance& inst, const TallProfile& profile) {
  require_normalized(inst);
  const long long H = horizon(inst);
  if (static_cast<long long>(profile.x.size()) != H + 1)
    throw AssignmentFailure("profile size mismatch");

  std::set<long long> tall_slots;
  for (long long t = 1; t <= H; ++t) {
    long long step = profile.x[t] - profile.x[t - 1];
    if (step != 0 && step != 1) throw AssignmentFailure("profile step outside {0,1}");
    if (step == 1) tall_slots.insert(t);
  }

  TallSmallSchedule sched;
  sched.tall_slot.assign(inst.tall.size(), 0);
  sched.small_slot.assign(inst.small.size(), {0, 0});

  using Entry = std::pair<long long, int>;  // (deadline, job)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;

  std::vector<int> tall_by_release(inst.tall.size());
  for (size_t i = 0; i < inst.tall.size(); ++i) tall_by_release[i] = (int)i;
  std::sort(tall_by_release.begin(), tall_by_release.end(), [&](int a, int b) {
    if (inst.tall[a].release != inst.tall[b].release)
      return inst.tall[a].release < inst.tall[b].release;
    return a < b;
  });
  size_t next = 0;
  size_t assigned = 0;
  for (long long t : tall_slots) {
    while (next < tall_by_release.size() && inst.tall[tall_by_release[next]].release <= t)
      ready.push({inst.tall[tall_by_release[next]].deadline, tall_by_release[next]}), ++next;
    if (ready.empty()) {
      sched.idle_tall_slots.push_back(t);
      continue;
    }
    auto [deadline, job] = ready.top();
    if (t + 1 > deadline) throw AssignmentFailure("tall job misses its deadline");
    ready.pop();
    sched.tall_slot[job] = t;
    ++assigned;
  }
  if (assigned != inst.tall.size())
    throw AssignmentFailure("tall jobs left unscheduled");

  std::vector<int> small_by_release(inst.small.size());
  for (size_t i = 0; i < inst.small.size(); ++i) small_by_release[i] = (int)i;
  std::sort(small_by_release.begin(), small_by_release.end(), [&](int a, int b) {
    if (inst.small[a].release != inst.small[b].release)
      return inst.small[a].release < inst.small[b].release;
    return a < b;
  });
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> small_ready;
  next = 0;
  assigned = 0;
  for (long long t = 1; t <= H; ++t) {
    while (next < small_by_release.size() &&
           inst.small[small_by_release[next]].release <= t)
      small_ready.push({inst.small[small_by_release[next]].deadline, small_by_release[next]}),
          ++next;
    if (tall_slots.count(t)) continue;  // a tall slot blocks all machines
    for (int machine = 1; machine <= inst.machines && !small_ready.empty(); ++machine) {
      auto [deadline, job] = small_ready.top();
      if (t + 1 > deadline) throw AssignmentFailure("small job misses its deadline");
      small_ready.pop();
      sched.small_slot[job] = {machine, t};
      ++assigned;
    }
  }
  if (assigned != inst.small.size())
    throw AssignmentFailure("small jobs left unscheduled");
  return sched;
}

VerifyReport verify_tallsmall(const TallSmallInstance& inst, const TallSmallSchedule& sched) {
  VerifyReport rep;
  if (sched.tall_slot.size() != inst.tall.size() ||
      sched.small_slot.size() != inst.small.size()) {
    rep.violations.push_back("assignment count mismatch");
    return rep;
  }
  std::set<long long> tall_used(sched.idle_tall_slots.begin(), sched.idle_tall_slots.end());
  if (tall_used.size() != sched.idle_tall_slots.size())
    rep.violations.push_back("duplicate idle tall slot");
  for (size_t j = 0; j < inst.tall.size(); ++j) {
    long long t = sched.tall_slot[j];
    if (t < inst.tall[j].release || t + 1 > inst.tall[j].deadline)
      rep.violations.push_back("tall job " + std::to_string(j) + " outside its window");
    if (!tall_used.insert(t).second)
      rep.violations.push_back("tall slot " + std::to_string(t) + " used twice");
    rep.objective += t + 1;
  }
  std::set<std::pair<int, long long>> pairs;
  for (size_t j = 0; j < inst.small.size(); ++j) {
    auto [machine, t] = sched.small_slot[j];
    if (machine < 1 || machine > inst.machines)
      rep.violations.push_back("small job " + std::to_string(j) + ": machine out of range");
    if (t < inst.small[j].release || t + 1 > inst.small[j].deadline)
      rep.violations.push_back("small job " + std::to_string(j) + " outside its window");
    if (tall_used.count(t))
      rep.violations.push_back("small job " + std::to_string(j) + " shares a tall slot");
    if (!pairs.insert({machine, t}).second)
      rep.violations.push_back("duplicate (machine, slot) pair");
  }
  return rep;
}

TallSmallResult solve_tallsmall(const TallSmallInstance& inst) {
  validate(inst);
  TallSmallResult out;
  out.schedule.tall_slot.assign(inst.tall.size(), 0);
  out.schedule.small_slot.assign(inst.small.size(), {0, 0});
  for (const auto& part : normalize(inst)) {
    // Cap the profile at the tall-job count: without it, maximality spends
    // early slots on idle tall slots and release-constrained tall jobs end
    // up later than necessary.  With the cap, the maximal profile maximizes
    // every prefix sum among n2-slot profiles, which minimizes the total
    // tall completion time realized by the EDD pass below.
    DiffSystem sys = build_system(part.inst);
    const NodeId top = sys.node_count - 1;
    sys.constraints.push_back({top, 0, static_cast<long long>(part.inst.tall.size())});
    auto res = solve_max(sys);
    if (std::holds_alternative<NegativeCycle>(res)) {
      // certificate over the plain system, whose arcs callers can inspect
      auto base = solve_max(build_system(part.inst));
      if (!std::holds_alternative<NegativeCycle>(base))
        throw std::logic_error("tall-slot cap cut off a feasible instance");
      out.feasible = false;
      out.cycle = std::get<NegativeCycle>(base);
      out.cycle_shift = part.shift;
      return out;
    }
    TallSmallSchedule local =
        assign_jobs(part.inst, TallProfile{std::get<Valuation>(res).values});
    for (size_t j = 0; j < part.tall_ids.size(); ++j)
      out.schedule.tall_slot[part.tall_ids[j]] = local.tall_slot[j] + part.shift;
    for (size_t j = 0; j < part.small_ids.size(); ++j)
      out.schedule.small_slot[part.small_ids[j]] = {local.small_slot[j].first,
                                                    local.small_slot[j].second + part.shift};
    for (long long t : local.idle_tall_slots)
      out.schedule.idle_tall_slots.push_back(t + part.shift);
  }
  out.feasible = true;
  for (long long t : out.schedule.tall_slot) out.tall_completion += t + 1;
  return out;
}

}  // namespace skel
