#include "skel/equal_length.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace skel {

void validate(const EqualInstance& inst) {
  if (inst.machines < 1) throw std::invalid_argument("machines must be positive");
  if (inst.length < 1) throw std::invalid_argument("job length must be positive");
  if (inst.jobs.empty()) throw std::invalid_argument("instance has no jobs");
  for (const auto& j : inst.jobs)
    if (j.deadline < j.release + inst.length)
      throw std::invalid_argument("job window shorter than the job length");
}

TimePoints time_points(const EqualInstance& inst) {
  validate(inst);
  const long long n = static_cast<long long>(inst.jobs.size());
  std::set<long long> pts;
  for (const auto& j : inst.jobs)
    for (long long a = 0; a < n; ++a) pts.insert(j.release + a * inst.length);
  TimePoints tp;
  tp.points.assign(pts.begin(), pts.end());
  tp.sentinel = tp.points.front() - 1;
  return tp;
}

InclusionCounts inclusion_counts(const EqualInstance& inst) {
  validate(inst);
  const int n = static_cast<int>(inst.jobs.size());
  InclusionCounts ic;
  ic.order.resize(n);
  for (int i = 0; i < n; ++i) ic.order[i] = i;
  std::sort(ic.order.begin(), ic.order.end(), [&](int a, int b) {
    const auto &ja = inst.jobs[a], &jb = inst.jobs[b];
    if (ja.release != jb.release) return ja.release < jb.release;
    if (ja.deadline != jb.deadline) return ja.deadline < jb.deadline;
    return a < b;
  });
  ic.c.assign(n, std::vector<int>(n, 0));
  for (int j = 0; j < n; ++j) {
    long long dj = inst.jobs[ic.order[j]].deadline;
    for (int i = n - 1; i >= 0; --i) {
      ic.c[i][j] = (i + 1 < n ? ic.c[i + 1][j] : 0) +
                   (inst.jobs[ic.order[i]].deadline <= dj ? 1 : 0);
    }
  }
  return ic;
}

namespace {

// index into T' (0 = sentinel) of the largest element <= t
int round_down(const TimePoints& tp, long long t) {
  auto it = std::upper_bound(tp.points.begin(), tp.points.end(), t);
  return static_cast<int>(it - tp.points.begin());  // 0 means sentinel
}

// index into T' of the largest element < t
int prec_of(const TimePoints& tp, long long t) {
  auto it = std::lower_bound(tp.points.begin(), tp.points.end(), t);
  return static_cast<int>(it - tp.points.begin());
}

}  // namespace

DiffSystem build_system(const EqualInstance& inst) {
  const TimePoints tp = time_points(inst);
  const InclusionCounts ic = inclusion_counts(inst);
  const int n = static_cast<int>(inst.jobs.size());
  const int P = static_cast<int>(tp.points.size());

  std::map<std::pair<NodeId, NodeId>, long long> tight;
  auto add = [&](NodeId u, NodeId v, long long b) {
    if (u == v) return;
    auto key = std::make_pair(u, v);
    auto it = tight.find(key);
    if (it == tight.end() || b < it->second) tight[key] = b;
  };

  add(P, 0, n);  // y_maxT - y_t0 <= n
  for (int i = 1; i <= P; ++i) add(i - 1, i, 0);  // order
  for (int i = 1; i <= P; ++i) {                  // load: <= m slots in (t-p, t]
    int j = round_down(tp, tp.points[i - 1] - inst.length);
    add(i, j, inst.machines);
  }
  for (int i = 0; i < n; ++i) {                   // inclusion
    int s = prec_of(tp, inst.jobs[ic.order[i]].release);
    for (int j = 0; j < n; ++j) {
      if (ic.c[i][j] == 0) continue;
      int t = round_down(tp, inst.jobs[ic.order[j]].deadline - inst.length);
      if (s > t) continue;
      add(s, t, -static_cast<long long>(ic.c[i][j]));
    }
  }

  DiffSystem sys;
  sys.node_count = P + 1;
  sys.root = 0;
  for (const auto& [key, b] : tight) sys.constraints.push_back({key.first, key.second, b});
  return sys;
}

std::variant<SlotProfile, NegativeCycle> solve_skeleton(const EqualInstance& inst) {
  DiffSystem sys = build_system(inst);
  auto res = solve_max(sys);
  if (std::holds_alternative<NegativeCycle>(res))
    return std::get<NegativeCycle>(res);
  SlotProfile profile;
  profile.tp = time_points(inst);
  profile.y = std::get<Valuation>(res).values;
  return profile;
}

EqualSchedule edd_assign(const EqualInstance& inst, const SlotProfile& profile) {
  validate(inst);
  const int n = static_cast<int>(inst.jobs.size());
  const int P = static_cast<int>(profile.tp.points.size());
  if (static_cast<int>(profile.y.size()) != P + 1)
    throw AssignmentFailure("profile size mismatch");

  std::vector<long long> slots;
  for (int i = 1; i <= P; ++i) {
    long long delta = profile.y[i] - profile.y[i - 1];
    if (delta < 0) throw AssignmentFailure("profile is not nondecreasing");
    for (long long d = 0; d < delta; ++d) slots.push_back(profile.tp.points[i - 1]);
  }
  if (static_cast<int>(slots.size()) != n)
    throw AssignmentFailure("slot count differs from job count");

  std::vector<int> by_release(n);
  for (int i = 0; i < n; ++i) by_release[i] = i;
  std::sort(by_release.begin(), by_release.end(), [&](int a, int b) {
    if (inst.jobs[a].release != inst.jobs[b].release)
      return inst.jobs[a].release < inst.jobs[b].release;
    return a < b;
  });

  using Entry = std::pair<long long, int>;  // (deadline, job)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
  EqualSchedule sched;
  sched.jobs.resize(n);
  size_t next = 0;
  for (size_t si = 0; si < slots.size(); ++si) {
    long long t = slots[si];
    while (next < by_release.size() && inst.jobs[by_release[next]].release <= t)
      ready.push({inst.jobs[by_release[next]].deadline, by_release[next]}), ++next;
    if (ready.empty()) throw AssignmentFailure("no released job for slot");
    auto [deadline, job] = ready.top();
    ready.pop();
    if (t + inst.length > deadline)
      throw AssignmentFailure("EDD job misses its deadline");
    sched.jobs[job] = {static_cast<int>(si % inst.machines) + 1, t};
  }
  return sched;
}

VerifyReport verify_equal(const EqualInstance& inst, const EqualSchedule& sched) {
  VerifyReport rep;
  const int n = static_cast<int>(inst.jobs.size());
  if (static_cast<int>(sched.jobs.size()) != n) {
    rep.violations.push_back("assignment count differs from job count");
    return rep;
  }
  std::map<int, std::vector<long long>> per_machine;
  for (int j = 0; j < n; ++j) {
    const auto& a = sched.jobs[j];
    if (a.machine < 1 || a.machine > inst.machines)
      rep.violations.push_back("job " + std::to_string(j) + ": machine out of range");
    if (a.start < inst.jobs[j].release)
      rep.violations.push_back("job " + std::to_string(j) + ": starts before release");
    if (a.start + inst.length > inst.jobs[j].deadline)
      rep.violations.push_back("job " + std::to_string(j) + ": misses deadline");
    per_machine[a.machine].push_back(a.start);
    rep.objective += a.start + inst.length;
  }
  for (auto& [machine, starts] : per_machine) {
    std::sort(starts.begin(), starts.end());
    for (size_t i = 1; i < starts.size(); ++i)
      if (starts[i] - starts[i - 1] < inst.length)
        rep.violations.push_back("overlap on machine " + std::to_string(machine));
  }
  return rep;
}

}  // namespace skel
