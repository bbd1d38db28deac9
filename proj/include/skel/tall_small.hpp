#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "skel/diff_system.hpp"

namespace skel {

struct UnitJob {
  long long release = 0;
  long long deadline = 0;  // window [r, D] admits slots t with r <= t <= D-1
};

// Unit jobs on m machines; tall jobs occupy all machines at once.
struct TallSmallInstance {
  int machines = 1;
  std::vector<UnitJob> small;
  std::vector<UnitJob> tall;
};

void validate(const TallSmallInstance& inst);

// Connected piece of an instance after splitting at dead slots, shifted so
// its earliest release is 1.  Original time = shifted time + shift.
struct NormalizedPart {
  TallSmallInstance inst;
  long long shift = 0;
  std::vector<int> small_ids;
  std::vector<int> tall_ids;
};

std::vector<NormalizedPart> normalize(const TallSmallInstance& inst);

// Largest deadline of a normalized part; the profile runs over x_0..x_H.
long long horizon(const TallSmallInstance& inst);

// small_in[s][t] / tall_in[s][t] = jobs whose window fits inside [s,t],
// 1 <= s <= t <= H.
struct DemandCounts {
  std::vector<std::vector<int>> small_in;
  std::vector<std::vector<int>> tall_in;
};

DemandCounts demand_counts(const TallSmallInstance& inst);

// Nodes x_0..x_H (node ids 0..H, root 0).
DiffSystem build_system(const TallSmallInstance& inst);

// x[t] = number of tall slots in [1, t]; steps are 0 or 1.
struct TallProfile {
  std::vector<long long> x;
};

std::variant<TallProfile, NegativeCycle> solve_skeleton(const TallSmallInstance& inst);

struct TallSmallSchedule {
  std::vector<long long> tall_slot;                   // per tall job
  std::vector<std::pair<int, long long>> small_slot;  // (machine, slot) per small job
  std::vector<long long> idle_tall_slots;             // tall slots left without a job
};

// EDD over the tall slots first, then the small jobs; idle tall slots keep
// blocking all machines.  Throws AssignmentFailure on non-solver profiles.
TallSmallSchedule assign_jobs(const TallSmallInstance& inst, const TallProfile& profile);

VerifyReport verify_tallsmall(const TallSmallInstance& inst, const TallSmallSchedule& sched);

struct TallSmallResult {
  bool feasible = false;
  TallSmallSchedule schedule;     // valid iff feasible
  long long tall_completion = 0;  // sum over tall jobs of slot + 1
  NegativeCycle cycle;            // valid iff infeasible, nodes of the failing part
  long long cycle_shift = 0;      // node id + shift - 1 = original slot of that x node
};

// Full pipeline on an arbitrary instance: normalize, solve each part,
// merge back into original time.
TallSmallResult solve_tallsmall(const TallSmallInstance& inst);

}  // namespace skel
