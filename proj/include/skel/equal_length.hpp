#pragma once

#include <variant>
#include <vector>

#include "skel/diff_system.hpp"

namespace skel {

struct EqualJob {
  long long release = 0;
  long long deadline = 0;  // strict: start + p <= deadline
};

// P | r_j ; p_j = p ; D_j | sum C_j
struct EqualInstance {
  int machines = 1;
  long long length = 1;
  std::vector<EqualJob> jobs;
};

// Throws std::invalid_argument when a window is too short (D < r + p) or
// the machine count / length / job list is degenerate.
void validate(const EqualInstance& inst);

// Candidate slot start times {r_i + (a-1)p}, deduplicated and sorted, plus
// a sentinel strictly before all of them.
struct TimePoints {
  long long sentinel = 0;
  std::vector<long long> points;
};

TimePoints time_points(const EqualInstance& inst);

// Jobs sorted by (release, deadline); c[i][j] = |{k >= i : D_k <= D_j}|
// over sorted positions.  For the first index of each release-tie group
// this counts exactly the windows contained in [r_i, D_j].
struct InclusionCounts {
  std::vector<int> order;              // sorted position -> original job index
  std::vector<std::vector<int>> c;
};

InclusionCounts inclusion_counts(const EqualInstance& inst);

// Difference system over T' = {sentinel} + points; node i >= 1 is
// points[i-1], node 0 the sentinel (root).  Duplicate (u,v) pairs keep the
// tightest bound.
DiffSystem build_system(const EqualInstance& inst);

// Cumulative slot counts: y[0] = 0 at the sentinel, y[i] at points[i-1].
struct SlotProfile {
  TimePoints tp;
  std::vector<long long> y;
};

std::variant<SlotProfile, NegativeCycle> solve_skeleton(const EqualInstance& inst);

struct EqualAssignment {
  int machine = 0;
  long long start = 0;
};

struct EqualSchedule {
  std::vector<EqualAssignment> jobs;  // indexed like the instance
};

// Expands the profile into a start-sorted slot list and fills it with an
// earliest-due-date scan; machine of the i-th slot is (i mod m) + 1.
// Throws AssignmentFailure on a profile the solver did not produce.
EqualSchedule edd_assign(const EqualInstance& inst, const SlotProfile& profile);

// Independent check of window containment, per-machine non-overlap and
// machine range; objective = sum of completion times.
VerifyReport verify_equal(const EqualInstance& inst, const EqualSchedule& sched);

}  // namespace skel
