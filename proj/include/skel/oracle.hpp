#pragma once

#include "skel/equal_length.hpp"
#include "skel/prefetch.hpp"
#include "skel/tall_small.hpp"

namespace skel {

// Exhaustive reference solvers for tiny instances.  Hard size guards; the
// witnesses reuse the sibling verifiers but never the solver code paths.

struct EqualOracleResult {
  bool feasible = false;
  long long total_completion = 0;
  EqualSchedule witness;
};

// Exhaustive search over job -> start assignments with starts drawn from
// the candidate time-point set.  Throws SizeGuardError for n > 6.
EqualOracleResult brute_equal(const EqualInstance& inst);

struct TallSmallOracleResult {
  bool feasible = false;
  long long tall_completion = 0;  // minimal among feasible schedules
  TallSmallSchedule witness;
};

// Guards: at most 6 jobs and at most 10 candidate slots.
TallSmallOracleResult brute_tallsmall(const TallSmallInstance& inst);

struct PrefetchOracleResult {
  long long stall = 0;
  FetchSchedule witness;
};

// Enumerates fetch sequences and page choices over the trace alphabet.
// Guards: n <= 8 requests, k <= 3.
PrefetchOracleResult brute_prefetch(const PreparedTrace& trace);

}  // namespace skel
