#pragma once

#include <cstdint>

#include "skel/equal_length.hpp"
#include "skel/prefetch.hpp"
#include "skel/tall_small.hpp"

namespace skel {

// Seeded random instances, deterministic across platforms (raw mt19937_64
// draws, no distribution objects).  Windows are always individually
// satisfiable; prefetch traces carry at least cache_size distinct pages.

struct EqualGenParams {
  int max_jobs = 5;
  int max_machines = 3;
  int max_length = 3;
  long long max_release = 6;
  long long max_slack = 6;  // deadline = release + length + U[0, max_slack]
};

EqualInstance gen_equal(std::uint64_t seed, const EqualGenParams& params = {});

struct TallSmallGenParams {
  int max_jobs = 6;
  int max_machines = 3;
  long long horizon = 6;  // releases in [1, horizon], deadlines <= horizon + 1
};

TallSmallInstance gen_tallsmall(std::uint64_t seed, const TallSmallGenParams& params = {});

struct PrefetchGenParams {
  int max_requests = 6;
  int max_cache = 3;
  int max_fetch = 4;
  int max_alphabet = 4;
};

PrefetchInstance gen_prefetch(std::uint64_t seed, const PrefetchGenParams& params = {});

}  // namespace skel
