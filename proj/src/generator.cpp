#include "skel/generator.hpp"

#include <random>
#include <stdexcept>

namespace skel {

namespace {

long long draw(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace

EqualInstance gen_equal(std::uint64_t seed, const EqualGenParams& params) {
  if (params.max_jobs < 1 || params.max_machines < 1 || params.max_length < 1 ||
      params.max_release < 0 || params.max_slack < 0)
    throw std::invalid_argument("gen_equal: parameters out of range");
  std::mt19937_64 rng(seed);
  EqualInstance inst;
  inst.machines = static_cast<int>(draw(rng, 1, params.max_machines));
  inst.length = draw(rng, 1, params.max_length);
  int n = static_cast<int>(draw(rng, 1, params.max_jobs));
  for (int i = 0; i < n; ++i) {
    long long r = draw(rng, 0, params.max_release);
    long long d = r + inst.length + draw(rng, 0, params.max_slack);
    inst.jobs.push_back({r, d});
  }
  return inst;
}

TallSmallInstance gen_tallsmall(std::uint64_t seed, const TallSmallGenParams& params) {
  if (params.max_jobs < 0 || params.max_machines < 1 || params.horizon < 1)
    throw std::invalid_argument("gen_tallsmall: parameters out of range");
  std::mt19937_64 rng(seed);
  TallSmallInstance inst;
  inst.machines = static_cast<int>(draw(rng, 1, params.max_machines));
  int n = static_cast<int>(draw(rng, 0, params.max_jobs));
  for (int i = 0; i < n; ++i) {
    long long r = draw(rng, 1, params.horizon);
    long long d = r + 1 + draw(rng, 0, params.horizon - r);
    bool tall = draw(rng, 0, 1) == 1;
    (tall ? inst.tall : inst.small).push_back({r, d});
  }
  return inst;
}

PrefetchInstance gen_prefetch(std::uint64_t seed, const PrefetchGenParams& params) {
  if (params.max_requests < 1 || params.max_cache < 1 || params.max_fetch < 1 ||
      params.max_alphabet < 1)
    throw std::invalid_argument("gen_prefetch: parameters out of range");
  std::mt19937_64 rng(seed);
  PrefetchInstance inst;
  int alphabet = static_cast<int>(draw(rng, 1, params.max_alphabet));
  inst.cache_size = static_cast<int>(draw(rng, 1, std::min(params.max_cache, alphabet)));
  inst.fetch_duration = draw(rng, 1, params.max_fetch);
  int n = static_cast<int>(draw(rng, std::max(inst.cache_size, 1), params.max_requests));
  // the first k requests are the k distinct initial pages
  for (int i = 0; i < inst.cache_size; ++i)
    inst.requests.push_back(std::string(1, static_cast<char>('a' + i)));
  for (int i = inst.cache_size; i < n; ++i)
    inst.requests.push_back(std::string(1, static_cast<char>('a' + draw(rng, 0, alphabet - 1))));
  return inst;
}

}  // namespace skel
