#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "skel/equal_length.hpp"
#include "skel/prefetch.hpp"
#include "skel/tall_small.hpp"

namespace skel {

using nlohmann::json;

// Instance schemas (all carry "format": 1):
//   equal:     {"machines", "length", "jobs": [{"release", "deadline"}, ...]}
//   tallsmall: {"machines", "small": [...], "tall": [...]}
//   prefetch:  {"cache_size", "fetch_duration", "requests", "initial_cache"?}

EqualInstance parse_equal(const json& j);
TallSmallInstance parse_tallsmall(const json& j);
PrefetchInstance parse_prefetch(const json& j);

json to_json(const EqualInstance& inst);
json to_json(const TallSmallInstance& inst);
json to_json(const PrefetchInstance& inst);

json solution_json(const EqualInstance& inst, const EqualSchedule& sched,
                   long long total_completion);
json solution_json(const TallSmallResult& result);
json solution_json(const PreparedTrace& trace, const FetchSchedule& sched, long long stall);
json infeasible_json(const NegativeCycle& cycle);

}  // namespace skel
