#include "skel/json_io.hpp"

namespace skel {

namespace {

void check_format(const json& j) {
  if (j.contains("format") && j.at("format").get<int>() != 1)
    throw std::invalid_argument("unsupported instance format version");
}

std::vector<UnitJob> parse_unit_jobs(const json& arr) {
  std::vector<UnitJob> jobs;
  for (const auto& item : arr)
    jobs.push_back({item.at("release").get<long long>(),
                    item.at("deadline").get<long long>()});
  return jobs;
}

json unit_jobs_json(const std::vector<UnitJob>& jobs) {
  json arr = json::array();
  for (const auto& j : jobs)
    arr.push_back({{"release", j.release}, {"deadline", j.deadline}});
  return arr;
}

}  // namespace

EqualInstance parse_equal(const json& j) {
  check_format(j);
  EqualInstance inst;
  inst.machines = j.at("machines").get<int>();
  inst.length = j.at("length").get<long long>();
  for (const auto& item : j.at("jobs"))
    inst.jobs.push_back({item.at("release").get<long long>(),
                         item.at("deadline").get<long long>()});
  validate(inst);
  return inst;
}

TallSmallInstance parse_tallsmall(const json& j) {
  check_format(j);
  TallSmallInstance inst;
  inst.machines = j.at("machines").get<int>();
  inst.small = parse_unit_jobs(j.at("small"));
  inst.tall = parse_unit_jobs(j.at("tall"));
  validate(inst);
  return inst;
}

PrefetchInstance parse_prefetch(const json& j) {
  check_format(j);
  PrefetchInstance inst;
  inst.cache_size = j.at("cache_size").get<int>();
  inst.fetch_duration = j.at("fetch_duration").get<long long>();
  inst.requests = j.at("requests").get<std::vector<std::string>>();
  if (j.contains("initial_cache") && !j.at("initial_cache").is_null())
    inst.initial_cache = j.at("initial_cache").get<std::vector<std::string>>();
  return inst;
}

json to_json(const EqualInstance& inst) {
  json jobs = json::array();
  for (const auto& j : inst.jobs)
    jobs.push_back({{"release", j.release}, {"deadline", j.deadline}});
  return {{"format", 1}, {"machines", inst.machines}, {"length", inst.length},
          {"jobs", jobs}};
}

json to_json(const TallSmallInstance& inst) {
  return {{"format", 1},
          {"machines", inst.machines},
          {"small", unit_jobs_json(inst.small)},
          {"tall", unit_jobs_json(inst.tall)}};
}

json to_json(const PrefetchInstance& inst) {
  json out = {{"format", 1},
              {"cache_size", inst.cache_size},
              {"fetch_duration", inst.fetch_duration},
              {"requests", inst.requests}};
  if (inst.initial_cache) out["initial_cache"] = *inst.initial_cache;
  return out;
}

json solution_json(const EqualInstance& inst, const EqualSchedule& sched,
                   long long total_completion) {
  json assignments = json::array();
  for (size_t j = 0; j < sched.jobs.size(); ++j)
    assignments.push_back({{"job", j},
                           {"machine", sched.jobs[j].machine},
                           {"start", sched.jobs[j].start}});
  (void)inst;
  return {{"status", "optimal"},
          {"total_completion", total_completion},
          {"assignments", assignments}};
}

json solution_json(const TallSmallResult& result) {
  if (!result.feasible) return infeasible_json(result.cycle);
  json tall = json::array();
  for (size_t j = 0; j < result.schedule.tall_slot.size(); ++j)
    tall.push_back({{"job", j}, {"slot", result.schedule.tall_slot[j]}});
  json small = json::array();
  for (size_t j = 0; j < result.schedule.small_slot.size(); ++j)
    small.push_back({{"job", j},
                     {"machine", result.schedule.small_slot[j].first},
                     {"slot", result.schedule.small_slot[j].second}});
  return {{"status", "optimal"},
          {"tall_completion", result.tall_completion},
          {"tall_assignments", tall},
          {"small_assignments", small},
          {"idle_tall_slots", result.schedule.idle_tall_slots}};
}

json solution_json(const PreparedTrace& trace, const FetchSchedule& sched, long long stall) {
  json fetches = json::array();
  for (const auto& f : sched.fetches)
    fetches.push_back({{"start", f.start},
                       {"evict", trace.page_names[f.evicted]},
                       {"end", f.end},
                       {"fetch", trace.page_names[f.fetched]}});
  return {{"status", "optimal"}, {"stall", stall}, {"fetches", fetches}};
}

json infeasible_json(const NegativeCycle& cycle) {
  return {{"status", "infeasible"},
          {"certificate", cycle.nodes},
          {"certificate_weight", cycle.weight}};
}

}  // namespace skel
