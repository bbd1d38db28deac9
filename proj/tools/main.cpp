// Command-line front-end: parse an instance, solve, verify, optionally
// cross-check against the brute-force oracle, emit solution JSON.
//
// Exit codes: 0 = optimal solution emitted, 2 = infeasible (certificate
// emitted), 1 = input or internal error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "skel/generator.hpp"
#include "skel/json_io.hpp"
#include "skel/oracle.hpp"

namespace {

using skel::json;

json read_instance(const std::string& path) {
  std::istringstream inline_json;
  std::ifstream file;
  std::istream* in = nullptr;
  if (path == "-") {
    in = &std::cin;
  } else {
    file.open(path);
    if (!file) throw std::runtime_error("cannot open input file: " + path);
    in = &file;
  }
  json j;
  *in >> j;
  return j;
}

void emit(const json& out, const std::string& out_path) {
  std::string text = out.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << text;
  }
}

struct CommonOpts {
  std::string input;
  std::string out_path;
  bool verify = true;
  bool oracle_check = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--input", opts.input, "instance JSON file ('-' for stdin)")->required();
  cmd->add_flag("--verify,!--no-verify", opts.verify, "re-check the solution independently");
  cmd->add_flag("--oracle-check", opts.oracle_check,
                "compare against the exhaustive reference solver (tiny instances only)");
  cmd->add_option("--out", opts.out_path, "write the solution JSON to this file");
}

json wrap(const json& solution, bool infeasible, bool verified_flag, bool ran_verify,
          std::optional<bool> oracle_agreement, std::optional<long long> objective) {
  json out;
  out["status"] = infeasible ? "infeasible" : "optimal";
  if (objective) out["objective"] = *objective;
  out["solution"] = solution;
  out["verified"] = ran_verify ? json(verified_flag) : json(false);
  if (oracle_agreement) out["oracle_agreement"] = *oracle_agreement;
  return out;
}

int run_equal(const CommonOpts& opts) {
  auto inst = skel::parse_equal(read_instance(opts.input));
  auto res = skel::solve_skeleton(inst);
  if (std::holds_alternative<skel::NegativeCycle>(res)) {
    const auto& cycle = std::get<skel::NegativeCycle>(res);
    std::optional<bool> agree;
    if (opts.oracle_check) agree = !skel::brute_equal(inst).feasible;
    emit(wrap(skel::infeasible_json(cycle), true, false, false, agree, std::nullopt),
         opts.out_path);
    return 2;
  }
  auto sched = skel::edd_assign(inst, std::get<skel::SlotProfile>(res));
  auto rep = skel::verify_equal(inst, sched);
  if (opts.verify && !rep.ok()) {
    for (const auto& v : rep.violations) std::cerr << "verifier: " << v << "\n";
    return 1;
  }
  std::optional<bool> agree;
  if (opts.oracle_check) {
    auto oracle = skel::brute_equal(inst);
    agree = oracle.feasible && oracle.total_completion == rep.objective;
  }
  emit(wrap(skel::solution_json(inst, sched, rep.objective), false, rep.ok(), opts.verify,
            agree, rep.objective),
       opts.out_path);
  return 0;
}

int run_tallsmall(const CommonOpts& opts) {
  auto inst = skel::parse_tallsmall(read_instance(opts.input));
  auto result = skel::solve_tallsmall(inst);
  if (!result.feasible) {
    std::optional<bool> agree;
    if (opts.oracle_check) agree = !skel::brute_tallsmall(inst).feasible;
    emit(wrap(skel::solution_json(result), true, false, false, agree, std::nullopt),
         opts.out_path);
    return 2;
  }
  auto rep = skel::verify_tallsmall(inst, result.schedule);
  if (opts.verify && !rep.ok()) {
    for (const auto& v : rep.violations) std::cerr << "verifier: " << v << "\n";
    return 1;
  }
  std::optional<bool> agree;
  if (opts.oracle_check) {
    auto oracle = skel::brute_tallsmall(inst);
    agree = oracle.feasible && oracle.tall_completion == result.tall_completion;
  }
  emit(wrap(skel::solution_json(result), false, rep.ok(), opts.verify, agree,
            result.tall_completion),
       opts.out_path);
  return 0;
}

int run_prefetch(const CommonOpts& opts) {
  auto inst = skel::parse_prefetch(read_instance(opts.input));
  auto trace = skel::prepare(inst);
  auto profile = skel::solve_profile(trace);
  auto intervals = skel::extract_intervals(trace, profile.profile);
  auto sched = skel::greedy_pages(trace, intervals);
  auto rep = skel::simulate(trace, sched);
  bool verified = rep.ok() && rep.stall == profile.stall;
  if (opts.verify && !verified) {
    for (const auto& v : rep.violations) std::cerr << "verifier: " << v << "\n";
    if (rep.stall != profile.stall)
      std::cerr << "verifier: simulated stall " << rep.stall
                << " differs from LP objective " << profile.stall << "\n";
    return 1;
  }
  std::optional<bool> agree;
  if (opts.oracle_check) agree = skel::brute_prefetch(trace).stall == profile.stall;
  emit(wrap(skel::solution_json(trace, sched, profile.stall), false, verified, opts.verify,
            agree, profile.stall),
       opts.out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact skeleton solvers: equal-length scheduling, tall/small "
               "scheduling, offline prefetching"};
  app.require_subcommand(1);

  CommonOpts equal_opts, tallsmall_opts, prefetch_opts;
  auto* equal_cmd = app.add_subcommand("equal", "minimize total completion time of "
                                                "equal-length jobs on parallel machines");
  add_common(equal_cmd, equal_opts);
  auto* tallsmall_cmd =
      app.add_subcommand("tallsmall", "schedule unit tall/small jobs with windows");
  add_common(tallsmall_cmd, tallsmall_opts);
  auto* prefetch_cmd =
      app.add_subcommand("prefetch", "minimize stall time of offline prefetching/caching");
  add_common(prefetch_cmd, prefetch_opts);

  auto* gen_cmd = app.add_subcommand("gen", "generate a seeded random instance");
  std::string kind;
  std::uint64_t seed = 0;
  std::string gen_out;
  skel::EqualGenParams ep;
  skel::TallSmallGenParams tp;
  skel::PrefetchGenParams pp;
  gen_cmd->add_option("--kind", kind, "equal | tallsmall | prefetch")->required();
  gen_cmd->add_option("--seed", seed, "generator seed")->required();
  gen_cmd->add_option("--out", gen_out, "write the instance JSON to this file");
  gen_cmd->add_option("--jobs", ep.max_jobs, "max jobs (equal/tallsmall)");
  gen_cmd->add_option("--machines", ep.max_machines, "max machines");
  gen_cmd->add_option("--length", ep.max_length, "max job length (equal)");
  gen_cmd->add_option("--release-max", ep.max_release, "max release time (equal)");
  gen_cmd->add_option("--slack-max", ep.max_slack, "max deadline slack (equal)");
  gen_cmd->add_option("--horizon", tp.horizon, "horizon (tallsmall)");
  gen_cmd->add_option("--requests", pp.max_requests, "max requests (prefetch)");
  gen_cmd->add_option("--cache", pp.max_cache, "max cache size (prefetch)");
  gen_cmd->add_option("--fetch", pp.max_fetch, "max fetch duration (prefetch)");
  gen_cmd->add_option("--alphabet", pp.max_alphabet, "max alphabet size (prefetch)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen_cmd->parsed()) {
      if (kind == "equal") {
        emit(skel::to_json(skel::gen_equal(seed, ep)), gen_out);
      } else if (kind == "tallsmall") {
        tp.max_jobs = ep.max_jobs;
        tp.max_machines = ep.max_machines;
        emit(skel::to_json(skel::gen_tallsmall(seed, tp)), gen_out);
      } else if (kind == "prefetch") {
        emit(skel::to_json(skel::gen_prefetch(seed, pp)), gen_out);
      } else {
        std::cerr << "unknown kind: " << kind << "\n";
        return 1;
      }
      return 0;
    }
    if (equal_cmd->parsed()) return run_equal(equal_opts);
    if (tallsmall_cmd->parsed()) return run_tallsmall(tallsmall_opts);
    if (prefetch_cmd->parsed()) return run_prefetch(prefetch_opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
