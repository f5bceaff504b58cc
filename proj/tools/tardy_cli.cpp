// Copyright 2026 The tardy Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end: solve, gen, check and bench.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tardy/tardy.h"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitCheckFailed = 4;
constexpr int kExitOtherError = 5;
constexpr std::uint64_t kBruteMaxAssignments = 1'000'000;
constexpr std::size_t kBruteMaxJobs = 20;

struct InstanceDeleter {
  void operator()(tardy_instance* p) const { tardy_instance_free(p); }
};
struct ResultDeleter {
  void operator()(tardy_result* p) const { tardy_result_free(p); }
};
struct ScheduleDeleter {
  void operator()(tardy_schedule* p) const { tardy_schedule_free(p); }
};
using InstancePtr = std::unique_ptr<tardy_instance, InstanceDeleter>;
using ResultPtr = std::unique_ptr<tardy_result, ResultDeleter>;
using SchedulePtr = std::unique_ptr<tardy_schedule, ScheduleDeleter>;

/// A failed library call, carrying the exit code it maps to.
struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_for(tardy_status status) {
  switch (status) {
    case TARDY_ERR_IO:
      return 1;
    case TARDY_ERR_PARSE:
      return 2;
    case TARDY_ERR_CAPACITY:
      return 3;
    default:
      return kExitOtherError;
  }
}

void check(tardy_status status) {
  if (status != TARDY_OK) {
    throw Failure{exit_code_for(status), std::string(tardy_status_name(status)) + " error: " + tardy_last_error()};
  }
}

std::vector<std::uint64_t> loads_of(const tardy_result* r, std::uint64_t code) {
  std::vector<std::uint64_t> loads(tardy_result_machines(r));
  check(tardy_result_point(r, code, loads.data(), loads.size()));
  return loads;
}

std::string join(const std::vector<std::uint64_t>& values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out.push_back(sep);
    out += std::to_string(values[i]);
  }
  return out;
}

std::optional<tardy_deadline_model> deadline_model(const std::string& name) {
  if (name == "uniform") return TARDY_DEADLINES_UNIFORM;
  if (name == "tight") return TARDY_DEADLINES_TIGHT;
  if (name == "subset-sum") return TARDY_DEADLINES_SUBSET_SUM;
  return std::nullopt;
}

std::optional<tardy_algorithm> algorithm(const std::string& name) {
  if (name == "fast") return TARDY_ALGO_FAST;
  if (name == "lm") return TARDY_ALGO_LM;
  if (name == "brute") return TARDY_ALGO_BRUTE;
  return std::nullopt;
}

/// --seed if given, else TARDY_SEED, else `fallback`.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag, std::uint64_t fallback) {
  if (flag) return *flag;
  if (const char* env = std::getenv("TARDY_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Failure{kExitUsage, "TARDY_SEED is not an unsigned integer"};
    }
  }
  return fallback;
}

// solve -----------------------------------------------------------------------

struct SolveArgs {
  std::string path;
  std::string algo = "fast";
  std::string target;
  bool emit_totals = false;
  bool json = false;
  std::uint32_t fingerprints = 2;
  std::optional<std::uint64_t> fingerprint_seed;
  bool verify_lce = false;
};

nlohmann::json total_to_json(const tardy_result* r, std::uint64_t code) {
  if (tardy_result_machines(r) == 1) return code;
  return loads_of(r, code);
}

int run_solve(const SolveArgs& args, bool want_schedule) {
  const auto algo = algorithm(args.algo);
  if (!algo) throw Failure{kExitUsage, "unknown --algo '" + args.algo + "'"};
  tardy_instance* raw_inst = nullptr;
  check(tardy_instance_read_file(args.path.c_str(), &raw_inst));
  InstancePtr inst(raw_inst);

  tardy_solve_options options;
  tardy_solve_options_init(&options);
  options.fingerprints = args.fingerprints;
  options.verify_lce = args.verify_lce ? 1 : 0;
  if (args.fingerprint_seed) {
    options.use_fingerprint_seed = 1;
    options.fingerprint_seed = *args.fingerprint_seed;
  }
  tardy_result* raw_result = nullptr;
  check(tardy_solve(inst.get(), *algo, &options, &raw_result));
  ResultPtr result(raw_result);
  const tardy_result* r = result.get();
  const bool has_totals = tardy_result_has_totals(r) != 0;
  const std::uint32_t machines = tardy_result_machines(r);

  SchedulePtr schedule;
  std::uint64_t target_code = 0;
  if (want_schedule) {
    if (!has_totals) throw Failure{kExitUsage, "--schedule needs --algo fast or lm"};
    if (args.target.empty()) {
      target_code = tardy_result_best_code(r);
    } else {
      std::vector<std::uint64_t> loads;
      std::stringstream in(args.target);
      std::string part;
      while (std::getline(in, part, ',')) {
        try {
          std::size_t used = 0;
          loads.push_back(std::stoull(part, &used));
          if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
          throw Failure{kExitUsage, "--schedule target must be a total or comma-separated loads"};
        }
      }
      check(tardy_result_code(r, loads.data(), loads.size(), &target_code));
    }
    tardy_schedule* raw_schedule = nullptr;
    check(tardy_reconstruct(r, inst.get(), target_code, &raw_schedule));
    schedule.reset(raw_schedule);
    check(tardy_schedule_validate(schedule.get(), inst.get()));
  }

  double pre = 0, main_loop = 0, readout = 0;
  tardy_result_timings(r, &pre, &main_loop, &readout);

  if (args.json) {
    nlohmann::json out;
    out["algo"] = args.algo;
    out["machines"] = machines;
    out["jobs"] = tardy_instance_job_count(inst.get());
    out["total_processing"] = tardy_instance_total_processing(inst.get());
    out["opt"] = tardy_result_opt(r);
    if (has_totals) {
      out["totals_count"] = tardy_result_total_count(r);
      out["insertions_observed"] = tardy_result_insertions_observed(r);
    }
    out["insertion_bound"] = tardy_result_insertion_bound(r);
    out["timings"] = {{"preprocess_seconds", pre}, {"main_loop_seconds", main_loop}, {"readout_seconds", readout}};
    if (args.emit_totals && has_totals) {
      nlohmann::json totals = nlohmann::json::array();
      const std::uint64_t* codes = tardy_result_totals(r);
      for (std::size_t i = 0; i < tardy_result_total_count(r); ++i) totals.push_back(total_to_json(r, codes[i]));
      out["totals"] = std::move(totals);
    }
    if (schedule) {
      nlohmann::json entries = nlohmann::json::array();
      for (std::size_t i = 0; i < tardy_schedule_entry_count(schedule.get()); ++i) {
        std::size_t job = 0;
        std::uint32_t machine = 0;
        std::uint64_t completion = 0;
        check(tardy_schedule_entry(schedule.get(), i, &job, &machine, &completion));
        entries.push_back({{"job", job}, {"machine", machine}, {"completion", completion}});
      }
      out["schedule"] = {{"target", total_to_json(r, target_code)},
                         {"total", tardy_schedule_total(schedule.get())},
                         {"tardy_cost", tardy_schedule_tardy_cost(schedule.get())},
                         {"entries", std::move(entries)}};
    }
    std::cout << out.dump() << '\n';
    return 0;
  }

  std::cout << "algo=" << args.algo << '\n'
            << "machines=" << machines << '\n'
            << "jobs=" << tardy_instance_job_count(inst.get()) << '\n'
            << "total_processing=" << tardy_instance_total_processing(inst.get()) << '\n'
            << "opt=" << tardy_result_opt(r) << '\n';
  if (has_totals) {
    std::cout << "totals_count=" << tardy_result_total_count(r) << '\n'
              << "insertions_observed=" << tardy_result_insertions_observed(r) << '\n';
  }
  std::cout << "insertion_bound=" << tardy_result_insertion_bound(r) << '\n'
            << "preprocess_seconds=" << pre << '\n'
            << "main_loop_seconds=" << main_loop << '\n'
            << "readout_seconds=" << readout << '\n';
  if (args.emit_totals && has_totals) {
    std::vector<std::string> parts;
    const std::uint64_t* codes = tardy_result_totals(r);
    for (std::size_t i = 0; i < tardy_result_total_count(r); ++i) {
      parts.push_back(machines == 1 ? std::to_string(codes[i]) : join(loads_of(r, codes[i]), ','));
    }
    std::cout << "totals=";
    for (std::size_t i = 0; i < parts.size(); ++i) std::cout << (i ? " " : "") << parts[i];
    std::cout << '\n';
  }
  if (schedule) {
    std::cout << "schedule_target=" << join(loads_of(r, target_code), ',') << '\n'
              << "schedule_total=" << tardy_schedule_total(schedule.get()) << '\n'
              << "schedule_tardy_cost=" << tardy_schedule_tardy_cost(schedule.get()) << '\n';
    for (std::size_t i = 0; i < tardy_schedule_entry_count(schedule.get()); ++i) {
      std::size_t job = 0;
      std::uint32_t machine = 0;
      std::uint64_t completion = 0;
      check(tardy_schedule_entry(schedule.get(), i, &job, &machine, &completion));
      std::cout << "schedule_entry=" << job << ' ' << machine << ' ' << completion << '\n';
    }
  }
  return 0;
}

// gen -------------------------------------------------------------------------

struct GenArgs {
  std::optional<std::uint64_t> seed;
  std::size_t n = 10;
  std::uint64_t pmax = 10;
  std::string model = "uniform";
  std::uint32_t machines = 1;
};

int run_gen(const GenArgs& args) {
  const auto model = deadline_model(args.model);
  if (!model) throw Failure{kExitUsage, "unknown --deadline-model '" + args.model + "'"};
  tardy_instance* raw = nullptr;
  check(tardy_instance_generate(args.n, args.pmax, *model, resolve_seed(args.seed, 1), args.machines, &raw));
  InstancePtr inst(raw);
  char* text = nullptr;
  check(tardy_instance_serialize(inst.get(), &text));
  std::cout << text;
  tardy_string_free(text);
  return 0;
}

// check -----------------------------------------------------------------------

struct CheckArgs {
  std::size_t trials = 1000;
  std::optional<std::size_t> n_max;
  std::uint64_t p_max = 8;
  std::uint32_t machines = 1;
  std::optional<std::uint64_t> seed;
  std::string instance_path;
  bool inject_fault = false;
  bool verbose = false;
};

std::size_t brute_job_limit(std::uint32_t machines) {
  if (machines == 1) return kBruteMaxJobs;
  std::size_t n = 0;
  for (std::uint64_t count = machines + 1; count <= kBruteMaxAssignments; count *= machines + 1) ++n;
  return n;
}

struct Job {
  std::uint64_t p;
  std::uint64_t d;
};

InstancePtr build(std::uint32_t machines, const std::vector<Job>& jobs) {
  tardy_instance* raw = nullptr;
  check(tardy_instance_create(machines, &raw));
  InstancePtr inst(raw);
  for (const Job& j : jobs) check(tardy_instance_add_job(inst.get(), j.p, j.d));
  return inst;
}

std::vector<Job> jobs_of(const tardy_instance* inst) {
  std::vector<Job> jobs(tardy_instance_job_count(inst));
  for (std::size_t i = 0; i < jobs.size(); ++i) check(tardy_instance_job(inst, i, &jobs[i].p, &jobs[i].d));
  return jobs;
}

ResultPtr solve_with(const tardy_instance* inst, tardy_algorithm algo, const tardy_solve_options& options) {
  tardy_result* raw = nullptr;
  check(tardy_solve(inst, algo, &options, &raw));
  return ResultPtr(raw);
}

/// Runs every oracle on `inst`; returns a description of the first
/// disagreement. `opt` receives the brute-force optimum.
std::optional<std::string> trial(const tardy_instance* inst, bool inject_fault, std::uint64_t* opt) {
  tardy_solve_options options;
  tardy_solve_options_init(&options);
  ResultPtr lm = solve_with(inst, TARDY_ALGO_LM, options);
  ResultPtr brute = solve_with(inst, TARDY_ALGO_BRUTE, options);
  options.inject_fault = inject_fault ? 1 : 0;
  ResultPtr fast = solve_with(inst, TARDY_ALGO_FAST, options);
  if (opt != nullptr) *opt = tardy_result_opt(brute.get());

  const std::uint64_t expected = tardy_result_opt(brute.get());
  if (tardy_result_opt(fast.get()) != expected) {
    return "fast opt " + std::to_string(tardy_result_opt(fast.get())) + " != brute-force opt " +
           std::to_string(expected);
  }
  if (tardy_result_opt(lm.get()) != expected) {
    return "lm opt " + std::to_string(tardy_result_opt(lm.get())) + " != brute-force opt " + std::to_string(expected);
  }
  const std::size_t count = tardy_result_total_count(fast.get());
  if (count != tardy_result_total_count(lm.get()) ||
      !std::equal(tardy_result_totals(fast.get()), tardy_result_totals(fast.get()) + count,
                  tardy_result_totals(lm.get()))) {
    return "fast and lm totals differ";
  }
  for (const tardy_result* r : {fast.get(), lm.get()}) {
    if (tardy_result_insertions_observed(r) > tardy_result_insertion_bound(r)) {
      return "insertions " + std::to_string(tardy_result_insertions_observed(r)) + " exceed the bound " +
             std::to_string(tardy_result_insertion_bound(r));
    }
  }
  tardy_schedule* raw = nullptr;
  if (tardy_reconstruct(fast.get(), inst, tardy_result_best_code(fast.get()), &raw) != TARDY_OK) {
    return std::string("reconstruction failed: ") + tardy_last_error();
  }
  SchedulePtr schedule(raw);
  if (tardy_schedule_validate(schedule.get(), inst) != TARDY_OK) {
    return std::string("invalid schedule: ") + tardy_last_error();
  }
  if (tardy_schedule_total(schedule.get()) != expected) return "schedule total differs from opt";
  return std::nullopt;
}

/// Greedily removes jobs and shrinks values while the instance still fails.
std::vector<Job> shrink(std::uint32_t machines, std::vector<Job> jobs, bool inject_fault) {
  auto fails = [&](const std::vector<Job>& candidate) {
    InstancePtr inst = build(machines, candidate);
    return trial(inst.get(), inject_fault, nullptr).has_value();
  };
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      std::vector<Job> fewer = jobs;
      fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(i));
      if (fails(fewer)) {
        jobs = std::move(fewer);
        progress = true;
        --i;
      }
    }
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      for (bool due : {false, true}) {
        std::uint64_t& value = due ? jobs[i].d : jobs[i].p;
        while (value > 1) {
          const std::uint64_t old = value;
          value = old - 1;
          if (!fails(jobs)) {
            value = old;
            break;
          }
          progress = true;
        }
      }
    }
  }
  return jobs;
}

void print_instance(std::uint32_t machines, const std::vector<Job>& jobs) {
  std::cout << machines << ' ' << jobs.size() << '\n';
  for (const Job& j : jobs) std::cout << j.p << ' ' << j.d << '\n';
}

int report_failure(std::uint32_t machines, const std::vector<Job>& jobs, const std::string& why, bool inject_fault) {
  std::cout << "FAIL: " << why << '\n';
  const std::vector<Job> minimal = shrink(machines, jobs, inject_fault);
  InstancePtr inst = build(machines, minimal);
  std::cout << "minimal failing instance (" << trial(inst.get(), inject_fault, nullptr).value_or("") << "):\n";
  print_instance(machines, minimal);
  return kExitCheckFailed;
}

int run_check(const CheckArgs& args) {
  if (!args.instance_path.empty()) {
    tardy_instance* raw = nullptr;
    check(tardy_instance_read_file(args.instance_path.c_str(), &raw));
    InstancePtr inst(raw);
    const std::uint32_t machines = tardy_instance_machines(inst.get());
    if (tardy_instance_job_count(inst.get()) > brute_job_limit(machines)) {
      throw Failure{kExitUsage, "instance exceeds the brute-force limit"};
    }
    std::uint64_t opt = 0;
    const auto why = trial(inst.get(), args.inject_fault, &opt);
    if (why) return report_failure(machines, jobs_of(inst.get()), *why, args.inject_fault);
    std::cout << "trial 0: jobs=" << tardy_instance_job_count(inst.get())
              << " P=" << tardy_instance_total_processing(inst.get()) << " opt=" << opt << '\n'
              << "PASS trials=1\n";
    return 0;
  }

  const std::size_t limit = brute_job_limit(args.machines);
  const std::size_t n_max = args.n_max.value_or(std::min<std::size_t>(12, limit));
  if (n_max > limit) {
    throw Failure{kExitUsage, "--n-max " + std::to_string(n_max) + " exceeds the brute-force limit of " +
                                  std::to_string(limit) + " jobs for " + std::to_string(args.machines) +
                                  " machine(s)"};
  }
  if (args.p_max == 0 || args.machines == 0) throw Failure{kExitUsage, "--p-max and --m must be positive"};
  std::mt19937_64 rng(resolve_seed(args.seed, 1));
  const tardy_deadline_model models[] = {TARDY_DEADLINES_UNIFORM, TARDY_DEADLINES_TIGHT, TARDY_DEADLINES_SUBSET_SUM};
  for (std::size_t t = 0; t < args.trials; ++t) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(0, n_max)(rng);
    tardy_instance* raw = nullptr;
    check(tardy_instance_generate(n, args.p_max, models[t % 3], rng(), args.machines, &raw));
    InstancePtr inst(raw);
    std::uint64_t opt = 0;
    const auto why = trial(inst.get(), args.inject_fault, &opt);
    if (why) {
      std::cout << "trial " << t << " failed\n";
      return report_failure(args.machines, jobs_of(inst.get()), *why, args.inject_fault);
    }
    if (args.verbose) {
      std::cout << "trial " << t << ": jobs=" << n << " P=" << tardy_instance_total_processing(inst.get())
                << " opt=" << opt << '\n';
    }
  }
  std::cout << "PASS trials=" << args.trials << '\n';
  return 0;
}

// bench -----------------------------------------------------------------------

struct BenchArgs {
  std::vector<std::uint64_t> sizes{100000, 200000, 400000};
  std::size_t reps = 3;
  std::vector<std::string> algos{"fast", "lm"};
  std::size_t n = 0;
  std::string model = "uniform";
  std::optional<std::uint64_t> seed;
};

int run_bench(const BenchArgs& args) {
  if (!std::is_sorted(args.sizes.begin(), args.sizes.end())) throw Failure{kExitUsage, "--sizes must be ascending"};
  if (args.reps == 0) throw Failure{kExitUsage, "--reps must be positive"};
  const auto model = deadline_model(args.model);
  if (!model) throw Failure{kExitUsage, "unknown --deadline-model '" + args.model + "'"};
  std::vector<tardy_algorithm> algos;
  for (const std::string& name : args.algos) {
    const auto algo = algorithm(name);
    if (!algo) throw Failure{kExitUsage, "unknown algorithm '" + name + "'"};
    algos.push_back(*algo);
  }
  const std::uint64_t seed = resolve_seed(args.seed, 1);
  tardy_solve_options options;
  tardy_solve_options_init(&options);
  options.universe_limit = ~std::uint64_t{0};

  std::cout << "algo,P,n,median_seconds,insertions_observed\n";
  for (std::size_t a = 0; a < algos.size(); ++a) {
    for (std::uint64_t size : args.sizes) {
      const std::size_t n = args.n != 0 ? args.n : std::max<std::uint64_t>(1, size / 10);
      tardy_instance* raw = nullptr;
      check(tardy_instance_generate_with_total(size, n, *model, seed, 1, &raw));
      InstancePtr inst(raw);
      std::vector<double> seconds;
      std::uint64_t insertions = 0;
      for (std::size_t rep = 0; rep < args.reps; ++rep) {
        const auto start = std::chrono::steady_clock::now();
        ResultPtr r = solve_with(inst.get(), algos[a], options);
        seconds.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
        insertions = tardy_result_insertions_observed(r.get());
      }
      std::sort(seconds.begin(), seconds.end());
      const double median = seconds.size() % 2 == 1
                                ? seconds[seconds.size() / 2]
                                : (seconds[seconds.size() / 2 - 1] + seconds[seconds.size() / 2]) / 2;
      std::cout << args.algos[a] << ',' << size << ',' << n << ',' << median << ',' << insertions << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximize the processing time of early jobs on identical machines."};
  app.require_subcommand(1);
  app.set_version_flag("--version", tardy_version());

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance file");
  solve_cmd->add_option("path", solve_args.path, "Instance file")->required();
  solve_cmd->add_option("--algo", solve_args.algo, "fast, lm or brute")->capture_default_str();
  auto* schedule_opt =
      solve_cmd->add_option("--schedule", solve_args.target,
                            "Print a schedule for the given total (loads 'a,b,...' with several machines; "
                            "default: the optimum)")
          ->expected(0, 1);
  solve_cmd->add_flag("--emit-totals", solve_args.emit_totals, "Print every achievable total");
  solve_cmd->add_flag("--json", solve_args.json, "Print one JSON object instead of key=value lines");
  solve_cmd->add_option("--fingerprints", solve_args.fingerprints, "Number of fingerprints (1-4)")
      ->check(CLI::Range(1, 4))
      ->capture_default_str();
  solve_cmd->add_option("--fingerprint-seed", solve_args.fingerprint_seed, "Seed for the fingerprint bases");
  solve_cmd->add_flag("--verify-lce", solve_args.verify_lce, "Recheck every LCE answer directly");

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "Print a random instance");
  gen_cmd->add_option("--seed", gen_args.seed, "Random seed (default: TARDY_SEED or 1)");
  gen_cmd->add_option("--n", gen_args.n, "Number of jobs")->capture_default_str();
  gen_cmd->add_option("--pmax", gen_args.pmax, "Largest processing time")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  gen_cmd->add_option("--deadline-model", gen_args.model, "uniform, tight or subset-sum")->capture_default_str();
  gen_cmd->add_option("--m", gen_args.machines, "Machines")->check(CLI::PositiveNumber)->capture_default_str();

  CheckArgs check_args;
  auto* check_cmd = app.add_subcommand("check", "Cross-check all solvers on random instances");
  check_cmd->add_option("--trials", check_args.trials, "Number of instances")->capture_default_str();
  check_cmd->add_option("--n-max", check_args.n_max, "Most jobs per instance (default: 12 or the brute-force limit)");
  check_cmd->add_option("--p-max", check_args.p_max, "Largest processing time")->capture_default_str();
  check_cmd->add_option("--m", check_args.machines, "Machines")->check(CLI::PositiveNumber)->capture_default_str();
  check_cmd->add_option("--seed", check_args.seed, "Random seed (default: TARDY_SEED or 1)");
  check_cmd->add_option("--instance", check_args.instance_path, "Check one instance file instead");
  check_cmd->add_flag("--verbose", check_args.verbose, "Print one line per trial");
  check_cmd->add_flag("--inject-fault", check_args.inject_fault)->group("");

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Time solvers on growing instances (CSV)");
  bench_cmd->add_option("--sizes", bench_args.sizes, "Total processing times, ascending")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--reps", bench_args.reps, "Runs per size; the median is reported")->capture_default_str();
  bench_cmd->add_option("--algo-set", bench_args.algos, "Algorithms (fast, lm, brute)")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--n", bench_args.n, "Jobs per instance (default: P/10)");
  bench_cmd->add_option("--deadline-model", bench_args.model, "uniform, tight or subset-sum")->capture_default_str();
  bench_cmd->add_option("--seed", bench_args.seed, "Random seed (default: TARDY_SEED or 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (solve_cmd->parsed()) return run_solve(solve_args, schedule_opt->count() > 0);
    if (gen_cmd->parsed()) return run_gen(gen_args);
    if (check_cmd->parsed()) return run_check(check_args);
    if (bench_cmd->parsed()) return run_bench(bench_args);
  } catch (const Failure& f) {
    std::cerr << "tardy: " << f.message << '\n';
    return f.exit_code;
  }
  return kExitUsage;
}
