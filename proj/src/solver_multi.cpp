// Copyright 2026 The tardy Authors
// SPDX-License-Identifier: Apache-2.0

#include "tardy/solver_multi.hpp"

#include <algorithm>

#include "solve_common.hpp"
#include "tardy/errors.hpp"

namespace tardy {

SolveResult solve_multi(const Instance& inst, const SolveOptions& options) {
  if (inst.machines() == 1) return solve(inst, options);
  detail::Stopwatch watch;
  SolveResult res;
  const unsigned m = inst.machines();
  const std::vector<Job> steps = detail::step_jobs(inst);
  detail::prepare_result(res, inst, steps);
  const std::uint64_t total = inst.total_processing();
  const std::uint64_t u = inst.universe_bound();

  const Point origin_point(m, 0);
  SumCapSet set = SumCapSet::init(std::span<const Point>(&origin_point, 1), u, m,
                        {options.universe_limit, options.params});
  res.timings.preprocess_seconds = watch.lap();

  for (std::uint32_t step = 0; step < steps.size(); ++step) {
    const Job& job = steps[step];
    const std::uint64_t due = std::min(job.due, total);
    const DiffReport report = set.sum_unit_shifts(job.processing);
    res.insertions_observed += report.inserted.size();
    for (std::size_t k = 0; k < report.inserted.size(); ++k) {
      const std::uint64_t code = report.inserted[k];
      bool survives = true;
      for (std::uint64_t rest = code; rest != 0; rest /= u) {
        if (rest % u > due) {
          survives = false;
          break;
        }
      }
      if (survives) res.origins.emplace(code, Origin{step, report.via_machine[k]});
    }
    set.cap_all_coords(due);
  }
  res.timings.main_loop_seconds = watch.lap();

  if (options.inject_fault) set.flip_for_testing(set.indicator_length() - 1);
  res.totals = set.member_codes();
  res.opt = set.max_total().value_or(0);
  res.timings.readout_seconds = watch.lap();
  return res;
}

SolveResult lawler_moore_multi(const Instance& inst, const SolveOptions& options) {
  if (inst.machines() == 1) return lawler_moore(inst, options);
  detail::Stopwatch watch;
  SolveResult res;
  const unsigned m = inst.machines();
  const std::vector<Job> steps = detail::step_jobs(inst);
  detail::prepare_result(res, inst, steps);
  const std::uint64_t total = inst.total_processing();
  const std::uint64_t u = inst.universe_bound();
  const std::uint64_t length = checked_universe(u, m, options.universe_limit);

  std::vector<std::uint64_t> stride(m);
  stride[0] = 1;
  for (unsigned i = 1; i < m; ++i) stride[i] = stride[i - 1] * u;

  std::vector<std::uint8_t> member(length, 0);
  std::vector<std::uint8_t> before;
  std::vector<std::uint64_t> coords(m);
  member[0] = 1;
  res.timings.preprocess_seconds = watch.lap();

  for (std::uint32_t step = 0; step < steps.size(); ++step) {
    const std::uint64_t p = steps[step].processing;
    const std::uint64_t due = std::min(steps[step].due, total);
    before = member;
    std::fill(coords.begin(), coords.end(), 0);
    for (std::uint64_t c = 0; c < length; ++c) {
      if (before[c] != 0) {
        for (unsigned i = 0; i < m; ++i) {
          if (coords[i] + p >= u) continue;
          const std::uint64_t target = c + p * stride[i];
          if (member[target] != 0) continue;
          ++res.insertions_observed;
          bool survives = true;
          for (unsigned k = 0; k < m; ++k) {
            const std::uint64_t v = coords[k] + (k == i ? p : 0);
            if (v > due) survives = false;
          }
          if (survives) {
            member[target] = 1;
            res.origins.emplace(target, Origin{step, i});
          } else {
            member[target] = 2;  // counted, not kept
          }
        }
      }
      for (unsigned i = 0; i < m; ++i) {
        if (++coords[i] < u) break;
        coords[i] = 0;
      }
    }
    for (std::uint8_t& b : member) {
      if (b == 2) b = 0;
    }
  }
  res.timings.main_loop_seconds = watch.lap();

  for (std::uint64_t c = 0; c < length; ++c) {
    if (member[c] != 0) res.totals.push_back(c);
  }
  std::uint64_t best = 0;
  for (std::uint64_t c : res.totals) {
    std::uint64_t sum = 0;
    for (std::uint64_t rest = c; rest != 0; rest /= u) sum += rest % u;
    best = std::max(best, sum);
  }
  res.opt = best;
  res.timings.readout_seconds = watch.lap();
  return res;
}

namespace {

struct AssignmentSearch {
  const std::vector<Job>& jobs;
  std::vector<std::uint64_t> loads;
  std::uint64_t best = 0;

  void run(std::size_t i, std::uint64_t total) {
    if (i == jobs.size()) {
      best = std::max(best, total);
      return;
    }
    const Job& job = jobs[i];
    for (std::size_t k = 0; k < loads.size(); ++k) {
      if (loads[k] + job.processing > job.due) continue;
      loads[k] += job.processing;
      run(i + 1, total + job.processing);
      loads[k] -= job.processing;
    }
    run(i + 1, total);
  }
};

}  // namespace

std::uint64_t brute_force_multi(const Instance& inst) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    count *= inst.machines() + 1;
    if (count > kBruteForceMaxAssignments) {
      throw CapacityError("brute_force_multi: more than " + std::to_string(kBruteForceMaxAssignments) +
                          " assignments");
    }
  }
  const Instance sorted = edd_sort(inst);
  AssignmentSearch search{sorted.jobs(), std::vector<std::uint64_t>(inst.machines(), 0)};
  search.run(0, 0);
  return search.best;
}

Schedule reconstruct_multi(const SolveResult& res, const Instance& inst,
                           std::span<const std::uint64_t> loads) {
  return reconstruct_code(res, inst, res.code(loads));
}

}  // namespace tardy
