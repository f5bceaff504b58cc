// Copyright 2026 The tardy Authors
// SPDX-License-Identifier: Apache-2.0

#include "tardy/solver.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "solve_common.hpp"
#include "tardy/errors.hpp"

namespace tardy {

namespace detail {

std::vector<Job> step_jobs(const Instance& inst) {
  const Instance sorted = edd_sort(inst);
  std::vector<Job> steps;
  for (const Job& j : sorted.jobs()) {
    if (j.processing > 0) steps.push_back(j);
  }
  return steps;
}

void prepare_result(SolveResult& res, const Instance& inst, const std::vector<Job>& steps) {
  res.machines = inst.machines();
  res.universe = inst.universe_bound();
  res.insertion_bound = insertion_bound(inst.total_processing(), inst.machines());
  res.step_jobs.clear();
  for (const Job& j : steps) res.step_jobs.push_back(j.id);
}

}  // namespace detail

std::uint64_t insertion_bound(std::uint64_t total_processing, unsigned machines) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  if (machines == 1) return total_processing > (kMax - 1) / 2 ? kMax : 2 * total_processing + 1;
  const std::uint64_t u = total_processing + 1;
  std::uint64_t b = machines + 1;
  for (unsigned i = 0; i < machines; ++i) {
    if (b > kMax / u) return kMax;
    b *= u;
  }
  return b;
}

bool SolveResult::contains(std::uint64_t c) const {
  return std::binary_search(totals.begin(), totals.end(), c);
}

std::optional<Origin> SolveResult::origin(std::uint64_t c) const {
  if (machines == 1) {
    if (c < first_step.size() && first_step[c] != kNoStep) return Origin{first_step[c], 0};
    return std::nullopt;
  }
  const auto it = origins.find(c);
  if (it == origins.end()) return std::nullopt;
  return it->second;
}

Point SolveResult::point(std::uint64_t c) const {
  Point p(machines);
  for (unsigned i = 0; i < machines; ++i) {
    p[i] = c % universe;
    c /= universe;
  }
  return p;
}

std::uint64_t SolveResult::code(std::span<const std::uint64_t> p) const {
  if (p.size() != machines) {
    throw ContractViolation("result: expected " + std::to_string(machines) + " coordinates");
  }
  std::uint64_t c = 0;
  std::uint64_t stride = 1;
  for (unsigned i = 0; i < machines; ++i) {
    if (p[i] >= universe) throw NotAchievableError("result: coordinate exceeds the total processing time");
    c += p[i] * stride;
    stride *= universe;
  }
  return c;
}

std::uint64_t SolveResult::best_code() const {
  std::uint64_t best = 0;
  std::uint64_t best_sum = 0;
  bool found = false;
  for (std::uint64_t c : totals) {
    std::uint64_t sum = 0;
    for (std::uint64_t rest = c; rest != 0; rest /= universe) sum += rest % universe;
    if (!found || sum > best_sum) {
      best = c;
      best_sum = sum;
      found = true;
    }
  }
  return best;
}

SolveResult solve(const Instance& inst, const SolveOptions& options) {
  if (inst.machines() != 1) throw ContractViolation("solve: single-machine instances only");
  detail::Stopwatch watch;
  SolveResult res;
  const std::vector<Job> steps = detail::step_jobs(inst);
  detail::prepare_result(res, inst, steps);
  const std::uint64_t total = inst.total_processing();
  const std::uint64_t u = inst.universe_bound();

  const std::uint64_t zero[1] = {0};
  SumCapSet set = SumCapSet::init_scalar(zero, u, {options.universe_limit, options.params});
  res.first_step.assign(u, SolveResult::kNoStep);
  res.timings.preprocess_seconds = watch.lap();

  for (std::uint32_t step = 0; step < steps.size(); ++step) {
    const Job& job = steps[step];
    // Totals never exceed P, so clamping the due date changes nothing.
    const std::uint64_t due = std::min(job.due, total);
    const DiffReport report = set.sum_shift(job.processing);
    res.insertions_observed += report.inserted.size();
    for (std::uint64_t s : report.inserted) {
      if (s > due) break;
      res.first_step[s] = step;
    }
    set.cap(due);
  }
  res.timings.main_loop_seconds = watch.lap();

  if (options.inject_fault) set.flip_for_testing(u - 1);
  res.totals = set.member_codes();
  res.opt = set.max_total().value_or(0);
  res.timings.readout_seconds = watch.lap();
  return res;
}

SolveResult lawler_moore(const Instance& inst, const SolveOptions& options) {
  if (inst.machines() != 1) throw ContractViolation("lawler_moore: single-machine instances only");
  detail::Stopwatch watch;
  SolveResult res;
  const std::vector<Job> steps = detail::step_jobs(inst);
  detail::prepare_result(res, inst, steps);
  const std::uint64_t total = inst.total_processing();
  const std::uint64_t u = checked_universe(inst.universe_bound(), 1, options.universe_limit);

  std::vector<std::uint8_t> member(u, 0);
  member[0] = 1;
  res.first_step.assign(u, SolveResult::kNoStep);
  res.timings.preprocess_seconds = watch.lap();

  for (std::uint32_t step = 0; step < steps.size(); ++step) {
    const std::uint64_t p = steps[step].processing;
    const std::uint64_t due = std::min(steps[step].due, total);
    // Members are all <= the previous due date <= due, so nothing above due
    // is set; walking down keeps reads on the pre-step set.
    for (std::uint64_t s = total; s >= p; --s) {
      if (member[s - p] != 0 && member[s] == 0) {
        ++res.insertions_observed;
        if (s <= due) {
          member[s] = 1;
          res.first_step[s] = step;
        }
      }
    }
  }
  res.timings.main_loop_seconds = watch.lap();

  for (std::uint64_t s = 0; s < u; ++s) {
    if (member[s] != 0) res.totals.push_back(s);
  }
  res.opt = res.totals.back();
  res.timings.readout_seconds = watch.lap();
  return res;
}

namespace {

struct SubsetSearch {
  const std::vector<Job>& jobs;
  std::uint64_t best = 0;

  void run(std::size_t i, std::uint64_t clock) {
    if (i == jobs.size()) {
      best = std::max(best, clock);
      return;
    }
    if (clock + jobs[i].processing <= jobs[i].due) run(i + 1, clock + jobs[i].processing);
    run(i + 1, clock);
  }
};

}  // namespace

std::uint64_t brute_force(const Instance& inst) {
  if (inst.machines() != 1) throw ContractViolation("brute_force: single-machine instances only");
  if (inst.size() > kBruteForceMaxJobs) {
    throw CapacityError("brute_force: " + std::to_string(inst.size()) + " jobs exceed the limit of " +
                        std::to_string(kBruteForceMaxJobs));
  }
  const Instance sorted = edd_sort(inst);
  SubsetSearch search{sorted.jobs()};
  search.run(0, 0);
  return search.best;
}

Schedule reconstruct_code(const SolveResult& res, const Instance& inst, std::uint64_t code) {
  if (res.machines != inst.machines() || res.universe != inst.universe_bound()) {
    throw ContractViolation("reconstruct: result does not belong to this instance");
  }
  if (!res.contains(code)) {
    throw NotAchievableError("reconstruct: total is not achievable");
  }
  std::vector<const Job*> by_id(inst.size(), nullptr);
  for (const Job& j : inst.jobs()) {
    if (j.id >= by_id.size()) throw ContractViolation("reconstruct: job ids must be 0..n-1");
    by_id[j.id] = &j;
  }

  std::vector<std::pair<std::size_t, unsigned>> picks;
  std::uint64_t stride_base = 1;
  std::vector<std::uint64_t> stride(res.machines);
  for (unsigned i = 0; i < res.machines; ++i) {
    stride[i] = stride_base;
    stride_base *= res.universe;
  }
  std::uint32_t previous_step = SolveResult::kNoStep;
  while (code != 0) {
    const auto origin = res.origin(code);
    if (!origin || (previous_step != SolveResult::kNoStep && origin->step >= previous_step)) {
      throw std::logic_error("reconstruct: provenance chain is broken");
    }
    const Job& job = *by_id.at(res.step_jobs.at(origin->step));
    picks.emplace_back(job.id, origin->machine);
    code -= job.processing * stride[origin->machine];
    previous_step = origin->step;
  }
  for (const Job& j : inst.jobs()) {
    if (j.processing == 0) picks.emplace_back(j.id, 0);
  }
  return build_schedule(inst, picks);
}

Schedule reconstruct(const SolveResult& res, const Instance& inst, std::uint64_t target) {
  if (res.machines != 1) throw ContractViolation("reconstruct: single-machine results only");
  if (target >= res.universe) throw NotAchievableError("reconstruct: total exceeds P");
  return reconstruct_code(res, inst, target);
}

}  // namespace tardy
