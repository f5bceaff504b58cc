// Copyright 2026 The tardy Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "tardy/instance.hpp"
#include "tardy/schedule.hpp"
#include "tardy/sumcap.hpp"

namespace tardy {

struct SolveOptions {
  /// Hard limit on (P+1)^m, the number of candidate totals.
  std::uint64_t universe_limit = kDefaultUniverseLimit;
  FingerprintParamsPtr params = FingerprintParams::process_default();
  /// Test hook for the fast solvers: toggles membership of the largest point
  /// of the universe before results are read, so the answer is wrong.
  bool inject_fault = false;
};

/// Where an achievable total first survived a step: the EDD step index and,
/// with several machines, the machine that received that step's job.
struct Origin {
  std::uint32_t step = 0;
  std::uint32_t machine = 0;
};

struct PhaseTimes {
  double preprocess_seconds = 0;
  double main_loop_seconds = 0;
  double readout_seconds = 0;
};

/// The final set S_n of achievable totals plus what is needed to rebuild a
/// schedule for any of them.
///
/// Totals are flattened codes: for one machine the code is the total itself;
/// for m machines it is sum_i s_i (P+1)^i where s_i is machine i's load.
struct SolveResult {
  unsigned machines = 1;
  /// u = P + 1.
  std::uint64_t universe = 1;
  std::uint64_t opt = 0;
  std::vector<std::uint64_t> totals;
  /// Sum over steps of the elements inserted by that step's sum.
  std::uint64_t insertions_observed = 0;
  /// 2P+1 for one machine, (m+1)(P+1)^m otherwise (saturating).
  std::uint64_t insertion_bound = 0;
  /// Job id handled at each step: positive-time jobs in EDD order.
  std::vector<std::size_t> step_jobs;
  /// One machine: first surviving step per total, kNoStep if never inserted.
  std::vector<std::uint32_t> first_step;
  /// Several machines: origin per inserted surviving point.
  std::unordered_map<std::uint64_t, Origin> origins;
  PhaseTimes timings;

  static constexpr std::uint32_t kNoStep = ~std::uint32_t{0};

  bool contains(std::uint64_t code) const;
  std::optional<Origin> origin(std::uint64_t code) const;
  Point point(std::uint64_t code) const;
  std::uint64_t code(std::span<const std::uint64_t> point) const;
  /// The member with the largest coordinate sum (smallest code on ties).
  std::uint64_t best_code() const;
};

std::uint64_t insertion_bound(std::uint64_t total_processing, unsigned machines);

/// Single machine, via the sum-cap set. Requires inst.machines() == 1.
SolveResult solve(const Instance& inst, const SolveOptions& options = {});

/// Single machine, one flat boolean array updated in O(P) per job.
SolveResult lawler_moore(const Instance& inst, const SolveOptions& options = {});

inline constexpr std::size_t kBruteForceMaxJobs = 20;

/// Exact optimum by enumerating every subset of jobs. Single machine;
/// refuses (CapacityError) more than kBruteForceMaxJobs jobs.
std::uint64_t brute_force(const Instance& inst);

/// A feasible single-machine schedule whose total is exactly `target`.
/// Throws NotAchievableError if target is not in res.totals.
Schedule reconstruct(const SolveResult& res, const Instance& inst, std::uint64_t target);

/// Trace-back for any machine count; `code` is a flattened total.
Schedule reconstruct_code(const SolveResult& res, const Instance& inst, std::uint64_t code);

}  // namespace tardy
