// Copyright 2026 The tardy Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <chrono>
#include <cstddef>
#include <vector>

#include "tardy/instance.hpp"
#include "tardy/solver.hpp"

namespace tardy::detail {

/// Positive-time jobs in EDD order; these are the solver steps.
std::vector<Job> step_jobs(const Instance& inst);

/// Fills machines, universe, step_jobs and insertion_bound.
void prepare_result(SolveResult& res, const Instance& inst, const std::vector<Job>& steps);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double s = std::chrono::duration<double>(now - start_).count();
    start_ = now;
    return s;
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace tardy::detail
