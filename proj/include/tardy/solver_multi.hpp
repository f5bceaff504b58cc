// Copyright 2026 The tardy Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>

#include "tardy/solver.hpp"

namespace tardy {

/// m identical machines via the generalized sum-cap set. m = 1 delegates to
/// solve().
SolveResult solve_multi(const Instance& inst, const SolveOptions& options = {});

/// m-dimensional boolean table, O(m (P+1)^m) per job.
SolveResult lawler_moore_multi(const Instance& inst, const SolveOptions& options = {});

inline constexpr std::uint64_t kBruteForceMaxAssignments = 1'000'000;

/// Exact optimum over all (m+1)^n machine-or-skip assignments; refuses
/// (CapacityError) when that count exceeds kBruteForceMaxAssignments.
std::uint64_t brute_force_multi(const Instance& inst);

/// A feasible schedule whose per-machine loads equal `loads`.
Schedule reconstruct_multi(const SolveResult& res, const Instance& inst,
                           std::span<const std::uint64_t> loads);

}  // namespace tardy
