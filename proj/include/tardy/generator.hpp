// Copyright 2026 The tardy Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "tardy/instance.hpp"

namespace tardy {

enum class DeadlineModel {
  /// d uniform in [1, P].
  kUniform,
  /// d within p of the job's completion time in a random order.
  kTight,
  /// One common due date, ceil(P/2).
  kSubsetSum,
};

std::optional<DeadlineModel> parse_deadline_model(std::string_view name);
std::string_view deadline_model_name(DeadlineModel model);

/// n jobs with p uniform in [1, pmax]. Deterministic in all arguments.
Instance generate_instance(std::size_t n, std::uint64_t pmax, DeadlineModel model, std::uint64_t seed,
                           unsigned machines = 1);

/// n jobs whose processing times sum to exactly `total` (a random
/// composition). Requires 1 <= n <= total.
Instance generate_with_total(std::uint64_t total, std::size_t n, DeadlineModel model, std::uint64_t seed,
                             unsigned machines = 1);

}  // namespace tardy
