// Copyright 2026 The tardy Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tardy/instance.hpp"

namespace tardy {

struct ScheduleEntry {
  std::size_t job_id = 0;
  unsigned machine = 0;
  std::uint64_t completion = 0;

  friend bool operator==(const ScheduleEntry&, const ScheduleEntry&) = default;
};

/// Early jobs grouped by machine, each machine's jobs in EDD order. Jobs not
/// listed are tardy.
struct Schedule {
  std::vector<ScheduleEntry> entries;
  std::uint64_t total = 0;
  std::uint64_t tardy_cost = 0;
};

/// Lays out the given jobs (ids into `inst`) with their machines in EDD
/// order and fills completion times and totals. Does not check feasibility.
Schedule build_schedule(const Instance& inst, const std::vector<std::pair<std::size_t, unsigned>>& picks);

/// Returns a description of the first violated invariant, or nullopt if the
/// schedule is valid for `inst`: known distinct job ids, machines in range,
/// EDD order and back-to-back completion times per machine, every job early,
/// and total + tardy_cost = P.
std::optional<std::string> validate_schedule(const Schedule& schedule, const Instance& inst);

/// Per-machine processing totals of the scheduled jobs.
std::vector<std::uint64_t> machine_loads(const Schedule& schedule, const Instance& inst);

}  // namespace tardy
