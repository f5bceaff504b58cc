// Copyright 2026 The tardy Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace tardy {

struct Job {
  std::uint64_t processing = 0;
  std::uint64_t due = 0;
  /// Position of the job in the input.
  std::size_t id = 0;

  friend bool operator==(const Job&, const Job&) = default;
};

/// Jobs for m identical machines plus their total processing time P.
class Instance {
 public:
  explicit Instance(unsigned machines = 1);

  /// Appends a job with id = current job count. Throws ContractViolation if
  /// the total processing time would overflow 64 bits.
  void add_job(std::uint64_t processing, std::uint64_t due);

  const std::vector<Job>& jobs() const { return jobs_; }
  std::size_t size() const { return jobs_.size(); }
  unsigned machines() const { return machines_; }
  /// P, the sum of all processing times.
  std::uint64_t total_processing() const { return total_; }
  /// u = P + 1.
  std::uint64_t universe_bound() const { return total_ + 1; }

  /// Reorders jobs by (due date, id). Ids are kept.
  void sort_by_due_date();

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  unsigned machines_;
  std::vector<Job> jobs_;
  std::uint64_t total_ = 0;
};

/// Earliest-due-date order, ties broken by input position.
Instance edd_sort(Instance inst);

}  // namespace tardy
