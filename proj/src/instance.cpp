// Copyright 2026 The tardy Authors
// SPDX-License-Identifier: Apache-2.0

#include "tardy/instance.hpp"

#include <algorithm>
#include <limits>

#include "tardy/errors.hpp"

namespace tardy {

Instance::Instance(unsigned machines) : machines_(machines) {
  if (machines == 0) throw ContractViolation("instance: machine count must be at least 1");
}

void Instance::add_job(std::uint64_t processing, std::uint64_t due) {
  if (processing > std::numeric_limits<std::uint64_t>::max() - 1 - total_) {
    throw ContractViolation("instance: total processing time overflows 64 bits");
  }
  jobs_.push_back(Job{processing, due, jobs_.size()});
  total_ += processing;
}

void Instance::sort_by_due_date() {
  std::stable_sort(jobs_.begin(), jobs_.end(), [](const Job& a, const Job& b) {
    return a.due != b.due ? a.due < b.due : a.id < b.id;
  });
}

Instance edd_sort(Instance inst) {
  inst.sort_by_due_date();
  return inst;
}

}  // namespace tardy
