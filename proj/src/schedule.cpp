// Copyright 2026 The tardy Authors
// SPDX-License-Identifier: Apache-2.0

#include "tardy/schedule.hpp"

#include <algorithm>
#include <unordered_map>

#include "tardy/errors.hpp"

namespace tardy {

namespace {

std::unordered_map<std::size_t, const Job*> index_by_id(const Instance& inst) {
  std::unordered_map<std::size_t, const Job*> by_id;
  by_id.reserve(inst.size());
  for (const Job& j : inst.jobs()) by_id.emplace(j.id, &j);
  return by_id;
}

}  // namespace

Schedule build_schedule(const Instance& inst,
                        const std::vector<std::pair<std::size_t, unsigned>>& picks) {
  const auto by_id = index_by_id(inst);
  std::vector<std::vector<const Job*>> per_machine(inst.machines());
  for (const auto& [id, machine] : picks) {
    const auto it = by_id.find(id);
    if (it == by_id.end()) throw ContractViolation("schedule: unknown job id " + std::to_string(id));
    if (machine >= inst.machines()) throw ContractViolation("schedule: machine index out of range");
    per_machine[machine].push_back(it->second);
  }
  Schedule s;
  for (unsigned m = 0; m < per_machine.size(); ++m) {
    auto& jobs = per_machine[m];
    std::sort(jobs.begin(), jobs.end(), [](const Job* a, const Job* b) {
      return a->due != b->due ? a->due < b->due : a->id < b->id;
    });
    std::uint64_t clock = 0;
    for (const Job* j : jobs) {
      clock += j->processing;
      s.entries.push_back({j->id, m, clock});
      s.total += j->processing;
    }
  }
  s.tardy_cost = inst.total_processing() - s.total;
  return s;
}

std::optional<std::string> validate_schedule(const Schedule& schedule, const Instance& inst) {
  const auto by_id = index_by_id(inst);
  std::unordered_map<std::size_t, bool> seen;
  std::vector<std::uint64_t> clock(inst.machines(), 0);
  std::vector<const Job*> last(inst.machines(), nullptr);
  std::uint64_t total = 0;
  for (const ScheduleEntry& e : schedule.entries) {
    const auto it = by_id.find(e.job_id);
    if (it == by_id.end()) return "unknown job id " + std::to_string(e.job_id);
    if (!seen.emplace(e.job_id, true).second) return "job " + std::to_string(e.job_id) + " scheduled twice";
    if (e.machine >= inst.machines()) return "job " + std::to_string(e.job_id) + " on machine out of range";
    const Job& job = *it->second;
    if (last[e.machine] != nullptr && last[e.machine]->due > job.due) {
      return "job " + std::to_string(e.job_id) + " breaks due-date order on machine " +
             std::to_string(e.machine);
    }
    clock[e.machine] += job.processing;
    if (e.completion != clock[e.machine]) {
      return "job " + std::to_string(e.job_id) + " has completion " + std::to_string(e.completion) +
             ", expected " + std::to_string(clock[e.machine]);
    }
    if (e.completion > job.due) {
      return "job " + std::to_string(e.job_id) + " completes at " + std::to_string(e.completion) +
             " after its due date " + std::to_string(job.due);
    }
    last[e.machine] = &job;
    total += job.processing;
  }
  if (total != schedule.total) return "total " + std::to_string(schedule.total) + " != " + std::to_string(total);
  if (schedule.total + schedule.tardy_cost != inst.total_processing()) {
    return "total + tardy cost != total processing time";
  }
  return std::nullopt;
}

std::vector<std::uint64_t> machine_loads(const Schedule& schedule, const Instance& inst) {
  const auto by_id = index_by_id(inst);
  std::vector<std::uint64_t> loads(inst.machines(), 0);
  for (const ScheduleEntry& e : schedule.entries) loads.at(e.machine) += by_id.at(e.job_id)->processing;
  return loads;
}

}  // namespace tardy
