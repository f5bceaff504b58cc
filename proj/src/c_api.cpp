// Copyright 2026 The tardy Authors
// SPDX-License-Identifier: Apache-2.0

#include "tardy/tardy.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <span>
#include <string>

#include "tardy/errors.hpp"
#include "tardy/generator.hpp"
#include "tardy/instance_io.hpp"
#include "tardy/solver.hpp"
#include "tardy/solver_multi.hpp"

struct tardy_instance {
  tardy::Instance rep;
};

struct tardy_result {
  tardy::SolveResult rep;
  bool has_totals = true;
};

struct tardy_schedule {
  tardy::Schedule rep;
};

namespace {

thread_local std::string last_error;

tardy_status fail(tardy_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs `body`, mapping library exceptions to status codes.
template <class Body>
tardy_status guarded(Body&& body) {
  try {
    body();
    last_error.clear();
    return TARDY_OK;
  } catch (const tardy::IoError& e) {
    return fail(TARDY_ERR_IO, e.what());
  } catch (const tardy::ParseError& e) {
    return fail(TARDY_ERR_PARSE, e.what());
  } catch (const tardy::CapacityError& e) {
    return fail(TARDY_ERR_CAPACITY, e.what());
  } catch (const tardy::ContractViolation& e) {
    return fail(TARDY_ERR_CONTRACT, e.what());
  } catch (const tardy::InvalidStateError& e) {
    return fail(TARDY_ERR_INVALID_STATE, e.what());
  } catch (const tardy::NotAchievableError& e) {
    return fail(TARDY_ERR_NOT_ACHIEVABLE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(TARDY_ERR_CAPACITY, "out of memory");
  } catch (const std::exception& e) {
    return fail(TARDY_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(TARDY_ERR_INTERNAL, "unknown error");
  }
}

tardy_status null_argument(const char* name) {
  return fail(TARDY_ERR_CONTRACT, std::string(name) + " must not be null");
}

tardy::DeadlineModel to_model(tardy_deadline_model model) {
  switch (model) {
    case TARDY_DEADLINES_UNIFORM:
      return tardy::DeadlineModel::kUniform;
    case TARDY_DEADLINES_TIGHT:
      return tardy::DeadlineModel::kTight;
    case TARDY_DEADLINES_SUBSET_SUM:
      return tardy::DeadlineModel::kSubsetSum;
  }
  throw tardy::ContractViolation("unknown deadline model");
}

tardy::SolveOptions to_options(const tardy_solve_options* options) {
  tardy::SolveOptions out;
  if (options == nullptr) return out;
  out.universe_limit = options->universe_limit;
  out.inject_fault = options->inject_fault != 0;
  const bool default_params = options->fingerprints == 2 && options->use_fingerprint_seed == 0 &&
                              options->verify_lce == 0;
  if (!default_params) {
    const std::uint64_t seed =
        options->use_fingerprint_seed != 0 ? options->fingerprint_seed : out.params->seed();
    out.params = tardy::FingerprintParams::create(options->fingerprints, seed, options->verify_lce != 0);
  }
  return out;
}

template <class Make>
tardy_status make_instance(tardy_instance** out, Make&& make) {
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] { *out = new tardy_instance{make()}; });
}

}  // namespace

extern "C" {

const char* tardy_version(void) { return "1.0.0"; }

const char* tardy_status_name(tardy_status status) {
  switch (status) {
    case TARDY_OK:
      return "ok";
    case TARDY_ERR_IO:
      return "io";
    case TARDY_ERR_PARSE:
      return "parse";
    case TARDY_ERR_CAPACITY:
      return "capacity";
    case TARDY_ERR_CONTRACT:
      return "contract";
    case TARDY_ERR_INVALID_STATE:
      return "invalid-state";
    case TARDY_ERR_NOT_ACHIEVABLE:
      return "not-achievable";
    case TARDY_ERR_INTERNAL:
      return "internal";
  }
  return "unknown";
}

const char* tardy_last_error(void) { return last_error.c_str(); }

void tardy_string_free(char* text) { std::free(text); }

tardy_status tardy_instance_create(uint32_t machines, tardy_instance** out) {
  return make_instance(out, [&] { return tardy::Instance(machines); });
}

tardy_status tardy_instance_parse(const char* text, size_t length, tardy_instance** out) {
  if (text == nullptr && length != 0) return null_argument("text");
  return make_instance(out, [&] { return tardy::parse_instance(std::string_view(text, length)); });
}

tardy_status tardy_instance_read_file(const char* path, tardy_instance** out) {
  if (path == nullptr) return null_argument("path");
  return make_instance(out, [&] { return tardy::read_instance_file(path); });
}

tardy_status tardy_instance_generate(size_t n, uint64_t pmax, tardy_deadline_model model, uint64_t seed,
                                     uint32_t machines, tardy_instance** out) {
  return make_instance(out, [&] { return tardy::generate_instance(n, pmax, to_model(model), seed, machines); });
}

tardy_status tardy_instance_generate_with_total(uint64_t total, size_t n, tardy_deadline_model model,
                                                uint64_t seed, uint32_t machines, tardy_instance** out) {
  return make_instance(out,
                       [&] { return tardy::generate_with_total(total, n, to_model(model), seed, machines); });
}

void tardy_instance_free(tardy_instance* inst) { delete inst; }

tardy_status tardy_instance_add_job(tardy_instance* inst, uint64_t processing, uint64_t due) {
  if (inst == nullptr) return null_argument("inst");
  return guarded([&] { inst->rep.add_job(processing, due); });
}

tardy_status tardy_instance_serialize(const tardy_instance* inst, char** out) {
  if (inst == nullptr) return null_argument("inst");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    const std::string text = tardy::serialize_instance(inst->rep);
    char* buffer = static_cast<char*>(std::malloc(text.size() + 1));
    if (buffer == nullptr) throw std::bad_alloc();
    std::memcpy(buffer, text.c_str(), text.size() + 1);
    *out = buffer;
  });
}

uint32_t tardy_instance_machines(const tardy_instance* inst) { return inst ? inst->rep.machines() : 0; }

size_t tardy_instance_job_count(const tardy_instance* inst) { return inst ? inst->rep.size() : 0; }

uint64_t tardy_instance_total_processing(const tardy_instance* inst) {
  return inst ? inst->rep.total_processing() : 0;
}

tardy_status tardy_instance_job(const tardy_instance* inst, size_t index, uint64_t* processing, uint64_t* due) {
  if (inst == nullptr) return null_argument("inst");
  if (index >= inst->rep.size()) return fail(TARDY_ERR_CONTRACT, "job index out of range");
  if (processing != nullptr) *processing = inst->rep.jobs()[index].processing;
  if (due != nullptr) *due = inst->rep.jobs()[index].due;
  return TARDY_OK;
}

void tardy_solve_options_init(tardy_solve_options* options) {
  if (options == nullptr) return;
  options->universe_limit = tardy::kDefaultUniverseLimit;
  options->fingerprints = 2;
  options->use_fingerprint_seed = 0;
  options->fingerprint_seed = 0;
  options->verify_lce = 0;
  options->inject_fault = 0;
}

tardy_status tardy_solve(const tardy_instance* inst, tardy_algorithm algorithm,
                         const tardy_solve_options* options, tardy_result** out) {
  if (inst == nullptr) return null_argument("inst");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    const tardy::SolveOptions opts = to_options(options);
    const bool multi = inst->rep.machines() > 1;
    auto result = std::make_unique<tardy_result>();
    switch (algorithm) {
      case TARDY_ALGO_FAST:
        result->rep = tardy::solve_multi(inst->rep, opts);
        break;
      case TARDY_ALGO_LM:
        result->rep = tardy::lawler_moore_multi(inst->rep, opts);
        break;
      case TARDY_ALGO_BRUTE:
        result->rep.machines = inst->rep.machines();
        result->rep.universe = inst->rep.universe_bound();
        result->rep.insertion_bound = tardy::insertion_bound(inst->rep.total_processing(), inst->rep.machines());
        result->rep.opt = multi ? tardy::brute_force_multi(inst->rep) : tardy::brute_force(inst->rep);
        result->has_totals = false;
        break;
      default:
        throw tardy::ContractViolation("unknown algorithm");
    }
    *out = result.release();
  });
}

void tardy_result_free(tardy_result* result) { delete result; }

uint64_t tardy_result_opt(const tardy_result* result) { return result ? result->rep.opt : 0; }

uint32_t tardy_result_machines(const tardy_result* result) { return result ? result->rep.machines : 0; }

int tardy_result_has_totals(const tardy_result* result) { return result && result->has_totals ? 1 : 0; }

size_t tardy_result_total_count(const tardy_result* result) { return result ? result->rep.totals.size() : 0; }

const uint64_t* tardy_result_totals(const tardy_result* result) {
  return result ? result->rep.totals.data() : nullptr;
}

int tardy_result_contains(const tardy_result* result, uint64_t code) {
  return result && result->rep.contains(code) ? 1 : 0;
}

tardy_status tardy_result_point(const tardy_result* result, uint64_t code, uint64_t* loads, size_t count) {
  if (result == nullptr) return null_argument("result");
  if (loads == nullptr) return null_argument("loads");
  if (count != result->rep.machines) return fail(TARDY_ERR_CONTRACT, "loads must have one entry per machine");
  const tardy::Point p = result->rep.point(code);
  std::copy(p.begin(), p.end(), loads);
  return TARDY_OK;
}

tardy_status tardy_result_code(const tardy_result* result, const uint64_t* loads, size_t count, uint64_t* code) {
  if (result == nullptr) return null_argument("result");
  if (loads == nullptr && count != 0) return null_argument("loads");
  if (code == nullptr) return null_argument("code");
  return guarded([&] { *code = result->rep.code(std::span<const std::uint64_t>(loads, count)); });
}

uint64_t tardy_result_best_code(const tardy_result* result) { return result ? result->rep.best_code() : 0; }

uint64_t tardy_result_insertions_observed(const tardy_result* result) {
  return result ? result->rep.insertions_observed : 0;
}

uint64_t tardy_result_insertion_bound(const tardy_result* result) {
  return result ? result->rep.insertion_bound : 0;
}

void tardy_result_timings(const tardy_result* result, double* preprocess_seconds, double* main_loop_seconds,
                          double* readout_seconds) {
  const tardy::PhaseTimes t = result ? result->rep.timings : tardy::PhaseTimes{};
  if (preprocess_seconds != nullptr) *preprocess_seconds = t.preprocess_seconds;
  if (main_loop_seconds != nullptr) *main_loop_seconds = t.main_loop_seconds;
  if (readout_seconds != nullptr) *readout_seconds = t.readout_seconds;
}

tardy_status tardy_reconstruct(const tardy_result* result, const tardy_instance* inst, uint64_t code,
                               tardy_schedule** out) {
  if (result == nullptr) return null_argument("result");
  if (inst == nullptr) return null_argument("inst");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  if (!result->has_totals) return fail(TARDY_ERR_CONTRACT, "brute-force results cannot be reconstructed");
  return guarded([&] { *out = new tardy_schedule{tardy::reconstruct_code(result->rep, inst->rep, code)}; });
}

void tardy_schedule_free(tardy_schedule* schedule) { delete schedule; }

size_t tardy_schedule_entry_count(const tardy_schedule* schedule) {
  return schedule ? schedule->rep.entries.size() : 0;
}

tardy_status tardy_schedule_entry(const tardy_schedule* schedule, size_t index, size_t* job_id, uint32_t* machine,
                                  uint64_t* completion) {
  if (schedule == nullptr) return null_argument("schedule");
  if (index >= schedule->rep.entries.size()) return fail(TARDY_ERR_CONTRACT, "entry index out of range");
  const tardy::ScheduleEntry& e = schedule->rep.entries[index];
  if (job_id != nullptr) *job_id = e.job_id;
  if (machine != nullptr) *machine = e.machine;
  if (completion != nullptr) *completion = e.completion;
  return TARDY_OK;
}

uint64_t tardy_schedule_total(const tardy_schedule* schedule) { return schedule ? schedule->rep.total : 0; }

uint64_t tardy_schedule_tardy_cost(const tardy_schedule* schedule) {
  return schedule ? schedule->rep.tardy_cost : 0;
}

tardy_status tardy_schedule_validate(const tardy_schedule* schedule, const tardy_instance* inst) {
  if (schedule == nullptr) return null_argument("schedule");
  if (inst == nullptr) return null_argument("inst");
  return guarded([&] {
    if (auto problem = tardy::validate_schedule(schedule->rep, inst->rep)) throw tardy::ContractViolation(*problem);
  });
}

}  // extern "C"
