// Copyright 2026 The tardy Authors
// SPDX-License-Identifier: Apache-2.0

// Shared helpers for the test binaries: seeded generators and naive oracles.

#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tardy/fingerprint.hpp"
#include "tardy/instance.hpp"

namespace tardy::testing {

inline FingerprintParamsPtr fixed_params(std::uint64_t seed = 12345, std::size_t k = 2, bool verify = false) {
  return FingerprintParams::create(k, seed, verify);
}

inline std::uint64_t pick(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

inline std::vector<std::uint8_t> random_bits(std::mt19937_64& rng, std::size_t n, unsigned one_per_mille = 500) {
  std::vector<std::uint8_t> bits(n);
  for (auto& b : bits) b = pick(rng, 0, 999) < one_per_mille ? 1 : 0;
  return bits;
}

inline std::string bits_to_string(const std::vector<std::uint8_t>& bits) {
  std::string s;
  for (auto b : bits) s.push_back(b ? '1' : '0');
  return s;
}

inline std::uint64_t naive_lce(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b,
                               std::uint64_t i, std::uint64_t j) {
  std::uint64_t l = 0;
  while (i + l < a.size() && j + l < b.size() && a[i + l] == b[j + l]) ++l;
  return l;
}

/// Random single-machine instance with p in [1, pmax] and due dates from one
/// of three shapes picked by `shape` (0 uniform, 1 tight, 2 common).
inline Instance random_instance(std::mt19937_64& rng, std::size_t n, std::uint64_t pmax, int shape,
                                unsigned machines = 1) {
  std::vector<std::uint64_t> p(n);
  std::uint64_t total = 0;
  for (auto& v : p) {
    v = pick(rng, 1, pmax);
    total += v;
  }
  Instance inst(machines);
  std::uint64_t common = pick(rng, 1, std::max<std::uint64_t>(total, 1));
  std::uint64_t clock = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::uint64_t d = 1;
    if (shape == 0) {
      d = pick(rng, 1, std::max<std::uint64_t>(total, 1));
    } else if (shape == 1) {
      clock += p[j];
      d = std::max<std::uint64_t>(1, pick(rng, clock > p[j] ? clock - p[j] : 1, clock));
    } else {
      d = common;
    }
    inst.add_job(p[j], d);
  }
  return inst;
}

/// Every achievable total by subset enumeration with the EDD feasibility test.
inline std::set<std::uint64_t> subset_totals(const Instance& inst) {
  std::vector<Job> jobs = inst.jobs();
  std::stable_sort(jobs.begin(), jobs.end(), [](const Job& a, const Job& b) { return a.due < b.due; });
  std::set<std::uint64_t> out;
  const std::size_t n = jobs.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::uint64_t clock = 0;
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) {
      if (mask >> j & 1) {
        clock += jobs[j].processing;
        ok = clock <= jobs[j].due;
      }
    }
    if (ok) out.insert(clock);
  }
  return out;
}

}  // namespace tardy::testing
