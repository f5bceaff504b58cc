// Copyright 2026 The tardy Authors
// SPDX-License-Identifier: Apache-2.0

#include "tardy/generator.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "tardy/errors.hpp"

namespace tardy {

namespace {

std::uint64_t uniform(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

std::vector<std::uint64_t> due_dates(const std::vector<std::uint64_t>& p, DeadlineModel model,
                                     std::mt19937_64& rng) {
  const std::uint64_t total = std::accumulate(p.begin(), p.end(), std::uint64_t{0});
  std::vector<std::uint64_t> d(p.size());
  switch (model) {
    case DeadlineModel::kUniform:
      for (auto& v : d) v = uniform(rng, 1, std::max<std::uint64_t>(total, 1));
      break;
    case DeadlineModel::kSubsetSum:
      std::fill(d.begin(), d.end(), std::max<std::uint64_t>((total + 1) / 2, 1));
      break;
    case DeadlineModel::kTight: {
      std::vector<std::size_t> order(p.size());
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::shuffle(order.begin(), order.end(), rng);
      std::uint64_t clock = 0;
      for (std::size_t j : order) {
        clock += p[j];
        const std::uint64_t lo = clock > p[j] ? clock - p[j] : 1;
        d[j] = std::max<std::uint64_t>(uniform(rng, lo, clock), 1);
      }
      break;
    }
  }
  return d;
}

Instance assemble(const std::vector<std::uint64_t>& p, DeadlineModel model, std::mt19937_64& rng,
                  unsigned machines) {
  const std::vector<std::uint64_t> d = due_dates(p, model, rng);
  Instance inst(machines);
  for (std::size_t j = 0; j < p.size(); ++j) inst.add_job(p[j], d[j]);
  return inst;
}

}  // namespace

std::optional<DeadlineModel> parse_deadline_model(std::string_view name) {
  if (name == "uniform") return DeadlineModel::kUniform;
  if (name == "tight") return DeadlineModel::kTight;
  if (name == "subset-sum") return DeadlineModel::kSubsetSum;
  return std::nullopt;
}

std::string_view deadline_model_name(DeadlineModel model) {
  switch (model) {
    case DeadlineModel::kUniform:
      return "uniform";
    case DeadlineModel::kTight:
      return "tight";
    case DeadlineModel::kSubsetSum:
      return "subset-sum";
  }
  return "uniform";
}

Instance generate_instance(std::size_t n, std::uint64_t pmax, DeadlineModel model, std::uint64_t seed,
                           unsigned machines) {
  if (pmax == 0) throw ContractViolation("generate_instance: pmax must be positive");
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> p(n);
  for (auto& v : p) v = uniform(rng, 1, pmax);
  return assemble(p, model, rng, machines);
}

Instance generate_with_total(std::uint64_t total, std::size_t n, DeadlineModel model, std::uint64_t seed,
                             unsigned machines) {
  if (n == 0 || n > total) throw ContractViolation("generate_with_total: requires 1 <= n <= total");
  std::mt19937_64 rng(seed);
  // Cut [0, total - n] at n - 1 random points; part sizes + 1 sum to total.
  std::vector<std::uint64_t> cuts(n - 1);
  for (auto& c : cuts) c = uniform(rng, 0, total - n);
  std::sort(cuts.begin(), cuts.end());
  std::vector<std::uint64_t> p(n);
  std::uint64_t prev = 0;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    p[j] = cuts[j] - prev + 1;
    prev = cuts[j];
  }
  p[n - 1] = total - n - prev + 1;
  return assemble(p, model, rng, machines);
}

}  // namespace tardy
