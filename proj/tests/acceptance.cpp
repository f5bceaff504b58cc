// Copyright 2026 The tardy Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance gate: one PASS/FAIL line per criterion. Thresholds and time
// budgets are fixed below; the exit status is nonzero if any line fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "support.hpp"
#include "tardy/bitrope.hpp"
#include "tardy/errors.hpp"
#include "tardy/generator.hpp"
#include "tardy/solver.hpp"
#include "tardy/solver_multi.hpp"
#include "tardy/sumcap.hpp"

using namespace tardy;
using namespace tardy::testing;

namespace {

constexpr int kAc1Instances = 1000;
constexpr double kAc1BudgetSeconds = 30;
constexpr int kAc2Instances = 200;
constexpr double kAc2BudgetSeconds = 30;
constexpr std::uint64_t kAc3MaxTotal = 1'000'000;
constexpr double kAc3BudgetSeconds = 60;
constexpr int kAc4Instances = 300;
constexpr double kAc4BudgetSeconds = 120;
constexpr int kAc5Instances = 500;
constexpr std::size_t kAc5MaxTotals = 200;
constexpr double kAc5BudgetSeconds = 60;
constexpr double kAc6MaxDoublingRatio = 3.0;
constexpr double kAc6MinSpeedup = 5.0;
constexpr int kAc6FastReps = 5;
constexpr int kAc6BaselineReps = 3;
constexpr double kAc6BudgetSeconds = 600;
constexpr int kAc7RopeOps = 10'000;
constexpr int kAc7SetOps = 1000;
constexpr double kAc7BudgetSeconds = 60;
constexpr int kAc8Instances = 100;
constexpr double kAc8BudgetSeconds = 10;

const DeadlineModel kModels[] = {DeadlineModel::kUniform, DeadlineModel::kTight, DeadlineModel::kSubsetSum};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

SolveOptions fixed_options(std::uint64_t seed) {
  SolveOptions o;
  o.params = FingerprintParams::create(2, seed);
  o.universe_limit = std::uint64_t{1} << 34;
  return o;
}

int failures = 0;

void report(const char* id, bool ok, const std::string& detail, double seconds, double budget) {
  const bool in_time = seconds <= budget;
  if (!ok || !in_time) ++failures;
  std::printf("%s %s: %s [%.2f s, budget %.0f s%s]\n", (ok && in_time) ? "PASS" : "FAIL", id, detail.c_str(),
              seconds, budget, in_time ? "" : ", over budget");
  std::fflush(stdout);
}

// Insertion counts gathered while running the first two criteria.
struct InsertionLog {
  std::uint64_t runs = 0;
  std::uint64_t violations = 0;
  void add(const SolveResult& r, std::uint64_t total) {
    ++runs;
    if (r.insertions_observed > 2 * total + 1) ++violations;
  }
};

void ac1(InsertionLog& log) {
  const auto start = Clock::now();
  std::mt19937_64 rng(101);
  int agree = 0;
  for (int t = 0; t < kAc1Instances; ++t) {
    const Instance inst = generate_instance(pick(rng, 0, 16), 8, kModels[t % 3], rng());
    const SolveResult r = solve(inst, fixed_options(t));
    log.add(r, inst.total_processing());
    if (r.opt == brute_force(inst)) ++agree;
  }
  report("AC1", agree == kAc1Instances,
         "single-machine opt equals brute force on " + std::to_string(agree) + "/" + std::to_string(kAc1Instances) +
             " instances (n<=16, p<=8, three deadline models)",
         since(start), kAc1BudgetSeconds);
}

void ac2(InsertionLog& log) {
  const auto start = Clock::now();
  std::mt19937_64 rng(102);
  int agree = 0;
  for (int t = 0; t < kAc2Instances; ++t) {
    const std::size_t n = pick(rng, 1, 100);
    const Instance inst = generate_instance(n, 2000 / n, kModels[t % 3], rng());
    const SolveResult fast = solve(inst, fixed_options(t));
    const SolveResult lm = lawler_moore(inst, fixed_options(t));
    log.add(fast, inst.total_processing());
    log.add(lm, inst.total_processing());
    if (inst.total_processing() <= 2000 && fast.totals == lm.totals) ++agree;
  }
  report("AC2", agree == kAc2Instances,
         "solve totals equal the baseline elementwise on " + std::to_string(agree) + "/" +
             std::to_string(kAc2Instances) + " instances (n<=100, P<=2000)",
         since(start), kAc2BudgetSeconds);
}

void ac3(const InsertionLog& log) {
  const auto start = Clock::now();
  std::uint64_t runs = log.runs;
  std::uint64_t violations = log.violations;
  std::string detail;
  // Tight deadlines near prefix sums, growing to P = 10^6.
  for (std::uint64_t total = 1000; total <= kAc3MaxTotal; total *= 10) {
    const Instance inst = generate_with_total(total, total / 10, DeadlineModel::kTight, total);
    const SolveResult r = solve(inst, fixed_options(total));
    ++runs;
    if (r.insertions_observed > 2 * total + 1) ++violations;
    detail += " tight P=" + std::to_string(total) + ":" + std::to_string(r.insertions_observed);
  }
  // Unit jobs with d_j = j + 1: one new total per step, reaching P exactly.
  bool tight_family = false;
  {
    Instance chain;
    for (std::uint64_t j = 0; j < kAc3MaxTotal; ++j) chain.add_job(1, j + 1);
    const SolveResult r = solve(chain, fixed_options(7));
    ++runs;
    if (r.insertions_observed > 2 * chain.total_processing() + 1) ++violations;
    tight_family = r.insertions_observed >= chain.total_processing();
    detail += " unit-chain P=" + std::to_string(chain.total_processing()) + ":" +
              std::to_string(r.insertions_observed);
  }
  report("AC3", violations == 0 && tight_family,
         "insertions <= 2P+1 on " + std::to_string(runs - violations) + "/" + std::to_string(runs) +
             " runs; family reaching >= P: " + (tight_family ? "yes" : "no") + ";" + detail,
         since(start), kAc3BudgetSeconds);
}

void ac4() {
  const auto start = Clock::now();
  std::mt19937_64 rng(104);
  int agree = 0;
  int within_bound = 0;
  for (int t = 0; t < kAc4Instances; ++t) {
    const unsigned m = t % 2 == 0 ? 2 : 3;
    const std::size_t limit = m == 2 ? 12 : 9;  // (m+1)^n <= 10^6
    const Instance inst = generate_instance(pick(rng, 0, limit), 6, kModels[t % 3], rng(), m);
    const SolveResult fast = solve_multi(inst, fixed_options(t));
    const SolveResult lm = lawler_moore_multi(inst, fixed_options(t));
    const std::uint64_t brute = brute_force_multi(inst);
    if (fast.opt == brute && lm.opt == brute) ++agree;
    const std::uint64_t bound = insertion_bound(inst.total_processing(), m);
    if (fast.insertions_observed <= bound && lm.insertions_observed <= bound) ++within_bound;
  }
  report("AC4", agree == kAc4Instances && within_bound == kAc4Instances,
         "solve_multi = lawler_moore_multi = brute_force_multi on " + std::to_string(agree) + "/" +
             std::to_string(kAc4Instances) + " instances (m in {2,3}); insertions <= (m+1)(P+1)^m on " +
             std::to_string(within_bound),
         since(start), kAc4BudgetSeconds);
}

void ac5() {
  const auto start = Clock::now();
  std::mt19937_64 rng(105);
  int instances = 0;
  std::uint64_t checked = 0;
  std::uint64_t bad = 0;
  while (instances < kAc5Instances) {
    const Instance inst = generate_instance(pick(rng, 0, 30), 10, kModels[instances % 3], rng());
    const SolveResult r = solve(inst, fixed_options(instances));
    if (r.totals.size() > kAc5MaxTotals) continue;
    ++instances;
    for (std::uint64_t s : r.totals) {
      ++checked;
      const Schedule schedule = reconstruct(r, inst, s);
      if (validate_schedule(schedule, inst).has_value() || schedule.total != s) ++bad;
    }
  }
  report("AC5", bad == 0,
         std::to_string(checked - bad) + "/" + std::to_string(checked) + " reconstructed schedules valid with exact "
             "total over " + std::to_string(instances) + " instances",
         since(start), kAc5BudgetSeconds);
}

double median_seconds(const std::function<void()>& run, int reps) {
  std::vector<double> times;
  for (int i = 0; i < reps; ++i) {
    const auto start = Clock::now();
    run();
    times.push_back(since(start));
  }
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

void ac6() {
  const auto start = Clock::now();
  const std::uint64_t sizes[] = {100'000, 200'000, 400'000, 800'000};
  std::vector<double> times;
  for (std::uint64_t total : sizes) {
    const Instance inst = generate_with_total(total, total / 10, DeadlineModel::kUniform, 6);
    times.push_back(median_seconds([&] { solve(inst, fixed_options(6)); }, kAc6FastReps));
  }
  bool ratios_ok = true;
  std::string detail = "doubling ratios";
  for (std::size_t i = 1; i < times.size(); ++i) {
    const double ratio = times[i] / times[i - 1];
    ratios_ok = ratios_ok && ratio <= kAc6MaxDoublingRatio;
    char buf[64];
    std::snprintf(buf, sizeof buf, " %.2f", ratio);
    detail += buf;
  }
  const Instance wide = generate_with_total(2'000'000, 2000, DeadlineModel::kUniform, 66);
  SolveResult fast_result;
  SolveResult lm_result;
  const double fast = median_seconds([&] { fast_result = solve(wide, fixed_options(66)); }, kAc6FastReps);
  const double lm = median_seconds([&] { lm_result = lawler_moore(wide, fixed_options(66)); }, kAc6BaselineReps);
  const double speedup = lm / fast;
  const bool same = fast_result.totals == lm_result.totals;
  char buf[160];
  std::snprintf(buf, sizeof buf, " (max %.1f); n=2000 P=2e6: fast %.3f s, baseline %.3f s, speedup %.1fx (min %.0fx)",
                kAc6MaxDoublingRatio, fast, lm, speedup, kAc6MinSpeedup);
  detail += buf;
  if (!same) detail += "; totals differ";
  report("AC6", ratios_ok && speedup >= kAc6MinSpeedup && same, detail, since(start), kAc6BudgetSeconds);
}

std::uint64_t rope_fuzz(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto params = FingerprintParams::create(2, seed);
  std::uint64_t mismatches = 0;
  std::vector<std::uint8_t> mirror = random_bits(rng, 2048);
  BitRope x = BitRope::from_bits(mirror, params);
  for (int op = 0; op < kAc7RopeOps; ++op) {
    switch (pick(rng, 0, 6)) {
      case 0: {
        const auto extra = random_bits(rng, pick(rng, 1, 300), static_cast<unsigned>(pick(rng, 0, 1000)));
        mirror.insert(mirror.end(), extra.begin(), extra.end());
        x = BitRope::concat(std::move(x), BitRope::from_bits(extra, params));
        break;
      }
      case 1: {
        if (mirror.size() < 4096) break;
        const std::uint64_t i = pick(rng, 0, mirror.size() - 1);
        auto [l, r] = BitRope::split(std::move(x), i);
        mirror.resize(i + 1);
        x = std::move(l);
        break;
      }
      case 2: {
        const std::uint64_t i = pick(rng, 0, mirror.size() - 1);
        const bool v = pick(rng, 0, 1) == 1;
        mirror[i] = v;
        x.set_bit(i, v);
        break;
      }
      case 3: {
        const std::uint64_t i = pick(rng, 0, mirror.size());
        const std::uint64_t j = pick(rng, 0, 3) == 0 ? i : pick(rng, 0, mirror.size());
        if (BitRope::lce(x, x, i, j) != naive_lce(mirror, mirror, i, j)) ++mismatches;
        break;
      }
      case 4: {
        std::optional<std::uint64_t> last;
        for (std::size_t i = mirror.size(); i-- > 0;) {
          if (mirror[i]) {
            last = i;
            break;
          }
        }
        if (x.select_last_one() != last) ++mismatches;
        break;
      }
      case 5: {
        std::uint64_t lo = pick(rng, 0, mirror.size());
        std::uint64_t hi = pick(rng, 0, mirror.size());
        if (lo > hi) std::swap(lo, hi);
        std::vector<std::uint64_t> expected;
        for (std::uint64_t i = lo; i < hi; ++i) {
          if (mirror[i]) expected.push_back(i);
        }
        if (x.ones_in_range(lo, hi) != expected) ++mismatches;
        break;
      }
      default: {
        const std::uint64_t i = pick(rng, 0, mirror.size() - 1);
        if (x.get_bit(i) != (mirror[i] != 0)) ++mismatches;
      }
    }
    if (x.size() != mirror.size()) ++mismatches;
  }
  x.audit();
  return mismatches;
}

std::uint64_t set_fuzz(unsigned m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto params = FingerprintParams::create(2, seed);
  std::uint64_t mismatches = 0;
  int ops = 0;
  while (ops < kAc7SetOps) {
    const std::uint64_t u = m == 3 ? pick(rng, 2, 16) : pick(rng, 2, 64);
    std::set<Point> ref;
    std::vector<Point> members;
    for (std::size_t k = pick(rng, 1, 3); k > 0; --k) {
      Point s(m);
      for (auto& c : s) c = pick(rng, 0, u / 4);
      members.push_back(s);
      ref.insert(s);
    }
    SumCapSet set = SumCapSet::init(members, u, m, {kDefaultUniverseLimit, params});
    ++ops;
    for (int step = 0; step < 30 && ops < kAc7SetOps; ++step, ++ops) {
      const auto kind = pick(rng, 0, 2);
      if (kind == 0) {
        std::uint64_t top = 0;
        for (const Point& s : ref) top = std::max(top, *std::max_element(s.begin(), s.end()));
        if (top + 1 >= u) continue;
        const std::uint64_t p = pick(rng, 1, u - 1 - top);
        std::set<Point> added;
        for (const Point& s : ref) {
          for (unsigned i = 0; i < m; ++i) {
            Point t = s;
            t[i] += p;
            if (!ref.count(t)) added.insert(t);
          }
        }
        const DiffReport r = m == 1 ? set.sum_shift(p) : set.sum_unit_shifts(p);
        std::vector<std::uint64_t> expected;
        for (const Point& s : added) expected.push_back(set.flatten(s));
        std::sort(expected.begin(), expected.end());
        if (r.inserted != expected) ++mismatches;
        ref.insert(added.begin(), added.end());
      } else if (kind == 1) {
        const std::uint64_t d = pick(rng, 0, u - 1);
        if (m == 1) {
          set.cap(d);
        } else {
          set.cap_all_coords(d);
        }
        for (auto it = ref.begin(); it != ref.end();) {
          it = *std::max_element(it->begin(), it->end()) > d ? ref.erase(it) : std::next(it);
        }
      } else {
        Point probe(m);
        for (auto& c : probe) c = pick(rng, 0, u - 1);
        if (set.contains(probe) != (ref.count(probe) == 1)) ++mismatches;
      }
      std::vector<std::uint64_t> expected;
      for (const Point& s : ref) expected.push_back(set.flatten(s));
      std::sort(expected.begin(), expected.end());
      if (set.member_codes() != expected) ++mismatches;
    }
  }
  return mismatches;
}

void ac7() {
  const auto start = Clock::now();
  const std::uint64_t rope = rope_fuzz(107);
  std::uint64_t sets = 0;
  for (unsigned m : {1u, 2u, 3u}) sets += set_fuzz(m, 170 + m);
  report("AC7", rope == 0 && sets == 0,
         "rope mirror fuzz (" + std::to_string(kAc7RopeOps) + " ops): " + std::to_string(rope) +
             " mismatches; sum-cap reference fuzz (" + std::to_string(kAc7SetOps) + " ops each, m=1,2,3): " +
             std::to_string(sets) + " mismatches; k=2 fingerprints",
         since(start), kAc7BudgetSeconds);
}

void ac8() {
  const auto start = Clock::now();
  std::mt19937_64 rng(108);
  int agree = 0;
  for (int t = 0; t < kAc8Instances; ++t) {
    const std::size_t n = pick(rng, 1, 60);
    std::vector<std::uint64_t> p(n);
    std::uint64_t total = 0;
    for (auto& v : p) total += (v = pick(rng, 1, 100));
    Instance inst;
    for (auto v : p) inst.add_job(v, total);
    std::vector<std::uint8_t> reach(total + 1, 0);
    reach[0] = 1;
    for (auto v : p) {
      for (std::uint64_t s = total; s >= v; --s) reach[s] |= reach[s - v];
    }
    std::vector<std::uint64_t> expected;
    for (std::uint64_t s = 0; s <= total; ++s) {
      if (reach[s]) expected.push_back(s);
    }
    if (solve(inst, fixed_options(t)).totals == expected) ++agree;
  }
  report("AC8", agree == kAc8Instances,
         "common due date P: totals equal the subset-sum table on " + std::to_string(agree) + "/" +
             std::to_string(kAc8Instances) + " instances",
         since(start), kAc8BudgetSeconds);
}

}  // namespace

int main() {
  InsertionLog log;
  ac1(log);
  ac2(log);
  ac3(log);
  ac4();
  ac5();
  ac6();
  ac7();
  ac8();
  std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
