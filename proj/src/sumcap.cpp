// Copyright 2026 The tardy Authors
// SPDX-License-Identifier: Apache-2.0

#include "tardy/sumcap.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "tardy/errors.hpp"

namespace tardy {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ContractViolation(what);
}

std::uint64_t low_mask(std::uint64_t count) {
  return count >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << count) - 1);
}

}  // namespace

std::uint64_t checked_universe(std::uint64_t u, unsigned m, std::uint64_t limit) {
  require(u >= 1, "sumcap: universe bound must be positive");
  require(m >= 1, "sumcap: machine count must be positive");
  std::uint64_t total = 1;
  for (unsigned i = 0; i < m; ++i) {
    if (total > limit / u) {
      throw CapacityError("universe " + std::to_string(u) + "^" + std::to_string(m) +
                          " exceeds the limit of " + std::to_string(limit) + " bits");
    }
    total *= u;
  }
  if (total > limit) {
    throw CapacityError("universe of " + std::to_string(total) + " bits exceeds the limit of " +
                        std::to_string(limit) + " bits");
  }
  return total;
}

SumCapSet::SumCapSet(std::uint64_t u, unsigned m, SumCapOptions options)
    : u_(u),
      m_(m),
      length_(checked_universe(u, m, options.universe_limit)),
      indicator_(BitRope::zeros(length_, options.params)) {
  stride_.resize(m + 1);
  stride_[0] = 1;
  for (unsigned i = 1; i <= m; ++i) stride_[i] = stride_[i - 1] * u;
}

SumCapSet SumCapSet::init(std::span<const Point> members, std::uint64_t u, unsigned m,
                          SumCapOptions options) {
  SumCapSet set(u, m, std::move(options));
  std::vector<std::uint64_t> codes;
  codes.reserve(members.size());
  for (const Point& s : members) {
    codes.push_back(set.flatten(s));
    for (auto c : s) set.coord_bound_ = std::max(set.coord_bound_, c);
  }
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  set.indicator_.set_ones(codes);
  return set;
}

SumCapSet SumCapSet::init_scalar(std::span<const std::uint64_t> members, std::uint64_t u,
                                 SumCapOptions options) {
  std::vector<Point> points;
  points.reserve(members.size());
  for (auto s : members) points.push_back({s});
  return init(points, u, 1, std::move(options));
}

std::uint64_t SumCapSet::flatten(std::span<const std::uint64_t> coords) const {
  require(coords.size() == m_, "sumcap: point has " + std::to_string(coords.size()) +
                                   " coordinates, expected " + std::to_string(m_));
  std::uint64_t code = 0;
  for (unsigned i = 0; i < m_; ++i) {
    require(coords[i] < u_, "sumcap: coordinate " + std::to_string(coords[i]) +
                                " outside [0, " + std::to_string(u_) + ")");
    code += coords[i] * stride_[i];
  }
  return code;
}

Point SumCapSet::unflatten(std::uint64_t code) const {
  require(code < length_, "sumcap: code outside the universe");
  Point p(m_);
  for (unsigned i = 0; i < m_; ++i) {
    p[i] = code % u_;
    code /= u_;
  }
  return p;
}

void SumCapSet::require_single(const char* op) const {
  require(m_ == 1, std::string("sumcap: ") + op + " requires a single-machine set");
}

bool SumCapSet::contains(std::uint64_t s) const {
  require_single("scalar contains");
  require(s < u_, "sumcap: element outside the universe");
  return indicator_.get_bit(s);
}

bool SumCapSet::contains(std::span<const std::uint64_t> coords) const {
  return indicator_.get_bit(flatten(coords));
}

bool SumCapSet::contains_code(std::uint64_t code) const {
  require(code < length_, "sumcap: code outside the universe");
  return indicator_.get_bit(code);
}

std::vector<std::uint64_t> SumCapSet::member_codes() const {
  return indicator_.ones_in_range(0, length_);
}

void SumCapSet::check_no_overflow(std::uint64_t p) const {
  if (coord_bound_ + p < u_) return;
  // Members with coordinate i in [u-p, u) occupy one range per value of the
  // higher coordinates.
  for (unsigned i = 0; i < m_; ++i) {
    const std::uint64_t block = stride_[i + 1];
    const std::uint64_t first = (u_ - p) * stride_[i];
    for (std::uint64_t start = 0; start < length_; start += block) {
      if (indicator_.count_ones(start + first, start + block) != 0) {
        throw InvalidStateError("sumcap: adding " + std::to_string(p) + " to coordinate " +
                                std::to_string(i) + " would leave the universe [0, " +
                                std::to_string(u_) + ")");
      }
    }
  }
}

// Compares the indicator x with x shifted right by `shift` (zeros shifted in)
// and records every differing position. Positions where only the shifted copy
// has a one are insertions. Runs of agreement are skipped with LCE queries,
// so the cost is proportional to the number of differences.
template <class OnInsert>
void SumCapSet::scan_shift(std::uint64_t shift, std::uint64_t& differences,
                           OnInsert&& on_insert) const {
  const std::uint64_t total = length_;
  auto shifted_word = [&](std::uint64_t pos) -> std::uint64_t {
    if (pos >= shift) return indicator_.extract_word(pos - shift);
    const std::uint64_t gap = shift - pos;
    if (gap >= 64) return 0;
    return indicator_.extract_word(0) << gap;
  };

  std::uint64_t pos = 0;
  while (pos < total) {
    const std::uint64_t span = std::min<std::uint64_t>(64, total - pos);
    const std::uint64_t mask = low_mask(span);
    const std::uint64_t current = indicator_.extract_word(pos) & mask;
    const std::uint64_t shifted = shifted_word(pos) & mask;
    const std::uint64_t diff = current ^ shifted;
    if (diff != 0) {
      differences += static_cast<std::uint64_t>(std::popcount(diff));
      std::uint64_t fresh = diff & shifted;
      while (fresh != 0) {
        on_insert(pos + static_cast<std::uint64_t>(std::countr_zero(fresh)));
        fresh &= fresh - 1;
      }
      pos += span;
      continue;
    }
    pos += span;
    if (pos >= total) break;
    if (pos < shift) {
      // The shifted copy is all zero below `shift`.
      const auto next = indicator_.next_one(pos);
      pos = (next && *next < shift) ? *next : shift;
    } else {
      // Both copies are zero up to their next ones; skip that stretch
      // before paying for an LCE query.
      const auto a = indicator_.next_one(pos);
      const auto b = indicator_.next_one(pos - shift);
      const std::uint64_t zeros =
          std::min(a ? *a - pos : total - pos, b ? *b - (pos - shift) : total - pos);
      pos += zeros;
      if (zeros < 64 && pos < total) pos += BitRope::lce(indicator_, indicator_, pos, pos - shift);
    }
  }
}

DiffReport SumCapSet::sum_shift(std::uint64_t p) {
  require_single("sum_shift");
  require(p >= 1 && p < u_, "sumcap: shift " + std::to_string(p) + " outside [1, " +
                                std::to_string(u_) + ")");
  check_no_overflow(p);
  DiffReport report;
  scan_shift(p, report.differences, [&](std::uint64_t pos) { report.inserted.push_back(pos); });
  report.via_machine.assign(report.inserted.size(), 0);
  indicator_.set_ones(report.inserted);
  coord_bound_ = std::min(coord_bound_ + p, u_ - 1);
  return report;
}

void SumCapSet::cap(std::uint64_t d) {
  require_single("cap");
  require(d < u_, "sumcap: cap bound outside the universe");
  if (d >= coord_bound_) return;
  indicator_.clear_range(d + 1, u_);
  coord_bound_ = d;
}

DiffReport SumCapSet::sum_unit_shifts(std::uint64_t p) {
  require(p >= 1 && p < u_, "sumcap: shift " + std::to_string(p) + " outside [1, " +
                                std::to_string(u_) + ")");
  check_no_overflow(p);
  DiffReport report;
  std::vector<std::pair<std::uint64_t, unsigned>> found;
  for (unsigned i = 0; i < m_; ++i) {
    const std::size_t before = found.size();
    scan_shift(p * stride_[i], report.differences,
               [&](std::uint64_t pos) { found.emplace_back(pos, i); });
    std::inplace_merge(found.begin(), found.begin() + static_cast<std::ptrdiff_t>(before),
                       found.end());
  }
  for (const auto& [pos, machine] : found) {
    if (!report.inserted.empty() && report.inserted.back() == pos) continue;
    report.inserted.push_back(pos);
    report.via_machine.push_back(machine);
  }
  indicator_.set_ones(report.inserted);
  coord_bound_ = std::min(coord_bound_ + p, u_ - 1);
  return report;
}

void SumCapSet::cap_all_coords(std::uint64_t d) {
  require(d < u_, "sumcap: cap bound outside the universe");
  if (d >= coord_bound_) return;
  // Walk the length-u stripes of fixed (s_1, ..., s_{m-1}) in order, zeroing
  // the whole stripe if a fixed coordinate exceeds d and its tail past d
  // otherwise. Adjacent ranges are coalesced before splicing.
  std::vector<std::uint64_t> digits(m_ > 1 ? m_ - 1 : 0, 0);
  std::uint64_t pending_lo = 0;
  std::uint64_t pending_hi = 0;
  auto flush = [&] {
    if (pending_lo < pending_hi) indicator_.clear_range(pending_lo, pending_hi);
  };
  for (std::uint64_t start = 0; start < length_; start += u_) {
    const std::uint64_t top = digits.empty() ? 0 : *std::max_element(digits.begin(), digits.end());
    const std::uint64_t lo = top > d ? start : start + d + 1;
    const std::uint64_t hi = start + u_;
    if (lo < hi) {
      if (lo == pending_hi) {
        pending_hi = hi;
      } else {
        flush();
        pending_lo = lo;
        pending_hi = hi;
      }
    }
    for (auto& digit : digits) {
      if (++digit < u_) break;
      digit = 0;
    }
  }
  flush();
  coord_bound_ = d;
}

std::optional<std::uint64_t> SumCapSet::max_total() const {
  if (m_ == 1) return indicator_.select_last_one();
  std::optional<std::uint64_t> best;
  indicator_.for_each_one(0, length_, [&](std::uint64_t code) {
    std::uint64_t sum = 0;
    for (unsigned i = 0; i < m_; ++i) {
      sum += code % u_;
      code /= u_;
    }
    if (!best || sum > *best) best = sum;
  });
  return best;
}

void SumCapSet::flip_for_testing(std::uint64_t code) {
  require(code < length_, "sumcap: code outside the universe");
  indicator_.set_bit(code, !indicator_.get_bit(code));
  coord_bound_ = u_ - 1;
}

}  // namespace tardy
