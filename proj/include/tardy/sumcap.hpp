// Copyright 2026 The tardy Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tardy/bitrope.hpp"

namespace tardy {

/// A point of [u]^m, one coordinate per machine.
using Point = std::vector<std::uint64_t>;

inline constexpr std::uint64_t kDefaultUniverseLimit = std::uint64_t{1} << 31;

struct SumCapOptions {
  /// Hard limit on u^m, the indicator length in bits.
  std::uint64_t universe_limit = kDefaultUniverseLimit;
  FingerprintParamsPtr params = FingerprintParams::process_default();
};

/// Result of a sum operation.
struct DiffReport {
  /// Flattened codes of the elements of (S+T)\S, increasing.
  std::vector<std::uint64_t> inserted;
  /// For each inserted element, the lowest machine i whose shift p e_i
  /// produced it (always 0 for single-machine sums).
  std::vector<unsigned> via_machine;
  /// Number of positions at which the indicator of S differed from a shifted
  /// copy, summed over every shift. Twice the insertions for a single shift.
  std::uint64_t differences = 0;
};

/// Returns u^m, or throws CapacityError if it exceeds `limit`.
std::uint64_t checked_universe(std::uint64_t u, unsigned m, std::uint64_t limit);

/// A set S of points in [u]^m kept as a bit-indicator over the flattening
/// phi(s) = sum_i s_i u^i. Supports output-sensitive sums with
/// {0, p e_0, ..., p e_{m-1}} and truncation to the cube [0, d]^m.
///
/// Single-owner; move-only.
class SumCapSet {
 public:
  /// Empty set over [u]^m.
  SumCapSet(std::uint64_t u, unsigned m, SumCapOptions options = {});

  static SumCapSet init(std::span<const Point> members, std::uint64_t u, unsigned m,
                        SumCapOptions options = {});
  /// Single-machine init from scalar members.
  static SumCapSet init_scalar(std::span<const std::uint64_t> members, std::uint64_t u,
                               SumCapOptions options = {});

  std::uint64_t universe_bound() const { return u_; }
  unsigned machines() const { return m_; }
  /// u^m.
  std::uint64_t indicator_length() const { return length_; }
  const BitRope& indicator() const { return indicator_; }

  std::uint64_t flatten(std::span<const std::uint64_t> coords) const;
  Point unflatten(std::uint64_t code) const;

  bool contains(std::uint64_t s) const;
  bool contains(std::span<const std::uint64_t> coords) const;
  bool contains_code(std::uint64_t code) const;
  std::uint64_t size() const { return indicator_.count_ones(); }
  /// Flattened codes of all members, increasing.
  std::vector<std::uint64_t> member_codes() const;

  /// S <- S u (S + p). Single machine only; requires 1 <= p < u. Throws
  /// InvalidStateError, leaving S unchanged, if a member would reach u.
  DiffReport sum_shift(std::uint64_t p);
  /// S <- S n [0, d]. Single machine only.
  void cap(std::uint64_t d);

  /// S <- S + {0, p e_0, ..., p e_{m-1}}. Every shift is measured against the
  /// set as it was before the call; writes happen afterwards.
  DiffReport sum_unit_shifts(std::uint64_t p);
  /// S <- S n [0, d]^m.
  void cap_all_coords(std::uint64_t d);

  /// m = 1: max S. m > 1: the largest coordinate sum over members.
  std::optional<std::uint64_t> max_total() const;

  /// Toggles one indicator bit without any bookkeeping. Test hook used to
  /// check that differential harnesses notice a corrupted set.
  void flip_for_testing(std::uint64_t code);

 private:
  void require_single(const char* op) const;
  void check_no_overflow(std::uint64_t p) const;
  template <class OnInsert>
  void scan_shift(std::uint64_t shift, std::uint64_t& differences, OnInsert&& on_insert) const;

  std::uint64_t u_;
  unsigned m_;
  std::uint64_t length_;
  std::vector<std::uint64_t> stride_;  // u^i
  BitRope indicator_;
  // Every coordinate of every member is at most this.
  std::uint64_t coord_bound_ = 0;
};

}  // namespace tardy
