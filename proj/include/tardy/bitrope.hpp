// Copyright 2026 The tardy Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tardy/fingerprint.hpp"

namespace tardy {

/// A dynamic binary string stored as a treap of bit blocks.
///
/// Every node owns one block: either a dense block of at most kBlockBits
/// bits, or an implicit run of zeros of any length. Each node caches the
/// bit-length, ones-count and fingerprints of its subtree, which gives
/// O(log n) expected point access, split and concatenation, O(log n) rank
/// and select, and an O(log^2 n) longest-common-extension query driven by
/// fingerprint comparisons.
///
/// LCE answers are Monte Carlo: two different substrings compared during the
/// search collide with probability at most 2^-lambda, where lambda is
/// FingerprintParams::error_exponent(). Build the parameters with
/// `verify_lce` to have every answer rechecked at its mismatch position.
///
/// A rope has a single owner. concat() and split() consume their arguments.
class BitRope {
 public:
  explicit BitRope(FingerprintParamsPtr params = FingerprintParams::process_default());
  ~BitRope();
  BitRope(BitRope&&) noexcept;
  BitRope& operator=(BitRope&&) noexcept;
  BitRope(const BitRope&) = delete;
  BitRope& operator=(const BitRope&) = delete;

  static BitRope zeros(std::uint64_t n, FingerprintParamsPtr params = FingerprintParams::process_default());
  static BitRope from_bits(std::span<const std::uint8_t> bits,
                           FingerprintParamsPtr params = FingerprintParams::process_default());
  /// Builds a rope from a string of '0' and '1' characters.
  static BitRope from_string(std::string_view bits,
                             FingerprintParamsPtr params = FingerprintParams::process_default());

  /// Deep copy.
  BitRope clone() const;

  static BitRope concat(BitRope a, BitRope b);
  /// Splits after position i: returns (x[0..i], x[i+1..)). Requires i < size().
  static std::pair<BitRope, BitRope> split(BitRope x, std::uint64_t i);
  /// Splits into the first `n` bits and the rest. Requires n <= size().
  static std::pair<BitRope, BitRope> split_prefix(BitRope x, std::uint64_t n);

  std::uint64_t size() const;
  bool empty() const { return size() == 0; }
  std::uint64_t count_ones() const;
  /// Number of ones in [lo, hi).
  std::uint64_t count_ones(std::uint64_t lo, std::uint64_t hi) const;
  /// Number of ones in [0, pos).
  std::uint64_t rank(std::uint64_t pos) const;
  /// Position of the one with the given 0-based rank.
  std::uint64_t select(std::uint64_t rank) const;

  bool get_bit(std::uint64_t i) const;
  void set_bit(std::uint64_t i, bool value);
  /// Sets every listed position to one. Positions must be strictly increasing.
  void set_ones(std::span<const std::uint64_t> positions);
  /// Zeroes [lo, hi) by splitting out the range and splicing in a zero run.
  void clear_range(std::uint64_t lo, std::uint64_t hi);

  /// Bits [pos, pos+64) packed least significant bit first; positions at or
  /// past size() read as zero.
  std::uint64_t extract_word(std::uint64_t pos) const;

  /// Longest ell with a[i..i+ell) == b[j..j+ell). Requires i <= |a|, j <= |b|.
  /// `a` and `b` may be the same rope.
  static std::uint64_t lce(const BitRope& a, const BitRope& b, std::uint64_t i, std::uint64_t j);

  std::optional<std::uint64_t> select_last_one() const;
  /// Smallest i >= pos with x[i] = 1.
  std::optional<std::uint64_t> next_one(std::uint64_t pos) const;
  /// Every i in [lo, hi) with x[i] = 1, increasing.
  std::vector<std::uint64_t> ones_in_range(std::uint64_t lo, std::uint64_t hi) const;

  /// Calls fn(i) for every one in [lo, hi), in increasing order.
  template <class Fn>
  void for_each_one(std::uint64_t lo, std::uint64_t hi, Fn&& fn) const {
    visit_ones(lo, hi, [](void* ctx, std::uint64_t i) { (*static_cast<Fn*>(ctx))(i); }, &fn);
  }

  /// Fingerprint of the whole string.
  FingerprintVec fingerprint() const;
  /// Fingerprint of the prefix x[0..pos).
  FingerprintVec prefix_fingerprint(std::uint64_t pos) const;

  const FingerprintParamsPtr& params() const { return params_; }

  std::string to_string() const;
  std::size_t height() const;
  std::size_t node_count() const;

  /// Recomputes every cached aggregate from scratch and checks the treap
  /// heap order; throws std::logic_error on the first discrepancy. O(n).
  void audit() const;

  struct Node;

 private:
  using OneVisitor = void (*)(void*, std::uint64_t);
  void visit_ones(std::uint64_t lo, std::uint64_t hi, OneVisitor visit, void* ctx) const;
  void materialize_and_set(std::span<const std::uint64_t> positions);

  FingerprintParamsPtr params_;
  std::unique_ptr<Node> root_;
};

}  // namespace tardy
