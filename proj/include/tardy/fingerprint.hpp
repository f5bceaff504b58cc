// Copyright 2026 The tardy Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

namespace tardy {

inline constexpr std::size_t kMaxFingerprints = 4;

/// Bits per dense rope block.
inline constexpr std::size_t kBlockBits = 256;
inline constexpr std::size_t kBlockWords = kBlockBits / 64;

/// Arithmetic modulo the Mersenne prime 2^61 - 1.
namespace modp {

inline constexpr std::uint64_t kModulus = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t reduce(std::uint64_t x) {
  x = (x & kModulus) + (x >> 61);
  return x >= kModulus ? x - kModulus : x;
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 z = static_cast<unsigned __int128>(a) * b;
  const std::uint64_t lo = static_cast<std::uint64_t>(z) & kModulus;
  const std::uint64_t hi = static_cast<std::uint64_t>(z >> 61);
  return reduce(lo + hi);
}

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t s = a + b;
  return s >= kModulus ? s - kModulus : s;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) {
  return a >= b ? a - b : a + kModulus - b;
}

}  // namespace modp

/// One polynomial fingerprint per base; only the first `count()` entries of
/// a FingerprintVec are meaningful.
using FingerprintVec = std::array<std::uint64_t, kMaxFingerprints>;

/// Randomly drawn bases and their lookup tables. The fingerprint of a bit
/// string x of length L under base b is sum_i x[i] * b^(L-1-i) mod 2^61-1.
///
/// Ropes are only comparable when they share the same parameter object.
/// Instances are immutable after construction and safe to share between
/// threads.
class FingerprintParams {
 public:
  static constexpr std::uint64_t kModulus = modp::kModulus;

  /// Draws `count` bases in [2, modulus-2] from a generator seeded with
  /// `seed`. With `verify_lce` set, every LCE answer is rechecked at its
  /// mismatch position and recomputed by direct comparison on disagreement.
  static std::shared_ptr<const FingerprintParams> create(std::size_t count, std::uint64_t seed,
                                                         bool verify_lce = false);

  /// Process-wide parameters with two bases. The seed comes from
  /// TARDY_FINGERPRINT_SEED when set, otherwise from std::random_device.
  static std::shared_ptr<const FingerprintParams> process_default();

  std::size_t count() const { return count_; }
  std::uint64_t seed() const { return seed_; }
  bool verify_lce() const { return verify_lce_; }
  std::uint64_t base(std::size_t k) const { return bases_[k]; }

  /// True when both hash identically and share the verify setting, so ropes
  /// built from either may be combined.
  bool compatible(const FingerprintParams& other) const {
    return count_ == other.count_ && verify_lce_ == other.verify_lce_ && bases_ == other.bases_;
  }

  /// Upper bound on the per-comparison false-equality probability for strings
  /// of length at most `length`, as -log2.
  double error_exponent(std::uint64_t length) const;

  /// base_k^e for e <= kBlockBits.
  std::uint64_t small_power(std::size_t k, std::size_t e) const { return small_pow_[k][e]; }
  /// base_k^(2^s).
  std::uint64_t power_of_two_power(std::size_t k, unsigned s) const { return pow2_[k][s]; }
  /// base_k^e for arbitrary e.
  std::uint64_t power(std::size_t k, std::uint64_t e) const;
  /// Fingerprint of the 8 bits of `byte`, least significant bit first.
  std::uint64_t byte_hash(std::size_t k, std::uint8_t byte) const { return byte_hash_[k][byte]; }

 private:
  FingerprintParams() = default;

  std::size_t count_ = 0;
  std::uint64_t seed_ = 0;
  bool verify_lce_ = false;
  std::array<std::uint64_t, kMaxFingerprints> bases_{};
  std::array<std::array<std::uint64_t, kBlockBits + 1>, kMaxFingerprints> small_pow_{};
  std::array<std::array<std::uint64_t, 64>, kMaxFingerprints> pow2_{};
  std::array<std::array<std::uint64_t, 256>, kMaxFingerprints> byte_hash_{};
};

using FingerprintParamsPtr = std::shared_ptr<const FingerprintParams>;

}  // namespace tardy
