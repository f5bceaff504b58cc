// Copyright 2026 The tardy Authors
// SPDX-License-Identifier: Apache-2.0

#include "tardy/fingerprint.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <random>
#include <string>

#include "tardy/errors.hpp"

namespace tardy {

std::shared_ptr<const FingerprintParams> FingerprintParams::create(std::size_t count,
                                                                   std::uint64_t seed,
                                                                   bool verify_lce) {
  if (count == 0 || count > kMaxFingerprints) {
    throw ContractViolation("fingerprint count must be in [1, " +
                            std::to_string(kMaxFingerprints) + "], got " +
                            std::to_string(count));
  }
  std::shared_ptr<FingerprintParams> p(new FingerprintParams());
  p->count_ = count;
  p->seed_ = seed;
  p->verify_lce_ = verify_lce;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(2, kModulus - 2);
  for (std::size_t k = 0; k < count; ++k) {
    const std::uint64_t b = dist(rng);
    p->bases_[k] = b;

    p->small_pow_[k][0] = 1;
    for (std::size_t e = 1; e <= kBlockBits; ++e) {
      p->small_pow_[k][e] = modp::mul(p->small_pow_[k][e - 1], b);
    }
    p->pow2_[k][0] = b;
    for (unsigned s = 1; s < 64; ++s) {
      p->pow2_[k][s] = modp::mul(p->pow2_[k][s - 1], p->pow2_[k][s - 1]);
    }
    for (unsigned v = 0; v < 256; ++v) {
      std::uint64_t h = 0;
      for (unsigned t = 0; t < 8; ++t) {
        h = modp::add(modp::mul(h, b), (v >> t) & 1u);
      }
      p->byte_hash_[k][v] = h;
    }
  }
  return p;
}

std::shared_ptr<const FingerprintParams> FingerprintParams::process_default() {
  static const std::shared_ptr<const FingerprintParams> params = [] {
    std::uint64_t seed;
    if (const char* env = std::getenv("TARDY_FINGERPRINT_SEED"); env != nullptr && *env != '\0') {
      seed = std::strtoull(env, nullptr, 10);
    } else {
      std::random_device rd;
      seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    }
    return create(2, seed);
  }();
  return params;
}

double FingerprintParams::error_exponent(std::uint64_t length) const {
  const double per_base = 61.0 - std::log2(static_cast<double>(std::max<std::uint64_t>(length, 2)));
  return per_base * static_cast<double>(count_);
}

std::uint64_t FingerprintParams::power(std::size_t k, std::uint64_t e) const {
  if (e <= kBlockBits) return small_pow_[k][e];
  std::uint64_t r = 1;
  while (e != 0) {
    const unsigned s = static_cast<unsigned>(std::countr_zero(e));
    r = modp::mul(r, pow2_[k][s]);
    e &= e - 1;
  }
  return r;
}

}  // namespace tardy
