// Copyright 2026 The tardy Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "support.hpp"
#include "tardy/bitrope.hpp"
#include "tardy/errors.hpp"

using tardy::BitRope;
using namespace tardy::testing;

namespace {

BitRope rope(std::string_view s) { return BitRope::from_string(s, fixed_params()); }

std::vector<std::uint8_t> to_bits(const BitRope& r) {
  std::vector<std::uint8_t> out;
  for (char c : r.to_string()) out.push_back(c == '1');
  return out;
}

}  // namespace

TEST_CASE("zeros") {
  CHECK(BitRope::zeros(0, fixed_params()).size() == 0);
  BitRope five = BitRope::zeros(5, fixed_params());
  CHECK(five.to_string() == "00000");
  CHECK(five.count_ones() == 0);
  BitRope big = BitRope::zeros(1'000'000, fixed_params());
  CHECK(big.size() == 1'000'000);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 100; ++t) CHECK_FALSE(big.get_bit(pick(rng, 0, 999'999)));
  big.audit();
}

TEST_CASE("from_bits") {
  CHECK(BitRope::from_bits({}, fixed_params()).empty());
  const std::vector<std::uint8_t> three{1, 0, 1};
  BitRope r = BitRope::from_bits(three, fixed_params());
  CHECK(r.size() == 3);
  CHECK(r.count_ones() == 2);
  std::mt19937_64 rng(2);
  const auto bits = random_bits(rng, 1000);
  BitRope big = BitRope::from_bits(bits, fixed_params());
  for (std::size_t i = 0; i < bits.size(); ++i) REQUIRE(big.get_bit(i) == (bits[i] != 0));
  big.audit();
}

TEST_CASE("concat") {
  CHECK(BitRope::concat(rope(""), rope("101")).to_string() == "101");
  CHECK(BitRope::concat(rope("01"), rope("10")).to_string() == "0110");
  std::mt19937_64 rng(3);
  const auto a = random_bits(rng, 500);
  const auto b = random_bits(rng, 500);
  BitRope joined = BitRope::concat(BitRope::from_bits(a, fixed_params()), BitRope::from_bits(b, fixed_params()));
  CHECK(joined.to_string() == bits_to_string(a) + bits_to_string(b));
  joined.audit();
  CHECK_THROWS_AS(BitRope::concat(rope("1"), BitRope::from_string("1", fixed_params(99))), tardy::ContractViolation);
}

TEST_CASE("split") {
  auto [a, b] = BitRope::split(rope("0110"), 0);
  CHECK(a.to_string() == "0");
  CHECK(b.to_string() == "110");
  auto [c, d] = BitRope::split(rope("0110"), 3);
  CHECK(c.to_string() == "0110");
  CHECK(d.to_string().empty());
  CHECK_THROWS_AS(BitRope::split(rope("01"), 2), tardy::ContractViolation);
  std::mt19937_64 rng(4);
  const auto bits = random_bits(rng, 1000);
  for (int t = 0; t < 50; ++t) {
    const std::uint64_t i = pick(rng, 0, bits.size() - 1);
    auto [l, r] = BitRope::split(BitRope::from_bits(bits, fixed_params()), i);
    CHECK(l.size() == i + 1);
    l.audit();
    r.audit();
    CHECK(BitRope::concat(std::move(l), std::move(r)).to_string() == bits_to_string(bits));
  }
}

TEST_CASE("get_bit and set_bit") {
  BitRope r = rope("101");
  CHECK(r.get_bit(0));
  CHECK_FALSE(r.get_bit(1));
  CHECK_THROWS_AS(r.get_bit(3), tardy::ContractViolation);
  BitRope z = rope("000");
  z.set_bit(1, true);
  CHECK(z.to_string() == "010");
  z.set_bit(1, true);
  CHECK(z.to_string() == "010");

  std::mt19937_64 rng(5);
  std::vector<std::uint8_t> mirror(512, 0);
  BitRope x = BitRope::zeros(512, fixed_params());
  for (int t = 0; t < 200; ++t) {
    const std::uint64_t i = pick(rng, 0, 511);
    const bool v = pick(rng, 0, 1) == 1;
    mirror[i] = v;
    x.set_bit(i, v);
  }
  CHECK(x.to_string() == bits_to_string(mirror));
  x.audit();
}

TEST_CASE("lce") {
  CHECK(BitRope::lce(rope("0101"), rope("0100"), 0, 0) == 3);
  BitRope x = rope("0110100111");
  CHECK(BitRope::lce(x, x, 0, 0) == x.size());
  CHECK(BitRope::lce(x, x, x.size(), 0) == 0);

  std::mt19937_64 rng(6);
  // Long runs of agreement exercise the galloping search.
  auto a = random_bits(rng, 2048);
  auto b = a;
  for (int t = 0; t < 8; ++t) b[pick(rng, 0, 2047)] ^= 1;
  BitRope ra = BitRope::from_bits(a, fixed_params());
  BitRope rb = BitRope::from_bits(b, fixed_params());
  for (int t = 0; t < 10000; ++t) {
    const std::uint64_t i = pick(rng, 0, 2048);
    const std::uint64_t j = t % 3 == 0 ? i : pick(rng, 0, 2048);
    const BitRope& left = t % 2 ? ra : rb;
    const auto& left_bits = t % 2 ? a : b;
    REQUIRE(BitRope::lce(left, rb, i, j) == naive_lce(left_bits, b, i, j));
  }
}

TEST_CASE("lce with every fingerprint count and verify mode") {
  std::mt19937_64 rng(7);
  const auto a = random_bits(rng, 4000, 20);
  for (std::size_t k = 1; k <= tardy::kMaxFingerprints; ++k) {
    for (bool verify : {false, true}) {
      BitRope x = BitRope::from_bits(a, fixed_params(77, k, verify));
      for (int t = 0; t < 500; ++t) {
        const std::uint64_t i = pick(rng, 0, 4000);
        const std::uint64_t j = pick(rng, 0, 4000);
        REQUIRE(BitRope::lce(x, x, i, j) == naive_lce(a, a, i, j));
      }
    }
  }
}

TEST_CASE("select_last_one") {
  CHECK_FALSE(rope("000").select_last_one().has_value());
  CHECK(rope("0101").select_last_one() == 3);
  std::mt19937_64 rng(8);
  for (int t = 0; t < 50; ++t) {
    const auto bits = random_bits(rng, pick(rng, 0, 3000), static_cast<unsigned>(pick(rng, 0, 5)));
    std::optional<std::uint64_t> expected;
    for (std::size_t i = bits.size(); i-- > 0;) {
      if (bits[i]) {
        expected = i;
        break;
      }
    }
    CHECK(BitRope::from_bits(bits, fixed_params()).select_last_one() == expected);
  }
}

TEST_CASE("ones_in_range") {
  CHECK(rope("0110").ones_in_range(0, 4) == std::vector<std::uint64_t>{1, 2});
  CHECK(rope("0110").ones_in_range(2, 2).empty());
  std::mt19937_64 rng(9);
  const auto bits = random_bits(rng, 3000, 100);
  BitRope x = BitRope::from_bits(bits, fixed_params());
  for (int t = 0; t < 100; ++t) {
    std::uint64_t lo = pick(rng, 0, 3000);
    std::uint64_t hi = pick(rng, 0, 3000);
    if (lo > hi) std::swap(lo, hi);
    std::vector<std::uint64_t> expected;
    for (std::uint64_t i = lo; i < hi; ++i) {
      if (bits[i]) expected.push_back(i);
    }
    REQUIRE(x.ones_in_range(lo, hi) == expected);
    REQUIRE(x.count_ones(lo, hi) == expected.size());
  }
}

TEST_CASE("rank, select, next_one, extract_word") {
  std::mt19937_64 rng(10);
  const auto bits = random_bits(rng, 1500, 300);
  BitRope x = BitRope::from_bits(bits, fixed_params());
  std::uint64_t seen = 0;
  for (std::uint64_t i = 0; i < bits.size(); ++i) {
    REQUIRE(x.rank(i) == seen);
    if (bits[i]) {
      REQUIRE(x.select(seen) == i);
      ++seen;
    }
  }
  for (int t = 0; t < 200; ++t) {
    const std::uint64_t pos = pick(rng, 0, 1500);
    std::optional<std::uint64_t> next;
    for (std::uint64_t i = pos; i < bits.size(); ++i) {
      if (bits[i]) {
        next = i;
        break;
      }
    }
    REQUIRE(x.next_one(pos) == next);
    std::uint64_t word = 0;
    for (unsigned b = 0; b < 64; ++b) {
      if (pos + b < bits.size() && bits[pos + b]) word |= std::uint64_t{1} << b;
    }
    REQUIRE(x.extract_word(pos) == word);
  }
}

TEST_CASE("clear_range and set_ones over zero runs") {
  BitRope x = BitRope::zeros(10'000, fixed_params());
  std::vector<std::uint8_t> mirror(10'000, 0);
  const std::vector<std::uint64_t> ones{3, 255, 256, 257, 4000, 9999};
  x.set_ones(ones);
  for (auto i : ones) mirror[i] = 1;
  x.audit();
  CHECK(x.to_string() == bits_to_string(mirror));
  x.clear_range(200, 4001);
  for (std::uint64_t i = 200; i < 4001; ++i) mirror[i] = 0;
  x.audit();
  CHECK(x.to_string() == bits_to_string(mirror));
  CHECK(x.count_ones() == 2);
}

TEST_CASE("fingerprints agree for equal content built differently") {
  std::mt19937_64 rng(11);
  const auto bits = random_bits(rng, 2000, 50);
  BitRope a = BitRope::from_bits(bits, fixed_params());
  BitRope b = BitRope::zeros(2000, fixed_params());
  std::vector<std::uint64_t> ones;
  for (std::uint64_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) ones.push_back(i);
  }
  b.set_ones(ones);
  CHECK(a.fingerprint() == b.fingerprint());
  for (std::uint64_t pos : {0u, 1u, 63u, 64u, 700u, 2000u}) CHECK(a.prefix_fingerprint(pos) == b.prefix_fingerprint(pos));
}

TEST_CASE("mirror equivalence under random operations") {
  std::mt19937_64 rng(12);
  std::vector<std::uint8_t> mirror;
  BitRope x(fixed_params());
  for (int op = 0; op < 10'000; ++op) {
    const auto kind = pick(rng, 0, 9);
    if (kind == 0 || mirror.size() < 8) {
      const auto extra = random_bits(rng, pick(rng, 0, 600), static_cast<unsigned>(pick(rng, 0, 1000)));
      const bool front = pick(rng, 0, 1) == 1;
      BitRope piece = pick(rng, 0, 3) == 0 ? BitRope::zeros(extra.size(), fixed_params())
                                           : BitRope::from_bits(extra, fixed_params());
      const auto piece_bits = to_bits(piece);
      if (front) {
        mirror.insert(mirror.begin(), piece_bits.begin(), piece_bits.end());
        x = BitRope::concat(std::move(piece), std::move(x));
      } else {
        mirror.insert(mirror.end(), piece_bits.begin(), piece_bits.end());
        x = BitRope::concat(std::move(x), std::move(piece));
      }
    } else if (kind == 1 && mirror.size() > 3000) {
      const std::uint64_t i = pick(rng, 0, mirror.size() - 1);
      auto [l, r] = BitRope::split(std::move(x), i);
      const bool keep_left = pick(rng, 0, 1) == 1;
      if (keep_left) {
        mirror.resize(i + 1);
        x = std::move(l);
      } else {
        mirror.erase(mirror.begin(), mirror.begin() + static_cast<std::ptrdiff_t>(i + 1));
        x = std::move(r);
      }
    } else if (kind == 2) {
      const std::uint64_t i = pick(rng, 0, mirror.size() - 1);
      const bool v = pick(rng, 0, 1) == 1;
      mirror[i] = v;
      x.set_bit(i, v);
    } else if (kind == 3) {
      std::uint64_t lo = pick(rng, 0, mirror.size());
      std::uint64_t hi = pick(rng, 0, mirror.size());
      if (lo > hi) std::swap(lo, hi);
      std::fill(mirror.begin() + static_cast<std::ptrdiff_t>(lo), mirror.begin() + static_cast<std::ptrdiff_t>(hi), 0);
      x.clear_range(lo, hi);
    } else if (kind == 4) {
      std::vector<std::uint64_t> ones;
      for (std::uint64_t i = pick(rng, 0, 50); i < mirror.size(); i += pick(rng, 1, 200)) ones.push_back(i);
      for (auto i : ones) mirror[i] = 1;
      x.set_ones(ones);
    } else {
      const std::uint64_t i = pick(rng, 0, mirror.size());
      const std::uint64_t j = kind == 5 ? i : pick(rng, 0, mirror.size());
      REQUIRE(BitRope::lce(x, x, i, j) == naive_lce(mirror, mirror, i, j));
      if (i < mirror.size()) REQUIRE(x.get_bit(i) == (mirror[i] != 0));
    }
    REQUIRE(x.size() == mirror.size());
    if (op % 500 == 0) {
      x.audit();
      REQUIRE(x.to_string() == bits_to_string(mirror));
      std::optional<std::uint64_t> last;
      for (std::size_t i = mirror.size(); i-- > 0;) {
        if (mirror[i]) {
          last = i;
          break;
        }
      }
      REQUIRE(x.select_last_one() == last);
    }
  }
  x.audit();
  CHECK(x.to_string() == bits_to_string(mirror));
}

TEST_CASE("depth stays logarithmic") {
  BitRope x(fixed_params());
  std::mt19937_64 rng(13);
  for (int t = 0; t < 2000; ++t) {
    x = BitRope::concat(std::move(x), BitRope::from_bits(random_bits(rng, 256), fixed_params()));
  }
  CHECK(x.node_count() >= 2000);
  CHECK(x.height() < 60);
}

TEST_CASE("clone is independent") {
  BitRope a = rope("1010");
  BitRope b = a.clone();
  b.set_bit(1, true);
  CHECK(a.to_string() == "1010");
  CHECK(b.to_string() == "1110");
}
