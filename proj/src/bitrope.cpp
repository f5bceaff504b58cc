// Copyright 2026 The tardy Authors
// SPDX-License-Identifier: Apache-2.0

#include "tardy/bitrope.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

#include "tardy/errors.hpp"

namespace tardy {

struct BitRope::Node {
  std::unique_ptr<Node> left;
  std::unique_ptr<Node> right;
  std::uint64_t priority = 0;

  // Own block. Bits past block_len in `words` are always zero.
  std::uint64_t block_len = 0;
  bool zero_run = false;
  std::array<std::uint64_t, kBlockWords> words{};
  std::uint64_t block_ones = 0;
  FingerprintVec block_fp{};
  FingerprintVec block_pow{};
  // word_fp[k][q]: fingerprint of the first 64q bits of a dense block.
  std::array<std::array<std::uint64_t, kBlockWords>, kMaxFingerprints> word_fp{};

  // Subtree aggregates.
  std::uint64_t len = 0;
  std::uint64_t ones = 0;
  FingerprintVec fp{};
  FingerprintVec pow{};
};

namespace {

using Node = BitRope::Node;
using NodePtr = std::unique_ptr<Node>;

std::uint64_t next_priority() {
  thread_local std::uint64_t state = [] {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  }();
  // splitmix64
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t low_mask(std::uint64_t count) {
  return count >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << count) - 1);
}

std::uint64_t len_of(const NodePtr& n) { return n ? n->len : 0; }
std::uint64_t ones_of(const NodePtr& n) { return n ? n->ones : 0; }

// Up to 64 bits of a dense block starting at `pos`.
std::uint64_t read_bits(const std::array<std::uint64_t, kBlockWords>& words, std::uint64_t pos,
                        std::uint64_t count) {
  const std::size_t wi = pos / 64;
  const unsigned sh = pos % 64;
  std::uint64_t v = words[wi] >> sh;
  if (sh != 0 && wi + 1 < kBlockWords) v |= words[wi + 1] << (64 - sh);
  return v & low_mask(count);
}

// Fingerprint of the first `count` bits of a dense block.
// Continues the Horner hash `h` over bits [from, to) of a dense block;
// `from` must be a multiple of 8.
std::uint64_t extend_hash(std::uint64_t h, const Node& n, std::uint64_t from, std::uint64_t to,
                          const FingerprintParams& params, std::size_t k) {
  const std::uint64_t b8 = params.small_power(k, 8);
  const std::uint64_t base = params.base(k);
  const std::uint64_t byte_end = from + (to - from) / 8 * 8;
  for (std::uint64_t q = from; q < byte_end; q += 8) {
    const auto byte = static_cast<std::uint8_t>(n.words[q / 64] >> (q % 64));
    h = modp::add(modp::mul(h, b8), params.byte_hash(k, byte));
  }
  for (std::uint64_t i = byte_end; i < to; ++i) {
    h = modp::add(modp::mul(h, base), (n.words[i / 64] >> (i % 64)) & 1u);
  }
  return h;
}

// Fingerprint of the first `count` bits of a dense block.
std::uint64_t dense_prefix_hash(const Node& n, std::uint64_t count, const FingerprintParams& params,
                                std::size_t k) {
  const std::uint64_t q = count / 64;
  if (q == kBlockWords) return n.block_fp[k];
  return extend_hash(n.word_fp[k][q], n, q * 64, count, params, k);
}

void refresh_block(Node& n, const FingerprintParams& params) {
  const std::size_t kc = params.count();
  if (n.zero_run) {
    n.block_ones = 0;
    for (std::size_t k = 0; k < kc; ++k) {
      n.block_fp[k] = 0;
      n.block_pow[k] = params.power(k, n.block_len);
    }
    return;
  }
  n.block_ones = 0;
  for (auto w : n.words) n.block_ones += static_cast<std::uint64_t>(std::popcount(w));
  for (std::size_t k = 0; k < kc; ++k) {
    std::uint64_t h = 0;
    std::uint64_t done = 0;
    for (std::size_t q = 0; q < kBlockWords; ++q) {
      n.word_fp[k][q] = h;
      const std::uint64_t end = std::min<std::uint64_t>(n.block_len, done + 64);
      if (done < end) h = extend_hash(h, n, done, end, params, k);
      done = end;
    }
    n.block_fp[k] = h;
    n.block_pow[k] = params.small_power(k, n.block_len);
  }
}

void pull(Node& n, const FingerprintParams& params) {
  n.len = len_of(n.left) + n.block_len + len_of(n.right);
  n.ones = ones_of(n.left) + n.block_ones + ones_of(n.right);
  const std::size_t kc = params.count();
  for (std::size_t k = 0; k < kc; ++k) {
    std::uint64_t f = 0;
    std::uint64_t p = 1;
    if (n.left) {
      f = n.left->fp[k];
      p = n.left->pow[k];
    }
    f = modp::add(modp::mul(f, n.block_pow[k]), n.block_fp[k]);
    p = modp::mul(p, n.block_pow[k]);
    if (n.right) {
      f = modp::add(modp::mul(f, n.right->pow[k]), n.right->fp[k]);
      p = modp::mul(p, n.right->pow[k]);
    }
    n.fp[k] = f;
    n.pow[k] = p;
  }
}

NodePtr make_zero_node(std::uint64_t len, const FingerprintParams& params) {
  auto n = std::make_unique<Node>();
  n->priority = next_priority();
  n->block_len = len;
  n->zero_run = true;
  refresh_block(*n, params);
  pull(*n, params);
  return n;
}

NodePtr make_dense_node(const std::array<std::uint64_t, kBlockWords>& words, std::uint64_t len,
                        const FingerprintParams& params) {
  auto n = std::make_unique<Node>();
  n->priority = next_priority();
  n->block_len = len;
  n->words = words;
  refresh_block(*n, params);
  pull(*n, params);
  return n;
}

// Bits [from, to) of a dense block, re-based at zero.
std::array<std::uint64_t, kBlockWords> slice_words(const std::array<std::uint64_t, kBlockWords>& words,
                                                   std::uint64_t from, std::uint64_t to) {
  std::array<std::uint64_t, kBlockWords> out{};
  for (std::uint64_t i = 0, pos = from; pos < to; ++i, pos += 64) {
    out[i] = read_bits(words, pos, std::min<std::uint64_t>(64, to - pos));
  }
  return out;
}

NodePtr merge(NodePtr a, NodePtr b, const FingerprintParams& params) {
  if (!a) return b;
  if (!b) return a;
  if (a->priority > b->priority) {
    a->right = merge(std::move(a->right), std::move(b), params);
    pull(*a, params);
    return a;
  }
  b->left = merge(std::move(a), std::move(b->left), params);
  pull(*b, params);
  return b;
}

// Splits into the first k bits and the rest.
std::pair<NodePtr, NodePtr> split_at(NodePtr t, std::uint64_t k, const FingerprintParams& params) {
  if (!t) return {nullptr, nullptr};
  const std::uint64_t left_len = len_of(t->left);
  if (k <= left_len) {
    auto [a, b] = split_at(std::move(t->left), k, params);
    t->left = std::move(b);
    pull(*t, params);
    return {std::move(a), std::move(t)};
  }
  if (k >= left_len + t->block_len) {
    auto [a, b] = split_at(std::move(t->right), k - left_len - t->block_len, params);
    t->right = std::move(a);
    pull(*t, params);
    return {std::move(t), std::move(b)};
  }
  const std::uint64_t off = k - left_len;
  NodePtr suffix;
  if (t->zero_run) {
    suffix = make_zero_node(t->block_len - off, params);
  } else {
    suffix = make_dense_node(slice_words(t->words, off, t->block_len), t->block_len - off, params);
    t->words = slice_words(t->words, 0, off);
  }
  // The suffix may end up below t's ancestors, so it must not outrank t.
  suffix->priority = t->priority == ~std::uint64_t{0} ? suffix->priority : suffix->priority % (t->priority + 1);
  t->block_len = off;
  refresh_block(*t, params);
  NodePtr rest = std::move(t->right);
  pull(*t, params);
  return {std::move(t), merge(std::move(suffix), std::move(rest), params)};
}

// Node holding position pos together with the offset of pos in its block.
std::pair<const Node*, std::uint64_t> locate(const Node* n, std::uint64_t pos) {
  while (n != nullptr) {
    const std::uint64_t left_len = len_of(n->left);
    if (pos < left_len) {
      n = n->left.get();
    } else if (pos < left_len + n->block_len) {
      return {n, pos - left_len};
    } else {
      pos -= left_len + n->block_len;
      n = n->right.get();
    }
  }
  throw std::logic_error("bitrope: position past end");
}

void flip_dense_bit(Node& n, std::uint64_t off, const FingerprintParams& params) {
  const std::uint64_t mask = std::uint64_t{1} << (off % 64);
  std::uint64_t& w = n.words[off / 64];
  const bool was_set = (w & mask) != 0;
  w ^= mask;
  const std::size_t kc = params.count();
  for (std::size_t k = 0; k < kc; ++k) {
    const std::uint64_t term = params.small_power(k, n.block_len - 1 - off);
    n.block_fp[k] = was_set ? modp::sub(n.block_fp[k], term) : modp::add(n.block_fp[k], term);
    for (std::uint64_t q = off / 64 + 1; q < kBlockWords && 64 * q <= n.block_len; ++q) {
      const std::uint64_t t = params.small_power(k, 64 * q - 1 - off);
      n.word_fp[k][q] = was_set ? modp::sub(n.word_fp[k][q], t) : modp::add(n.word_fp[k][q], t);
    }
  }
  if (was_set) {
    --n.block_ones;
  } else {
    ++n.block_ones;
  }
}

// Writes `value` at pos if the position lies in a dense block. Returns
// false when it lies in a zero run (and value is one), leaving the tree
// unchanged so the caller can materialize a block there.
bool write_dense(Node& n, std::uint64_t pos, bool value, const FingerprintParams& params) {
  const std::uint64_t left_len = len_of(n.left);
  bool handled;
  if (pos < left_len) {
    handled = write_dense(*n.left, pos, value, params);
  } else if (pos < left_len + n.block_len) {
    const std::uint64_t off = pos - left_len;
    if (n.zero_run) return !value;
    const bool cur = ((n.words[off / 64] >> (off % 64)) & 1u) != 0;
    if (cur == value) return true;
    flip_dense_bit(n, off, params);
    handled = true;
  } else {
    handled = write_dense(*n.right, pos - left_len - n.block_len, value, params);
  }
  if (handled) pull(n, params);
  return handled;
}

// Sets ones at positions relative to this subtree. Positions landing in zero
// runs are appended (absolute) to zero_hits.
void write_ones(Node& n, std::span<const std::uint64_t> pos, std::uint64_t base,
                std::vector<std::uint64_t>& zero_hits, const FingerprintParams& params) {
  const std::uint64_t block_start = base + len_of(n.left);
  const std::uint64_t block_end = block_start + n.block_len;
  const auto mid = std::lower_bound(pos.begin(), pos.end(), block_start);
  const auto hi = std::lower_bound(mid, pos.end(), block_end);
  if (mid != pos.begin()) {
    write_ones(*n.left, {pos.begin(), mid}, base, zero_hits, params);
  }
  if (mid != hi) {
    if (n.zero_run) {
      zero_hits.insert(zero_hits.end(), mid, hi);
    } else {
      for (auto it = mid; it != hi; ++it) {
        const std::uint64_t off = *it - block_start;
        if (((n.words[off / 64] >> (off % 64)) & 1u) == 0) flip_dense_bit(n, off, params);
      }
    }
  }
  if (hi != pos.end()) {
    write_ones(*n.right, {hi, pos.end()}, block_end, zero_hits, params);
  }
  pull(n, params);
}

std::uint64_t block_rank(const Node& n, std::uint64_t off) {
  if (n.zero_run) return 0;
  std::uint64_t r = 0;
  for (std::uint64_t w = 0; w < off / 64; ++w) r += static_cast<std::uint64_t>(std::popcount(n.words[w]));
  if (off % 64 != 0) r += static_cast<std::uint64_t>(std::popcount(n.words[off / 64] & low_mask(off % 64)));
  return r;
}

std::uint64_t block_select(const Node& n, std::uint64_t r) {
  for (std::size_t w = 0; w < kBlockWords; ++w) {
    const auto c = static_cast<std::uint64_t>(std::popcount(n.words[w]));
    if (r < c) {
      std::uint64_t bits = n.words[w];
      for (std::uint64_t i = 0; i < r; ++i) bits &= bits - 1;
      return w * 64 + static_cast<std::uint64_t>(std::countr_zero(bits));
    }
    r -= c;
  }
  throw std::logic_error("bitrope: select past block ones-count");
}

NodePtr clone_tree(const Node* n) {
  if (n == nullptr) return nullptr;
  auto c = std::make_unique<Node>();
  c->priority = n->priority;
  c->block_len = n->block_len;
  c->zero_run = n->zero_run;
  c->words = n->words;
  c->block_ones = n->block_ones;
  c->block_fp = n->block_fp;
  c->block_pow = n->block_pow;
  c->len = n->len;
  c->ones = n->ones;
  c->fp = n->fp;
  c->pow = n->pow;
  c->left = clone_tree(n->left.get());
  c->right = clone_tree(n->right.get());
  return c;
}

void visit_tree(const Node* n, std::uint64_t base, std::uint64_t lo, std::uint64_t hi,
                void (*visit)(void*, std::uint64_t), void* ctx) {
  if (n == nullptr || n->ones == 0 || base >= hi || base + n->len <= lo) return;
  visit_tree(n->left.get(), base, lo, hi, visit, ctx);
  const std::uint64_t start = base + len_of(n->left);
  if (!n->zero_run && n->block_ones != 0 && start < hi && start + n->block_len > lo) {
    for (std::size_t w = 0; w < kBlockWords; ++w) {
      std::uint64_t bits = n->words[w];
      while (bits != 0) {
        const std::uint64_t i = start + w * 64 + static_cast<std::uint64_t>(std::countr_zero(bits));
        bits &= bits - 1;
        if (i >= hi) return;
        if (i >= lo) visit(ctx, i);
      }
    }
  }
  visit_tree(n->right.get(), start + n->block_len, lo, hi, visit, ctx);
}

struct AuditResult {
  std::uint64_t len = 0;
  std::uint64_t ones = 0;
  FingerprintVec fp{};
  FingerprintVec pow{};
};

AuditResult audit_tree(const Node* n, const FingerprintParams& params) {
  AuditResult r;
  const std::size_t kc = params.count();
  for (std::size_t k = 0; k < kc; ++k) r.pow[k] = 1;
  if (n == nullptr) return r;
  auto fail = [](const char* what) { throw std::logic_error(std::string("bitrope audit: ") + what); };

  if (n->left && n->left->priority > n->priority) fail("heap order violated on left child");
  if (n->right && n->right->priority > n->priority) fail("heap order violated on right child");
  if (n->block_len == 0) fail("empty block");
  if (!n->zero_run && n->block_len > kBlockBits) fail("dense block too long");

  const AuditResult left = audit_tree(n->left.get(), params);
  const AuditResult right = audit_tree(n->right.get(), params);

  // Block contents, bit by bit.
  AuditResult block;
  for (std::size_t k = 0; k < kc; ++k) block.pow[k] = 1;
  if (n->zero_run) {
    for (std::size_t k = 0; k < kc; ++k) {
      // Only the multiplier changes for zeros; fold it in by squaring.
      std::uint64_t e = n->block_len;
      std::uint64_t b = params.base(k);
      std::uint64_t p = 1;
      while (e != 0) {
        if (e & 1u) p = modp::mul(p, b);
        b = modp::mul(b, b);
        e >>= 1;
      }
      block.pow[k] = p;
    }
  } else {
    for (std::uint64_t i = 0; i < kBlockBits; ++i) {
      const bool bit = ((n->words[i / 64] >> (i % 64)) & 1u) != 0;
      if (i % 64 == 0 && i <= n->block_len) {
        for (std::size_t k = 0; k < kc; ++k) {
          if (n->word_fp[k][i / 64] != block.fp[k]) fail("word prefix fingerprint mismatch");
        }
      }
      if (i >= n->block_len) {
        if (bit) fail("stray bit past block end");
        continue;
      }
      block.ones += bit ? 1 : 0;
      for (std::size_t k = 0; k < kc; ++k) {
        block.fp[k] = modp::add(modp::mul(block.fp[k], params.base(k)), bit ? 1 : 0);
        block.pow[k] = modp::mul(block.pow[k], params.base(k));
      }
    }
  }
  if (block.ones != n->block_ones) fail("block ones-count mismatch");
  for (std::size_t k = 0; k < kc; ++k) {
    if (block.fp[k] != n->block_fp[k]) fail("block fingerprint mismatch");
    if (block.pow[k] != n->block_pow[k]) fail("block power mismatch");
  }

  r.len = left.len + n->block_len + right.len;
  r.ones = left.ones + block.ones + right.ones;
  for (std::size_t k = 0; k < kc; ++k) {
    std::uint64_t f = modp::add(modp::mul(left.fp[k], block.pow[k]), block.fp[k]);
    f = modp::add(modp::mul(f, right.pow[k]), right.fp[k]);
    r.fp[k] = f;
    r.pow[k] = modp::mul(modp::mul(left.pow[k], block.pow[k]), right.pow[k]);
  }
  if (r.len != n->len) fail("subtree length mismatch");
  if (r.ones != n->ones) fail("subtree ones-count mismatch");
  for (std::size_t k = 0; k < kc; ++k) {
    if (r.fp[k] != n->fp[k]) fail("subtree fingerprint mismatch");
    if (r.pow[k] != n->pow[k]) fail("subtree power mismatch");
  }
  return r;
}

std::size_t tree_height(const Node* n) {
  if (n == nullptr) return 0;
  return 1 + std::max(tree_height(n->left.get()), tree_height(n->right.get()));
}

std::size_t tree_nodes(const Node* n) {
  if (n == nullptr) return 0;
  return 1 + tree_nodes(n->left.get()) + tree_nodes(n->right.get());
}

void require(bool ok, const char* what) {
  if (!ok) throw ContractViolation(what);
}

}  // namespace

BitRope::BitRope(FingerprintParamsPtr params) : params_(std::move(params)) {
  require(params_ != nullptr, "bitrope: null fingerprint parameters");
}

BitRope::~BitRope() = default;
BitRope::BitRope(BitRope&&) noexcept = default;
BitRope& BitRope::operator=(BitRope&&) noexcept = default;

BitRope BitRope::zeros(std::uint64_t n, FingerprintParamsPtr params) {
  BitRope r(std::move(params));
  if (n > 0) r.root_ = make_zero_node(n, *r.params_);
  return r;
}

BitRope BitRope::from_bits(std::span<const std::uint8_t> bits, FingerprintParamsPtr params) {
  BitRope r(std::move(params));
  for (std::size_t start = 0; start < bits.size(); start += kBlockBits) {
    const std::size_t len = std::min(kBlockBits, bits.size() - start);
    std::array<std::uint64_t, kBlockWords> words{};
    for (std::size_t i = 0; i < len; ++i) {
      if (bits[start + i] != 0) words[i / 64] |= std::uint64_t{1} << (i % 64);
    }
    r.root_ = merge(std::move(r.root_), make_dense_node(words, len, *r.params_), *r.params_);
  }
  return r;
}

BitRope BitRope::from_string(std::string_view bits, FingerprintParamsPtr params) {
  std::vector<std::uint8_t> v;
  v.reserve(bits.size());
  for (char c : bits) {
    require(c == '0' || c == '1', "bitrope: from_string expects only '0' and '1'");
    v.push_back(c == '1' ? 1 : 0);
  }
  return from_bits(v, std::move(params));
}

BitRope BitRope::clone() const {
  BitRope r(params_);
  r.root_ = clone_tree(root_.get());
  return r;
}

BitRope BitRope::concat(BitRope a, BitRope b) {
  require(a.params_ == b.params_ || a.params_->compatible(*b.params_), "bitrope: concat of ropes with different fingerprint parameters");
  a.root_ = merge(std::move(a.root_), std::move(b.root_), *a.params_);
  return a;
}

std::pair<BitRope, BitRope> BitRope::split(BitRope x, std::uint64_t i) {
  require(i < x.size(), "bitrope: split index out of range");
  return split_prefix(std::move(x), i + 1);
}

std::pair<BitRope, BitRope> BitRope::split_prefix(BitRope x, std::uint64_t n) {
  require(n <= x.size(), "bitrope: split length out of range");
  BitRope right(x.params_);
  auto [a, b] = split_at(std::move(x.root_), n, *x.params_);
  x.root_ = std::move(a);
  right.root_ = std::move(b);
  return {std::move(x), std::move(right)};
}

std::uint64_t BitRope::size() const { return len_of(root_); }
std::uint64_t BitRope::count_ones() const { return ones_of(root_); }

std::uint64_t BitRope::count_ones(std::uint64_t lo, std::uint64_t hi) const {
  require(lo <= hi && hi <= size(), "bitrope: count_ones range out of bounds");
  return rank(hi) - rank(lo);
}

std::uint64_t BitRope::rank(std::uint64_t pos) const {
  require(pos <= size(), "bitrope: rank position out of range");
  std::uint64_t acc = 0;
  const Node* n = root_.get();
  while (n != nullptr) {
    const std::uint64_t left_len = len_of(n->left);
    if (pos < left_len) {
      n = n->left.get();
      continue;
    }
    acc += ones_of(n->left);
    pos -= left_len;
    if (pos <= n->block_len) return acc + block_rank(*n, pos);
    acc += n->block_ones;
    pos -= n->block_len;
    n = n->right.get();
  }
  return acc;
}

std::uint64_t BitRope::select(std::uint64_t r) const {
  require(r < count_ones(), "bitrope: select rank out of range");
  std::uint64_t base = 0;
  const Node* n = root_.get();
  while (true) {
    const std::uint64_t left_ones = ones_of(n->left);
    if (r < left_ones) {
      n = n->left.get();
      continue;
    }
    r -= left_ones;
    base += len_of(n->left);
    if (r < n->block_ones) return base + block_select(*n, r);
    r -= n->block_ones;
    base += n->block_len;
    n = n->right.get();
  }
}

bool BitRope::get_bit(std::uint64_t i) const {
  require(i < size(), "bitrope: get_bit index out of range");
  auto [n, off] = locate(root_.get(), i);
  if (n->zero_run) return false;
  return ((n->words[off / 64] >> (off % 64)) & 1u) != 0;
}

void BitRope::set_bit(std::uint64_t i, bool value) {
  require(i < size(), "bitrope: set_bit index out of range");
  if (!write_dense(*root_, i, value, *params_)) {
    const std::uint64_t pos[1] = {i};
    materialize_and_set(pos);
  }
}

void BitRope::set_ones(std::span<const std::uint64_t> positions) {
  if (positions.empty()) return;
  for (std::size_t i = 1; i < positions.size(); ++i) {
    require(positions[i - 1] < positions[i], "bitrope: set_ones positions must be strictly increasing");
  }
  require(positions.back() < size(), "bitrope: set_ones position out of range");
  std::vector<std::uint64_t> zero_hits;
  write_ones(*root_, positions, 0, zero_hits, *params_);
  if (!zero_hits.empty()) materialize_and_set(zero_hits);
}

// Each position lies inside a zero run. Positions are grouped by the
// kBlockBits-aligned window they fall in (clipped to the run) and each
// window is replaced by one dense block.
void BitRope::materialize_and_set(std::span<const std::uint64_t> positions) {
  std::size_t idx = 0;
  while (idx < positions.size()) {
    const std::uint64_t q = positions[idx];
    auto [node, off] = locate(root_.get(), q);
    const std::uint64_t run_start = q - off;
    const std::uint64_t run_end = run_start + node->block_len;
    const std::uint64_t aligned = q - q % kBlockBits;
    const std::uint64_t lo = std::max(run_start, aligned);
    const std::uint64_t hi = std::min(run_end, aligned + kBlockBits);

    std::array<std::uint64_t, kBlockWords> words{};
    while (idx < positions.size() && positions[idx] < hi) {
      const std::uint64_t rel = positions[idx] - lo;
      words[rel / 64] |= std::uint64_t{1} << (rel % 64);
      ++idx;
    }
    auto [head, rest] = split_at(std::move(root_), lo, *params_);
    auto [zeros, tail] = split_at(std::move(rest), hi - lo, *params_);
    zeros.reset();
    NodePtr block = make_dense_node(words, hi - lo, *params_);
    root_ = merge(merge(std::move(head), std::move(block), *params_), std::move(tail), *params_);
  }
}

void BitRope::clear_range(std::uint64_t lo, std::uint64_t hi) {
  require(lo <= hi && hi <= size(), "bitrope: clear_range out of bounds");
  if (lo == hi || count_ones(lo, hi) == 0) return;
  auto [head, rest] = split_at(std::move(root_), lo, *params_);
  auto [middle, tail] = split_at(std::move(rest), hi - lo, *params_);
  middle.reset();
  root_ = merge(merge(std::move(head), make_zero_node(hi - lo, *params_), *params_), std::move(tail),
                *params_);
}

std::uint64_t BitRope::extract_word(std::uint64_t pos) const {
  const std::uint64_t n = size();
  std::uint64_t out = 0;
  std::uint64_t got = 0;
  while (got < 64 && pos + got < n) {
    auto [node, off] = locate(root_.get(), pos + got);
    const std::uint64_t take = std::min<std::uint64_t>(64 - got, node->block_len - off);
    if (!node->zero_run) out |= read_bits(node->words, off, take) << got;
    got += take;
  }
  return out;
}

FingerprintVec BitRope::fingerprint() const {
  if (root_) return root_->fp;
  return FingerprintVec{};
}

FingerprintVec BitRope::prefix_fingerprint(std::uint64_t pos) const {
  require(pos <= size(), "bitrope: prefix position out of range");
  const FingerprintParams& params = *params_;
  const std::size_t kc = params.count();
  FingerprintVec acc{};
  const Node* n = root_.get();
  while (n != nullptr && pos != 0) {
    const std::uint64_t left_len = len_of(n->left);
    if (pos < left_len) {
      n = n->left.get();
      continue;
    }
    if (n->left) {
      for (std::size_t k = 0; k < kc; ++k) {
        acc[k] = modp::add(modp::mul(acc[k], n->left->pow[k]), n->left->fp[k]);
      }
    }
    pos -= left_len;
    if (pos <= n->block_len) {
      for (std::size_t k = 0; k < kc; ++k) {
        const std::uint64_t part = n->zero_run ? 0 : dense_prefix_hash(*n, pos, params, k);
        acc[k] = modp::add(modp::mul(acc[k], params.power(k, pos)), part);
      }
      return acc;
    }
    for (std::size_t k = 0; k < kc; ++k) {
      acc[k] = modp::add(modp::mul(acc[k], n->block_pow[k]), n->block_fp[k]);
    }
    pos -= n->block_len;
    n = n->right.get();
  }
  return acc;
}

std::uint64_t BitRope::lce(const BitRope& a, const BitRope& b, std::uint64_t i, std::uint64_t j) {
  require(a.params_ == b.params_ || a.params_->compatible(*b.params_), "bitrope: lce of ropes with different fingerprint parameters");
  require(i <= a.size() && j <= b.size(), "bitrope: lce start out of range");
  const std::uint64_t max_len = std::min(a.size() - i, b.size() - j);
  if (max_len == 0) return 0;

  auto word_lce = [&](std::uint64_t from) -> std::uint64_t {
    const std::uint64_t span = std::min<std::uint64_t>(64, max_len - from);
    const std::uint64_t diff = (a.extract_word(i + from) ^ b.extract_word(j + from)) & low_mask(span);
    return diff != 0 ? from + static_cast<std::uint64_t>(std::countr_zero(diff)) : from + span;
  };

  std::uint64_t ell = word_lce(0);
  if (ell < 64 || ell == max_len) return ell;

  // The first 64 bits agree; search with fingerprints. Invariant: the
  // answer lies in [ell, ell + 2^s) and bpow holds base^ell.
  const FingerprintParams& params = *a.params_;
  const std::size_t kc = params.count();
  const FingerprintVec ha = a.prefix_fingerprint(i);
  const FingerprintVec hb = b.prefix_fingerprint(j);
  FingerprintVec bpow{};
  for (std::size_t k = 0; k < kc; ++k) bpow[k] = params.power_of_two_power(k, 6);

  auto matches = [&](std::uint64_t cand, const FingerprintVec& cand_pow) {
    const FingerprintVec fa = a.prefix_fingerprint(i + cand);
    const FingerprintVec fb = b.prefix_fingerprint(j + cand);
    for (std::size_t k = 0; k < kc; ++k) {
      const std::uint64_t lhs = modp::sub(fa[k], modp::mul(ha[k], cand_pow[k]));
      const std::uint64_t rhs = modp::sub(fb[k], modp::mul(hb[k], cand_pow[k]));
      if (lhs != rhs) return false;
    }
    return true;
  };
  auto try_extend = [&](unsigned s) {
    const std::uint64_t cand = ell + (std::uint64_t{1} << s);
    if (cand > max_len) return false;
    FingerprintVec cand_pow{};
    for (std::size_t k = 0; k < kc; ++k) cand_pow[k] = modp::mul(bpow[k], params.power_of_two_power(k, s));
    if (!matches(cand, cand_pow)) return false;
    ell = cand;
    bpow = cand_pow;
    return true;
  };

  unsigned s = 6;
  while (s < 63 && try_extend(s)) ++s;
  while (s > 6) {
    --s;
    try_extend(s);
  }
  std::uint64_t result = ell == max_len ? ell : word_lce(ell);

  if (params.verify_lce()) {
    for (std::uint64_t from = 0; from < result; from += 64) {
      const std::uint64_t got = word_lce(from);
      if (got < std::min(result, from + 64)) return got;
    }
  }
  return result;
}

std::optional<std::uint64_t> BitRope::select_last_one() const {
  if (count_ones() == 0) return std::nullopt;
  return select(count_ones() - 1);
}

std::optional<std::uint64_t> BitRope::next_one(std::uint64_t pos) const {
  require(pos <= size(), "bitrope: next_one position out of range");
  const std::uint64_t r = rank(pos);
  if (r >= count_ones()) return std::nullopt;
  return select(r);
}

std::vector<std::uint64_t> BitRope::ones_in_range(std::uint64_t lo, std::uint64_t hi) const {
  std::vector<std::uint64_t> out;
  for_each_one(lo, hi, [&out](std::uint64_t i) { out.push_back(i); });
  return out;
}

void BitRope::visit_ones(std::uint64_t lo, std::uint64_t hi, OneVisitor visit, void* ctx) const {
  require(lo <= hi && hi <= size(), "bitrope: ones_in_range out of bounds");
  visit_tree(root_.get(), 0, lo, hi, visit, ctx);
}

std::string BitRope::to_string() const {
  std::string s(size(), '0');
  for_each_one(0, size(), [&s](std::uint64_t i) { s[i] = '1'; });
  return s;
}

std::size_t BitRope::height() const { return tree_height(root_.get()); }
std::size_t BitRope::node_count() const { return tree_nodes(root_.get()); }

void BitRope::audit() const { audit_tree(root_.get(), *params_); }

}  // namespace tardy
