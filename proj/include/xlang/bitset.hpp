// Copyright 2026 The xlang Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef XLANG_BITSET_HPP
#define XLANG_BITSET_HPP

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace xlang {

/// Fixed-size bit vector used for state sets and relation rows.
///
/// The size is set at construction. Binary operations require equal sizes.
/// Bits past `size()` in the last word are always zero, so word-wise
/// comparison is exact.
class Bitset {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const {
    assert(i < size_);
    return (words_[i >> 6] >> (i & 63)) & 1U;
  }
  void set(std::size_t i, bool value = true) {
    assert(i < size_);
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= bit;
    } else {
      words_[i >> 6] &= ~bit;
    }
  }
  void reset(std::size_t i) { set(i, false); }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  bool any() const {
    for (auto w : words_) {
      if (w != 0) return true;
    }
    return false;
  }
  bool none() const { return !any(); }
  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  Bitset& operator|=(const Bitset& o) {
    assert(size_ == o.size_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    assert(size_ == o.size_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  /// Set difference.
  Bitset& operator-=(const Bitset& o) {
    assert(size_ == o.size_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }

  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

  friend bool operator==(const Bitset& a, const Bitset& b) = default;
  friend bool operator<(const Bitset& a, const Bitset& b) {
    if (a.size_ != b.size_) return a.size_ < b.size_;
    // Compare as bit strings starting from bit 0.
    for (std::size_t k = 0; k < a.words_.size(); ++k) {
      if (a.words_[k] != b.words_[k]) {
        const std::uint64_t diff = a.words_[k] ^ b.words_[k];
        const std::uint64_t low = diff & (~diff + 1);
        return (b.words_[k] & low) != 0;
      }
    }
    return false;
  }

  bool is_subset_of(const Bitset& o) const {
    assert(size_ == o.size_);
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if ((words_[k] & ~o.words_[k]) != 0) return false;
    }
    return true;
  }
  bool intersects(const Bitset& o) const {
    assert(size_ == o.size_);
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if ((words_[k] & o.words_[k]) != 0) return true;
    }
    return false;
  }

  /// Index of the first set bit at or after `from`, or npos.
  std::size_t next(std::size_t from) const {
    if (from >= size_) return npos;
    std::size_t k = from >> 6;
    std::uint64_t w = words_[k] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w != 0) return (k << 6) + static_cast<std::size_t>(std::countr_zero(w));
      if (++k == words_.size()) return npos;
      w = words_[k];
    }
  }
  std::size_t first() const { return next(0); }

  /// Index of the first bit set in `*this` but not in `o`, or npos.
  std::size_t first_not_in(const Bitset& o) const {
    assert(size_ == o.size_);
    for (std::size_t k = 0; k < words_.size(); ++k) {
      const std::uint64_t w = words_[k] & ~o.words_[k];
      if (w != 0) return (k << 6) + static_cast<std::size_t>(std::countr_zero(w));
    }
    return npos;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w != 0) {
        fn((k << 6) + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  std::span<const std::uint64_t> words() const { return words_; }

  std::size_t hash() const {
    std::size_t h = size_;
    for (auto w : words_) h = h * 1000003U ^ std::hash<std::uint64_t>{}(w);
    return h;
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

/// True iff `a & b == c`, without allocating.
inline bool intersection_equals(const Bitset& a, const Bitset& b, const Bitset& c) {
  auto wa = a.words(), wb = b.words(), wc = c.words();
  for (std::size_t k = 0; k < wa.size(); ++k) {
    if ((wa[k] & wb[k]) != wc[k]) return false;
  }
  return true;
}

/// True iff `b - a == c`, without allocating.
inline bool difference_equals(const Bitset& b, const Bitset& a, const Bitset& c) {
  auto wa = a.words(), wb = b.words(), wc = c.words();
  for (std::size_t k = 0; k < wa.size(); ++k) {
    if ((wb[k] & ~wa[k]) != wc[k]) return false;
  }
  return true;
}

}  // namespace xlang

#endif  // XLANG_BITSET_HPP
