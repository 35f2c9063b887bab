#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace transys {

// Fixed-universe bitset backed by 64-bit words. Used for order relations,
// edge sets over the strict-pair universe of a poset, and subgroup member
// sets. The universe size is fixed at construction; bits past the end are
// kept zero so whole-word comparisons are exact.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int bits) : bits_(bits), words_(word_count(bits), 0) {}

  int universe_size() const { return bits_; }

  bool test(int i) const {
    return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
  }
  void set(int i) {
    words_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void reset(int i) {
    words_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  Bitset& subtract(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }

  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

  // Complement within the universe.
  Bitset complement() const {
    Bitset r(bits_);
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = ~words_[k];
    r.trim();
    return r;
  }

  bool intersects(const Bitset& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }
  bool is_subset_of(const Bitset& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }

  bool operator==(const Bitset& o) const {
    return bits_ == o.bits_ && words_ == o.words_;
  }
  bool operator!=(const Bitset& o) const { return !(*this == o); }

  // First set bit, or -1.
  int find_first() const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k]) return static_cast<int>(k * 64 + std::countr_zero(words_[k]));
    return -1;
  }

  // First set bit strictly after `prev`, or -1.
  int find_next(int prev) const {
    int i = prev + 1;
    if (i >= bits_) return -1;
    std::size_t k = static_cast<std::size_t>(i) >> 6;
    std::uint64_t w = words_[k] >> (i & 63);
    if (w) return i + std::countr_zero(w);
    for (++k; k < words_.size(); ++k)
      if (words_[k]) return static_cast<int>(k * 64 + std::countr_zero(words_[k]));
    return -1;
  }

  // Last set bit, or -1.
  int find_last() const {
    for (std::size_t k = words_.size(); k-- > 0;)
      if (words_[k]) return static_cast<int>(k * 64 + 63 - std::countl_zero(words_[k]));
    return -1;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        int bit = std::countr_zero(w);
        f(static_cast<int>(k * 64 + bit));
        w &= w - 1;
      }
    }
  }

  // Orders bitsets by the first index at which they differ, absent-before-
  // present. The empty set is least, the full universe greatest.
  static bool lex_less(const Bitset& a, const Bitset& b) {
    for (std::size_t k = 0; k < a.words_.size(); ++k) {
      std::uint64_t diff = a.words_[k] ^ b.words_[k];
      if (diff) {
        std::uint64_t low = diff & (~diff + 1);
        return (a.words_[k] & low) == 0;
      }
    }
    return false;
  }

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto w : words_) {
      h ^= w;
      h *= 0x100000001b3ull;
    }
    return h;
  }

 private:
  static std::size_t word_count(int bits) {
    return static_cast<std::size_t>(bits + 63) / 64;
  }
  void trim() {
    if (bits_ & 63) words_.back() &= (std::uint64_t{1} << (bits_ & 63)) - 1;
  }

  int bits_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace transys
