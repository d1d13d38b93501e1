#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace dtc {

/// Fixed-capacity set of small non-negative integers. Used both for simplices
/// (sets of vertex ids) and for facet subsets of an ambient complex.
class BitSet {
 public:
  static constexpr std::size_t kWords = 4;
  static constexpr std::size_t kCapacity = kWords * 64;

  constexpr BitSet() = default;
  BitSet(std::initializer_list<std::size_t> items) {
    for (std::size_t i : items) insert(i);
  }

  static BitSet range(std::size_t n) {
    BitSet s;
    for (std::size_t i = 0; i < n; ++i) s.insert(i);
    return s;
  }

  void insert(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool contains(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool is_subset_of(const BitSet& other) const {
    for (std::size_t k = 0; k < kWords; ++k)
      if (words_[k] & ~other.words_[k]) return false;
    return true;
  }

  bool intersects(const BitSet& other) const {
    for (std::size_t k = 0; k < kWords; ++k)
      if (words_[k] & other.words_[k]) return true;
    return false;
  }

  BitSet& operator|=(const BitSet& o) {
    for (std::size_t k = 0; k < kWords; ++k) words_[k] |= o.words_[k];
    return *this;
  }
  BitSet& operator&=(const BitSet& o) {
    for (std::size_t k = 0; k < kWords; ++k) words_[k] &= o.words_[k];
    return *this;
  }
  BitSet& operator-=(const BitSet& o) {
    for (std::size_t k = 0; k < kWords; ++k) words_[k] &= ~o.words_[k];
    return *this;
  }
  friend BitSet operator|(BitSet a, const BitSet& b) { return a |= b; }
  friend BitSet operator&(BitSet a, const BitSet& b) { return a &= b; }
  friend BitSet operator-(BitSet a, const BitSet& b) { return a -= b; }

  friend bool operator==(const BitSet&, const BitSet&) = default;
  // Lexicographic on the sorted element sequence.
  friend bool operator<(const BitSet& a, const BitSet& b) {
    return a.elements() < b.elements();
  }

  /// Smallest element, or kCapacity when empty.
  std::size_t first() const {
    for (std::size_t k = 0; k < kWords; ++k)
      if (words_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
    return kCapacity;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t k = 0; k < kWords; ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        fn(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  std::size_t hash() const {
    std::size_t h = 0;
    for (auto w : words_) h = h * 0x9E3779B97F4A7C15ull ^ std::hash<std::uint64_t>{}(w);
    return h;
  }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

struct BitSetHash {
  std::size_t operator()(const BitSet& s) const { return s.hash(); }
};

}  // namespace dtc
