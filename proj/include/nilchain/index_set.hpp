#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace nilchain {

/// Fixed-capacity set of small indices (0..127) packed into two machine words.
/// Used for sets of positive roots and, in a few places, sets of ideals.
class IndexSet {
 public:
  static constexpr std::size_t kCapacity = 128;

  constexpr IndexSet() = default;

  static IndexSet first_n(std::size_t n) {
    IndexSet s;
    for (std::size_t w = 0; w < kWords; ++w) {
      const std::size_t lo = w * 64;
      if (n >= lo + 64) {
        s.words_[w] = ~std::uint64_t{0};
      } else if (n > lo) {
        s.words_[w] = (std::uint64_t{1} << (n - lo)) - 1;
      }
    }
    return s;
  }

  constexpr bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  constexpr void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  constexpr void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  constexpr bool empty() const { return (words_[0] | words_[1]) == 0; }
  constexpr std::size_t count() const {
    return static_cast<std::size_t>(std::popcount(words_[0]) + std::popcount(words_[1]));
  }

  constexpr bool is_subset_of(const IndexSet& other) const {
    return (words_[0] & ~other.words_[0]) == 0 && (words_[1] & ~other.words_[1]) == 0;
  }
  constexpr bool is_proper_subset_of(const IndexSet& other) const {
    return is_subset_of(other) && *this != other;
  }
  constexpr bool intersects(const IndexSet& other) const {
    return ((words_[0] & other.words_[0]) | (words_[1] & other.words_[1])) != 0;
  }

  constexpr IndexSet& operator|=(const IndexSet& o) {
    words_[0] |= o.words_[0];
    words_[1] |= o.words_[1];
    return *this;
  }
  constexpr IndexSet& operator&=(const IndexSet& o) {
    words_[0] &= o.words_[0];
    words_[1] &= o.words_[1];
    return *this;
  }
  friend constexpr IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
  friend constexpr IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
  friend constexpr IndexSet operator-(IndexSet a, const IndexSet& b) {
    a.words_[0] &= ~b.words_[0];
    a.words_[1] &= ~b.words_[1];
    return a;
  }

  friend constexpr bool operator==(const IndexSet&, const IndexSet&) = default;

  /// Calls fn(i) for each member in increasing order.
  template <typename Fn>
  constexpr void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < kWords; ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
        fn(w * 64 + bit);
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  std::size_t hash() const noexcept {
    const std::uint64_t h = words_[0] * 0x9E3779B97F4A7C15ull ^ (words_[1] + 0x632BE59BD9B4E019ull);
    return static_cast<std::size_t>(h ^ (h >> 29));
  }

  /// Word-wise order; arbitrary but total. Not the canonical ideal order.
  friend constexpr std::strong_ordering operator<=>(const IndexSet& a, const IndexSet& b) {
    if (auto c = a.words_[1] <=> b.words_[1]; c != 0) return c;
    return a.words_[0] <=> b.words_[0];
  }

 private:
  static constexpr std::size_t kWords = 2;
  std::array<std::uint64_t, kWords> words_{};
};

struct IndexSetHash {
  std::size_t operator()(const IndexSet& s) const noexcept { return s.hash(); }
};

}  // namespace nilchain
