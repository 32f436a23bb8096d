#pragma once

// Word-level helpers for the fixed-width vertex bitsets used by the graph
// adjacency matrix and the pattern searches.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace l3col::bits {

using Word = std::uint64_t;
inline constexpr int kWordBits = 64;

constexpr std::size_t words_for(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }

inline void set(std::span<Word> s, int v) { s[v / 64] |= Word{1} << (v % 64); }
inline void reset(std::span<Word> s, int v) { s[v / 64] &= ~(Word{1} << (v % 64)); }
inline bool test(std::span<const Word> s, int v) { return (s[v / 64] >> (v % 64)) & 1U; }

/// Mask of bit positions strictly greater than `v` inside word `w`.
inline Word above_mask(std::size_t w, int v) {
  const auto base = static_cast<int>(w * 64);
  if (v < base) return ~Word{0};
  if (v >= base + 63) return 0;
  return ~Word{0} << (v - base + 1);
}

/// Calls fn(v) for every set bit of the word stream produced by word(i).
template <class WordFn, class Fn>
void for_each(std::size_t nwords, WordFn&& word, Fn&& fn) {
  for (std::size_t i = 0; i < nwords; ++i) {
    Word x = word(i);
    while (x != 0) {
      const int b = std::countr_zero(x);
      fn(static_cast<int>(i * 64) + b);
      x &= x - 1;
    }
  }
}

/// Lowest set bit of the word stream, or -1.
template <class WordFn>
int first(std::size_t nwords, WordFn&& word) {
  for (std::size_t i = 0; i < nwords; ++i) {
    const Word x = word(i);
    if (x != 0) return static_cast<int>(i * 64) + std::countr_zero(x);
  }
  return -1;
}

template <class WordFn>
bool any(std::size_t nwords, WordFn&& word) {
  for (std::size_t i = 0; i < nwords; ++i)
    if (word(i) != 0) return true;
  return false;
}

template <class WordFn>
int count(std::size_t nwords, WordFn&& word) {
  int c = 0;
  for (std::size_t i = 0; i < nwords; ++i) c += std::popcount(word(i));
  return c;
}

}  // namespace l3col::bits
