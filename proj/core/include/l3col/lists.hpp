#pragma once

#include <bit>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "l3col/graph.hpp"

namespace l3col {

/// Subset of the palette {1,2,3}, stored as a 3-bit mask (bit c-1 = colour c).
class ColourSet {
 public:
  constexpr ColourSet() = default;
  static constexpr ColourSet from_mask(unsigned m) { return ColourSet(m & 7U); }
  static constexpr ColourSet full() { return ColourSet(7U); }
  static constexpr ColourSet single(int c) { return ColourSet(1U << (c - 1)); }

  constexpr unsigned mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool contains(int c) const { return c >= 1 && c <= 3 && ((mask_ >> (c - 1)) & 1U); }
  constexpr bool subset_of(ColourSet o) const { return (mask_ & ~o.mask_) == 0; }
  /// Smallest colour in the set, 0 if empty.
  constexpr int first() const { return mask_ == 0 ? 0 : std::countr_zero(mask_) + 1; }
  /// Largest colour in the set, 0 if empty.
  constexpr int last() const { return mask_ == 0 ? 0 : 32 - std::countl_zero(mask_); }

  constexpr ColourSet operator&(ColourSet o) const { return ColourSet(mask_ & o.mask_); }
  constexpr ColourSet operator|(ColourSet o) const { return ColourSet(mask_ | o.mask_); }
  constexpr ColourSet without(ColourSet o) const { return ColourSet(mask_ & ~o.mask_); }
  constexpr ColourSet without(int c) const { return without(single(c)); }

  /// Colours as digits ("123", "2"); "-" for the empty set.
  std::string str() const;

  friend constexpr bool operator==(ColourSet, ColourSet) = default;

 private:
  constexpr explicit ColourSet(unsigned m) : mask_(m) {}
  unsigned mask_ = 0;
};

using ListAssignment = std::vector<ColourSet>;

/// Per-vertex colour in 1..3; 0 marks a vertex outside the colouring's domain.
using Colouring = std::vector<int>;

/// A colouring of the vertex set `domain`; colours[i] belongs to domain[i].
struct Precolouring {
  std::vector<Vertex> domain;
  std::vector<int> colours;
};

inline constexpr std::size_t kDefaultPrecolouringBound = 8;

ListAssignment full_lists(int n);

/// Sum of list sizes.
int list_mass(const ListAssignment& L);

/// True iff c is total, proper on g and c(u) is in L(u) for every u.
bool respects(const Colouring& c, const Graph& g, const ListAssignment& L);

/// True iff no edge joins two coloured vertices of equal colour.
bool is_proper(const Graph& g, const Colouring& c);

/// Calls visit for every proper L-respecting colouring of G[N0], in
/// lexicographic order of the colour vector (N0 taken in the given order).
/// Return false from visit to stop. Throws ConfigError when |N0| > bound.
void for_each_promising(const Graph& g, const ListAssignment& L, std::span<const Vertex> N0,
                        const std::function<bool(const Precolouring&)>& visit,
                        std::size_t bound = kDefaultPrecolouringBound);

std::vector<Precolouring> enumerate_promising(const Graph& g, const ListAssignment& L,
                                              std::span<const Vertex> N0,
                                              std::size_t bound = kDefaultPrecolouringBound);

/// L with L(u) = {c(u)} on the precoloured vertices.
ListAssignment restrict_to_precolouring(const ListAssignment& L, const Precolouring& p);

}  // namespace l3col
