#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "l3col/graph.hpp"

namespace l3col {

/// u-v is an edge and x, y are non-adjacent common neighbours of u and v.
struct DiamondSite {
  Vertex u, v, x, y;
  friend bool operator==(const DiamondSite&, const DiamondSite&) = default;
};

/// Triangle {x, y, w} with pendants u on x and v on y, induced.
struct BullSite {
  Vertex u, v, w, x, y;
  friend bool operator==(const BullSite&, const BullSite&) = default;
};

/// Vertices x1..xk in cyclic order; consecutive pairs are edges, all other pairs are not.
struct InducedCycle {
  std::vector<Vertex> vertices;
  int length() const { return static_cast<int>(vertices.size()); }
  friend bool operator==(const InducedCycle&, const InducedCycle&) = default;
};

using Triangle = std::array<Vertex, 3>;
using Quadruple = std::array<Vertex, 4>;

struct CycleSearchLimits {
  int max_length = 12;
  std::size_t max_cycles = 100000;
};

// All searches below need Graph::has_matrix() and throw ConfigError otherwise.

/// Lexicographically least K4, if any.
std::optional<Quadruple> find_k4(const Graph& g);

/// Lexicographically least triangle, if any.
std::optional<Triangle> find_triangle(const Graph& g);

/// The first induced k-cycle in canonical order: the cycle's least vertex
/// comes first and the second vertex is smaller than the last one; among
/// those, the lexicographically least sequence. k in 3..limits.max_length.
std::optional<InducedCycle> find_induced_cycle(const Graph& g, int k,
                                               const CycleSearchLimits& limits = {});

/// Every induced k-cycle exactly once, canonical form, lexicographic order.
/// Throws EnumerationOverflow once more than limits.max_cycles are found.
std::vector<InducedCycle> enumerate_induced_cycles(const Graph& g, int k,
                                                   const CycleSearchLimits& limits = {});

/// Streams canonical induced k-cycles to `visit`; stop early by returning false.
void for_each_induced_cycle(const Graph& g, int k,
                            const std::function<bool(std::span<const Vertex>)>& visit,
                            const CycleSearchLimits& limits = {});

/// True iff there is an induced path with exactly k vertices from u to v
/// (u and v non-adjacent). Adding the edge uv to g then creates an induced C_k.
bool has_induced_path(const Graph& g, Vertex u, Vertex v, int k);

/// A triangle or an induced C5. Requires g non-bipartite with diameter at
/// most 2 (ContractError otherwise); under that precondition one always exists.
std::variant<Triangle, InducedCycle> find_triangle_or_induced_c5(const Graph& g);

/// Diamonds in which x is one of the two non-adjacent vertices.
std::vector<DiamondSite> diamond_sites_at(const Graph& g, Vertex x);

/// Induced bulls whose degree-2 apex is w.
std::vector<BullSite> bull_sites_at(const Graph& g, Vertex w);

bool is_induced_cycle(const Graph& g, std::span<const Vertex> cycle);
bool is_diamond_site(const Graph& g, const DiamondSite& s);
bool is_bull_site(const Graph& g, const BullSite& s);

}  // namespace l3col
