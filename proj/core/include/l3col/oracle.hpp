#pragma once

// Brute-force reference answers. Nothing here uses the propagation rules or
// the 2-SAT reduction, so the oracle can be used to check both.

#include <cstdint>
#include <optional>

#include "l3col/graph.hpp"
#include "l3col/lists.hpp"

namespace l3col {

inline constexpr int kOracleMaxVertices = 60;
inline constexpr int kCountMaxVertices = 16;

/// A colouring respecting L, or nullopt. Static backtracking over vertices in
/// descending degree order. Throws BudgetError above max_vertices.
std::optional<Colouring> oracle_list_colour(const Graph& g, const ListAssignment& L,
                                            int max_vertices = kOracleMaxVertices);

/// Number of total colourings respecting L. Throws BudgetError for n > 16.
std::uint64_t count_colourings(const Graph& g, const ListAssignment& L);

}  // namespace l3col
