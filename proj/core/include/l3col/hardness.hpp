#pragma once

// Not-all-equal 3-SAT formulas and the graph gadget that turns them into
// 3-colouring instances of diameter 4 without short even induced cycles.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "l3col/graph.hpp"

namespace l3col {

struct Literal {
  int var = 0;  // 0-based
  bool positive = true;
  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

struct NaeFormula {
  int variables = 0;
  std::vector<Clause> clauses;  // literal order as given
  friend bool operator==(const NaeFormula&, const NaeFormula&) = default;
};

/// DIMACS-style text: "c" comment lines, optional "p cnf N M" header, and
/// 0-terminated clauses of exactly three non-zero literals, one or more per
/// line. Without a header the variable count is the largest index used.
/// Throws InputError carrying the offending line.
NaeFormula parse_formula(std::string_view text);

std::string format_formula(const NaeFormula& f);

/// Satisfying assignment under not-all-equal semantics, by enumeration.
/// Throws BudgetError for more than 30 variables.
std::optional<std::vector<bool>> nae_satisfiable(const NaeFormula& f);

/// Largest number of clause positions any single variable occupies.
int max_occurrences(const NaeFormula& f);

enum class RoleKind { Hub, Literal, Clause, Subdivision };

struct VertexRole {
  RoleKind kind = RoleKind::Hub;
  int variable = -1;     // Literal
  bool positive = true;  // Literal: v_i (true) or v_i' (false)
  int clause = -1;       // Clause, Subdivision
  int slot = -1;         // Clause, Subdivision: literal position 0..2
  int step = -1;         // Subdivision: 1..p counted from the literal end
};

/// "z", "v3", "v3'", "c1.2", "s1.2.4" (1-based variable and clause numbers).
std::string role_tag(const VertexRole& r);

/// The literal-to-clause edge of one clause position.
struct Occurrence {
  Vertex literal = 0;
  Vertex clause_vertex = 0;
  int clause = 0;
  int slot = 0;
};

struct GadgetGraph {
  Graph graph;
  std::vector<VertexRole> roles;
  Vertex hub = 0;
  std::vector<Occurrence> occurrences;
  int subdivisions = 0;
};

/// Vertex 0 is the hub z, v_i is 1+2i, v_i' is 2+2i, clause vertex (j, s) is
/// 1+2n+3j+s. 1+2n+3m vertices and 3n+6m edges.
GadgetGraph build_gadget(const NaeFormula& f);

/// Replaces every occurrence edge by a path with p inner vertices, each also
/// adjacent to the hub. Inner vertices are appended after the clause vertices,
/// occurrence by occurrence. Requires an unsubdivided gadget.
GadgetGraph subdivide_gadget(const GadgetGraph& gg, int p);

struct GadgetVerification {
  int t = 0;
  std::optional<int> diameter;
  bool diameter_ok = false;
  /// Induced cycle counts by length, for every length 3..t.
  std::map<int, std::size_t> census;
  bool even_free = false;
  bool only_c3_c5 = false;
  /// Induced C5s that avoid the hub (reported, not part of passed).
  std::size_t c5_without_hub = 0;
  bool passed = false;
  std::vector<std::string> notes;
};

/// Diameter at most 4, no induced C4, C6, ..., Ct, and only C3/C5 up to
/// length t. Requires t even, 6 <= t <= 12.
GadgetVerification verify_gadget(const GadgetGraph& gg, int t);

/// nae_satisfiable(f) agrees with 3-colourability of the gadget graph
/// (brute-force oracle). BudgetError propagates for oversized gadgets.
bool check_equivalence(const NaeFormula& f, const GadgetGraph& gg);

}  // namespace l3col
