#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "l3col/graph.hpp"
#include "l3col/lists.hpp"

namespace l3col {

/// Implication graph of a 2-CNF over `variables` booleans.
/// Literal 2*x is "x true", 2*x+1 is "x false".
class ImplicationGraph {
 public:
  explicit ImplicationGraph(int variables);

  static constexpr int pos(int x) { return 2 * x; }
  static constexpr int neg(int x) { return 2 * x + 1; }
  static constexpr int negate(int lit) { return lit ^ 1; }

  /// Adds (a or b) as the two implications !a -> b and !b -> a.
  void add_clause(int a, int b);
  void add_unit(int a) { add_clause(a, a); }

  int variables() const noexcept { return vars_; }
  std::size_t implication_count() const noexcept { return from_.size(); }
  /// Implication edges as (from, to) literal pairs in insertion order.
  std::vector<std::pair<int, int>> implications() const;

  /// SCC label per literal; labels are in reverse topological order
  /// (a label never points to a larger one).
  std::vector<int> components() const;

  /// Satisfying assignment, or nullopt when some x and !x share a component.
  std::optional<std::vector<bool>> satisfy() const;

 private:
  int vars_;
  std::vector<int> from_;
  std::vector<int> to_;
};

/// Decides list colouring when every list has one or two colours.
/// Throws ContractError on an empty list or a list of size 3.
std::optional<Colouring> solve_2list(const Graph& g, const ListAssignment& L);

}  // namespace l3col
