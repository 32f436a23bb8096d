#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "l3col/classify.hpp"
#include "l3col/graph.hpp"
#include "l3col/lists.hpp"
#include "l3col/propagation.hpp"

namespace l3col {

// ---- precolouring drivers ---------------------------------------------------

enum class N0Summary { Yes, AllNo, Mixed };
std::string_view summary_name(N0Summary s);

struct BranchRecord {
  Precolouring precolouring;
  Outcome outcome = Outcome::Unknown;
  /// Counted as No without propagating (see N0Options::skip).
  bool inherited = false;
  /// Final lists, kept for Unknown branches only.
  ListAssignment lists;
};

struct N0Options {
  RuleSet rules = RuleSet::basic();
  std::size_t bound = kDefaultPrecolouringBound;
  /// Stop at the first Yes branch (in enumeration order).
  bool stop_on_yes = true;
  /// Worker threads; the result does not depend on this.
  int jobs = 1;
  bool keep_branches = true;
  const CycleCache* cycles = nullptr;
  /// Branches for which this returns true are recorded as No without a
  /// propagation run. Used when an earlier stage already settled them.
  std::function<bool(const Precolouring&)> skip;
};

struct N0Report {
  N0Summary summary = N0Summary::AllNo;
  /// Total colouring when summary is Yes.
  Colouring witness;
  /// Branches in enumeration order, truncated after the first Yes when
  /// stop_on_yes is set. Empty unless keep_branches.
  std::vector<BranchRecord> branches;
  std::size_t yes_branches = 0;
  std::size_t no_branches = 0;
  std::size_t unknown_branches = 0;
  std::size_t inherited_branches = 0;
  std::size_t rule_steps = 0;

  std::size_t total() const { return yes_branches + no_branches + unknown_branches; }
};

/// One full propagation per promising precolouring of N0.
/// Throws ConfigError when |N0| exceeds options.bound.
N0Report full_n0_propagation(const Graph& g, const ListAssignment& L, std::span<const Vertex> N0,
                             const N0Options& options = {});

enum class SubsetPolicy { All, Cycles };

struct SubsetFamily {
  SubsetPolicy kind = SubsetPolicy::Cycles;
  /// Cycle length for the Cycles policy.
  int cycle_length = 6;

  static SubsetFamily all() { return {SubsetPolicy::All, 0}; }
  static SubsetFamily cycles(int k) { return {SubsetPolicy::Cycles, k}; }
};

struct SubsetReport {
  /// For the Cycles policy: the cycle in cyclic order.
  std::vector<Vertex> subset;
  N0Report report;
};

struct PReport {
  N0Summary summary = N0Summary::AllNo;
  Colouring witness;
  /// Set when the family was empty (e.g. no induced cycle of the length).
  bool vacuous = false;
  std::vector<SubsetReport> subsets;
  std::size_t subsets_examined = 0;
  std::size_t branches = 0;
  std::size_t rule_steps = 0;
};

/// Full N0-propagation for every member of the subset family: under All, every
/// vertex set of size at most p (smallest first, lexicographic), under Cycles
/// the vertex sets of induced cycles of the given length. Stops at the first
/// Yes. Requires p <= 7.
PReport full_p_propagation(const Graph& g, const ListAssignment& L, int p, const SubsetFamily& family,
                           const N0Options& options = {});

// ---- solvers ----------------------------------------------------------------

enum class Route { C5Free, C6Free, C4C7Free, C4C8Free, C4C9Free, Exact };
/// "c5-free", "c6-free", "c4c7-free", "c4c8-free", "c4c9-free", "exact".
std::string_view route_name(Route r);

struct SolveStats {
  std::size_t branches = 0;
  std::size_t rule_steps = 0;
  std::size_t subsets = 0;
  std::uint64_t nodes = 0;
  double seconds = 0;
};

struct SolveReport {
  bool yes = false;
  /// Present iff yes.
  Colouring witness;
  /// The algorithm that produced the decision.
  Route route = Route::Exact;
  /// Every driver entered, outermost first.
  std::vector<Route> path;
  /// Short tag for the deciding step, e.g. "k4", "bipartite", "n0", "stage1", "stage2", "search".
  std::string reason;
  std::vector<std::string> notes;
  /// The dispatcher used exact search instead of a class solver.
  bool fallback = false;
  SolveStats stats;
};

struct SolveOptions {
  int jobs = 1;
  /// Stage-1 subset family for the C6/C7 drivers.
  SubsetPolicy stage1 = SubsetPolicy::Cycles;
  /// Exact search: maximum number of search nodes (0 = unlimited).
  std::uint64_t node_budget = 50'000'000;
  /// Exact search: wall-clock limit in seconds (0 = unlimited).
  double time_budget = 0;
  CycleSearchLimits limits;
};

// The class solvers check their preconditions (diameter at most 2 plus the
// forbidden cycles) and throw ContractError when they fail. They throw
// OutOfClassError when a step the class guarantees to be decisive is not.

SolveReport solve_c5free(const Graph& g, const ListAssignment& L, const SolveOptions& opt = {});
SolveReport solve_c6free(const Graph& g, const ListAssignment& L, const SolveOptions& opt = {});
SolveReport solve_c4c7free(const Graph& g, const ListAssignment& L, const SolveOptions& opt = {});
SolveReport solve_c4c8free(const Graph& g, const ListAssignment& L, const SolveOptions& opt = {});
SolveReport solve_c4c9free(const Graph& g, const ListAssignment& L, const SolveOptions& opt = {});

/// Same, reusing (and filling) a facts cache for g.
SolveReport solve_c5free(ClassFacts& facts, const ListAssignment& L, const SolveOptions& opt = {});
SolveReport solve_c6free(ClassFacts& facts, const ListAssignment& L, const SolveOptions& opt = {});
SolveReport solve_c4c7free(ClassFacts& facts, const ListAssignment& L, const SolveOptions& opt = {});
SolveReport solve_c4c8free(ClassFacts& facts, const ListAssignment& L, const SolveOptions& opt = {});
SolveReport solve_c4c9free(ClassFacts& facts, const ListAssignment& L, const SolveOptions& opt = {});

SolveReport solve_class(GraphClass c, const Graph& g, const ListAssignment& L,
                        const SolveOptions& opt = {});

/// Branching search with propagation at every node. Throws BudgetError when
/// the node or time budget runs out.
SolveReport solve_exact(const Graph& g, const ListAssignment& L, const SolveOptions& opt = {});

/// Routes to the first matching class solver, else exact search. Never throws
/// OutOfClassError: such failures fall back to exact search with a note.
SolveReport dispatch_solve(const Graph& g, const ListAssignment& L, const SolveOptions& opt = {});

/// Colour patterns on an induced cycle that stage 1 must always settle. `colours` follows the cycle order.
/// Length 6: some two vertices at distance 2 on the cycle share a colour.
/// Length 7: some colour is used exactly twice, on vertices at distance 2.
bool is_cycle_pattern(std::span<const int> colours);

}  // namespace l3col
