#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "l3col/graph.hpp"
#include "l3col/lists.hpp"
#include "l3col/patterns.hpp"

namespace l3col {

enum class RuleId { NoEmpty, AllSmall, SingleColour, Diamond, Bull, C6, C7 };

/// Short tag used in traces: R1..R5, C6, C7.
std::string_view rule_tag(RuleId r);
std::optional<RuleId> rule_from_tag(std::string_view tag);

/// Which list reducers are active. Rules 1 and 2 always are.
/// c6/c7 are only sound under the class assumptions of the cycle drivers.
struct RuleSet {
  bool single_colour = true;
  bool diamond = true;
  bool bull = true;
  bool c6 = false;
  bool c7 = false;

  static RuleSet basic() { return {}; }
  static RuleSet none() { return {false, false, false, false, false}; }
  RuleSet with_c6() const { RuleSet r = *this; r.c6 = true; return r; }
  RuleSet with_c7() const { RuleSet r = *this; r.c7 = true; return r; }

  /// Comma-separated names: "3,4,5,c6,c7", "basic", "none", "all".
  /// Throws InputError on an unknown name.
  static RuleSet parse(std::string_view text);
  std::string str() const;

  friend bool operator==(const RuleSet&, const RuleSet&) = default;
};

/// One list change made by a rule application. `site` lists the pattern
/// vertices in rule order (R3: u,v; R4: u,v,x,y; R5: u,v,w,x,y; C6/C7: the cycle
/// in the orientation that matched).
struct TraceEntry {
  RuleId rule = RuleId::SingleColour;
  std::vector<Vertex> site;
  Vertex vertex = 0;
  ColourSet before;
  ColourSet after;
  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

/// A single rule application: one entry, or two for Rule 4.
using RuleStep = std::vector<TraceEntry>;

struct RuleTrace {
  std::vector<TraceEntry> entries;

  /// One line per entry: "R3 site=0,1 vertex=1 12->2".
  std::string serialize() const;
  /// Inverse of serialize. Throws InputError with a line number.
  static RuleTrace parse(std::string_view text);
  /// Applies the entries to L in order. Throws ContractError when an entry's
  /// `before` does not match the current list.
  ListAssignment replay(ListAssignment L) const;

  friend bool operator==(const RuleTrace&, const RuleTrace&) = default;
};

/// Writes a step's `after` values (checking `before`).
void apply_step(ListAssignment& L, const RuleStep& step);

// Single-step reference implementations. Each scans sites in a fixed order
// and returns the first applicable one; they are slow and used for checking
// the engine and for rule-level safety tests.

/// First vertex with an empty list.
std::optional<Vertex> rule_no_empty(const ListAssignment& L);

/// Present iff every list has size at most 2 (and none is empty); holds the
/// 2-list solver's answer.
struct SmallListsVerdict {
  std::optional<Colouring> colouring;
};
std::optional<SmallListsVerdict> rule_all_small(const Graph& g, const ListAssignment& L);

std::optional<RuleStep> rule_single_colour(const Graph& g, const ListAssignment& L);
std::optional<RuleStep> rule_diamond(const Graph& g, const ListAssignment& L);
std::optional<RuleStep> rule_bull(const Graph& g, const ListAssignment& L);
std::optional<RuleStep> rule_c6(const Graph& g, const ListAssignment& L);
std::optional<RuleStep> rule_c7(const Graph& g, const ListAssignment& L);

/// Rule-C6 / Rule-C7 on one induced cycle, first matching orientation.
std::optional<RuleStep> rule_c6_on(std::span<const Vertex> cycle, const ListAssignment& L);
std::optional<RuleStep> rule_c7_on(std::span<const Vertex> cycle, const ListAssignment& L);

/// Induced C6/C7 lists reused across propagate calls on the same graph.
struct CycleCache {
  std::vector<InducedCycle> c6;
  std::vector<InducedCycle> c7;
  bool has_c6 = false;
  bool has_c7 = false;

  /// Enumerates whatever `rules` needs. EnumerationOverflow propagates.
  static CycleCache build(const Graph& g, const RuleSet& rules,
                          const CycleSearchLimits& limits = {});
};

enum class Outcome { Yes, No, Unknown };
std::string_view outcome_name(Outcome o);

struct PropagateOptions {
  bool record_trace = true;
  /// Optional precomputed cycles; built on demand otherwise.
  const CycleCache* cycles = nullptr;
  CycleSearchLimits limits;
};

struct PropagationResult {
  Outcome outcome = Outcome::Unknown;
  /// Total colouring for Yes, empty otherwise.
  Colouring colouring;
  /// Lists at the point the engine stopped.
  ListAssignment lists;
  RuleTrace trace;
  /// Number of list changes.
  std::size_t steps = 0;
  /// NoEmpty or AllSmall for decided outcomes.
  std::optional<RuleId> decided_by;
};

/// Exhaustive application of the enabled rules (full c-propagation).
/// Priority: Rule 1, 3, 4, 5, C6, C7; Rule 2 at the reducer fixpoint.
/// Requires g.has_matrix() when diamond, bull, c6 or c7 is enabled.
PropagationResult propagate(const Graph& g, const ListAssignment& L, const RuleSet& rules,
                            const PropagateOptions& options = {});

}  // namespace l3col
