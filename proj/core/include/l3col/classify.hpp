#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "l3col/graph.hpp"
#include "l3col/patterns.hpp"

namespace l3col {

/// The five graph classes with a dedicated polynomial solver. Membership
/// always includes diameter at most 2.
enum class GraphClass { C5Free, C6Free, C4C7Free, C4C8Free, C4C9Free };

/// "c5free", "c6free", "c4c7", "c4c8", "c4c9".
std::string_view class_name(GraphClass c);
std::optional<GraphClass> class_from_name(std::string_view name);

struct ClassProfile {
  /// nullopt when the graph is disconnected.
  std::optional<int> diameter;
  /// cycle_free[k] for k in 3..9 (k = 3 means triangle-free).
  std::array<bool, 10> cycle_free{};
  bool has_k4 = false;
  bool bipartite = false;

  bool free_of(int k) const { return cycle_free.at(static_cast<std::size_t>(k)); }
  bool diameter_at_most_2() const { return diameter && *diameter <= 2; }
  bool in_class(GraphClass c) const;
};

ClassProfile classify(const Graph& g);

/// "diameter=2, C3-free, C4-free, C7-free, K4=absent".
std::string describe(const ClassProfile& p);

/// Lazily computed membership facts, so drivers that delegate to each other
/// do not repeat the same searches.
class ClassFacts {
 public:
  explicit ClassFacts(const Graph& g, CycleSearchLimits limits = {});

  const Graph& graph() const { return g_; }
  bool diameter_at_most_2();
  bool cycle_free(int k);
  bool has_k4();
  const std::optional<Bipartition>& bipartition();
  bool in_class(GraphClass c);

 private:
  const Graph& g_;
  CycleSearchLimits limits_;
  std::optional<bool> diam2_;
  std::array<std::optional<bool>, 13> free_{};
  std::optional<bool> k4_;
  bool bip_done_ = false;
  std::optional<Bipartition> bip_;
};

}  // namespace l3col
