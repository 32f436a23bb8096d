#include "l3col/classify.hpp"

#include "l3col/errors.hpp"

namespace l3col {

std::string_view class_name(GraphClass c) {
  switch (c) {
    case GraphClass::C5Free: return "c5free";
    case GraphClass::C6Free: return "c6free";
    case GraphClass::C4C7Free: return "c4c7";
    case GraphClass::C4C8Free: return "c4c8";
    case GraphClass::C4C9Free: return "c4c9";
  }
  return "?";
}

std::optional<GraphClass> class_from_name(std::string_view name) {
  for (GraphClass c : {GraphClass::C5Free, GraphClass::C6Free, GraphClass::C4C7Free,
                       GraphClass::C4C8Free, GraphClass::C4C9Free})
    if (class_name(c) == name) return c;
  return std::nullopt;
}

namespace {

template <class FreeOf>
bool member(GraphClass c, FreeOf&& free_of) {
  switch (c) {
    case GraphClass::C5Free: return free_of(5);
    case GraphClass::C6Free: return free_of(6);
    case GraphClass::C4C7Free: return free_of(4) && free_of(7);
    case GraphClass::C4C8Free: return free_of(4) && free_of(8);
    case GraphClass::C4C9Free: return free_of(4) && free_of(9);
  }
  return false;
}

}  // namespace

bool ClassProfile::in_class(GraphClass c) const {
  return diameter_at_most_2() && member(c, [&](int k) { return free_of(k); });
}

ClassProfile classify(const Graph& g) {
  ClassProfile p;
  p.diameter = diameter(g);
  for (int k = 3; k <= 9; ++k) p.cycle_free[k] = !find_induced_cycle(g, k).has_value();
  p.has_k4 = find_k4(g).has_value();
  p.bipartite = bipartition(g).has_value();
  return p;
}

std::string describe(const ClassProfile& p) {
  std::string s = "diameter=" + (p.diameter ? std::to_string(*p.diameter) : std::string("inf"));
  for (int k = 3; k <= 9; ++k)
    if (p.free_of(k)) s += ", C" + std::to_string(k) + "-free";
  s += p.has_k4 ? ", K4=present" : ", K4=absent";
  if (p.bipartite) s += ", bipartite";
  return s;
}

ClassFacts::ClassFacts(const Graph& g, CycleSearchLimits limits) : g_(g), limits_(limits) {}

bool ClassFacts::diameter_at_most_2() {
  if (!diam2_) diam2_ = l3col::diameter_at_most(g_, 2);
  return *diam2_;
}

bool ClassFacts::cycle_free(int k) {
  if (k < 3 || k >= static_cast<int>(free_.size())) throw ContractError("cycle length out of range");
  auto& slot = free_[static_cast<std::size_t>(k)];
  if (!slot) slot = !find_induced_cycle(g_, k, limits_).has_value();
  return *slot;
}

bool ClassFacts::has_k4() {
  if (!k4_) k4_ = find_k4(g_).has_value();
  return *k4_;
}

const std::optional<Bipartition>& ClassFacts::bipartition() {
  if (!bip_done_) {
    bip_ = l3col::bipartition(g_);
    bip_done_ = true;
  }
  return bip_;
}

bool ClassFacts::in_class(GraphClass c) {
  return diameter_at_most_2() && member(c, [&](int k) { return cycle_free(k); });
}

}  // namespace l3col
