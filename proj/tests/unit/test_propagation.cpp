#include <doctest.h>

#include "l3col/errors.hpp"
#include "l3col/families.hpp"
#include "l3col/generate.hpp"
#include "l3col/oracle.hpp"
#include "l3col/propagation.hpp"
#include "reference.hpp"

using namespace l3col;
namespace fam = l3col::families;

namespace {

ColourSet cs(unsigned m) { return ColourSet::from_mask(m); }

// Naive fixpoint of Rules 3-5 using the single-step functions.
ListAssignment naive_fixpoint(const Graph& g, ListAssignment L, bool& emptied) {
  emptied = false;
  for (;;) {
    if (rule_no_empty(L)) {
      emptied = true;
      return L;
    }
    std::optional<RuleStep> s = rule_single_colour(g, L);
    if (!s) s = rule_diamond(g, L);
    if (!s) s = rule_bull(g, L);
    if (!s) return L;
    apply_step(L, *s);
  }
}

}  // namespace

TEST_CASE("rule set names") {
  CHECK(RuleSet::parse("basic") == RuleSet::basic());
  CHECK(RuleSet::parse("none") == RuleSet::none());
  CHECK(RuleSet::parse("1,2,3") == RuleSet{true, false, false, false, false});
  CHECK(RuleSet::parse("3, 5,c6").str() == "3,5,c6");
  CHECK(RuleSet::parse("all").str() == "3,4,5,c6,c7");
  CHECK(RuleSet::none().str() == "none");
  CHECK_THROWS_AS(RuleSet::parse("3,9"), InputError);
  CHECK(rule_tag(RuleId::Diamond) == "R4");
  CHECK(rule_from_tag("C7") == RuleId::C7);
}

TEST_CASE("single-colour rule") {
  ListAssignment L{cs(1), cs(7), cs(7)};
  const auto s = rule_single_colour(fam::path(3), L);
  REQUIRE(s);
  REQUIRE(s->size() == 1);
  CHECK((*s)[0].vertex == 1);
  CHECK((*s)[0].before == cs(7));
  CHECK((*s)[0].after == cs(6));
}

TEST_CASE("diamond rule intersects the tips") {
  ListAssignment L{cs(7), cs(7), cs(3), cs(6)};
  const auto s = rule_diamond(fam::diamond(), L);
  REQUIRE(s);
  REQUIRE(s->size() == 2);
  apply_step(L, *s);
  CHECK(L[2] == cs(2));
  CHECK(L[3] == cs(2));
}

TEST_CASE("bull rule fixes the apex") {
  ListAssignment L(5, ColourSet::full());
  L[3] = L[4] = cs(2);
  const auto s = rule_bull(fam::bull(), L);
  REQUIRE(s);
  CHECK((*s)[0].vertex == 2);
  CHECK((*s)[0].after == cs(2));
}

TEST_CASE("cycle rules") {
  const std::vector<Vertex> c6{0, 1, 2, 3, 4, 5};
  ListAssignment L(6, ColourSet::full());
  L[0] = cs(1);
  L[1] = cs(2);
  L[2] = cs(4);
  const auto s6 = rule_c6_on(c6, L);
  REQUIRE(s6);
  CHECK((*s6)[0].vertex == 4);
  CHECK((*s6)[0].after == cs(2));

  const std::vector<Vertex> c7{0, 1, 2, 3, 4, 5, 6};
  ListAssignment M(7, ColourSet::full());
  M[0] = cs(1);
  M[1] = cs(2);
  M[2] = cs(4);
  M[3] = cs(2);
  const auto s7 = rule_c7_on(c7, M);
  REQUIRE(s7);
  CHECK((*s7)[0].vertex == 5);
  CHECK((*s7)[0].after == cs(6));
  CHECK_THROWS_AS(rule_c7_on(c6, M), ContractError);
}

TEST_CASE("trace text round trip") {
  RuleTrace t;
  t.entries.push_back({RuleId::SingleColour, {0, 1}, 1, cs(7), cs(6)});
  t.entries.push_back({RuleId::Diamond, {0, 1, 2, 3}, 2, cs(3), cs(2)});
  const std::string text = t.serialize();
  CHECK(text.substr(0, text.find('\n')) == "R3 site=0,1 vertex=1 123->23");
  CHECK(RuleTrace::parse(text) == t);
  CHECK_THROWS_AS(RuleTrace::parse("R3 site=0,1 vertex=1 123->23\nR9 x\n"), InputError);
  ListAssignment L(4, ColourSet::full());
  L[0] = cs(1);
  CHECK_THROWS_AS(t.replay(L), ContractError);
  L[2] = cs(3);
  const auto R = t.replay(L);
  CHECK(R[1] == cs(6));
  CHECK(R[2] == cs(2));
}

TEST_CASE("propagation decides K4 and C5 extremes") {
  CHECK(propagate(fam::complete(4), full_lists(4), RuleSet::basic()).outcome == Outcome::Unknown);
  ListAssignment L(4, ColourSet::full());
  L[0] = cs(1);
  L[1] = cs(2);
  L[2] = cs(4);
  const auto r = propagate(fam::complete(4), L, RuleSet::basic());
  CHECK(r.outcome == Outcome::No);
  CHECK(r.decided_by == RuleId::NoEmpty);
  ListAssignment M(5, ColourSet::full());
  M[0] = cs(1);
  M[1] = cs(2);
  M[2] = cs(1);
  const auto y = propagate(fam::cycle(5), M, RuleSet::basic());
  REQUIRE(y.outcome == Outcome::Yes);
  CHECK(respects(y.colouring, fam::cycle(5), M));
}

TEST_CASE("property: engine outcome is sound and matches the naive fixpoint") {
  Rng rng(7);
  std::size_t yes = 0, no = 0, unknown = 0;
  for (int i = 0; i < 3000; ++i) {
    const int n = 2 + i % 8;
    const Graph g = random_graph(n, 0.3 + 0.06 * (i % 8), rng);
    const ListAssignment L = random_lists(n, 0.3 + 0.05 * (i % 8), rng);
    const auto r = propagate(g, L, RuleSet::basic());
    const auto count = ref::count(g, L);
    bool emptied = false;
    const ListAssignment fix = naive_fixpoint(g, L, emptied);
    CHECK(r.trace.replay(L) == r.lists);
    CHECK(r.steps == r.trace.entries.size());
    switch (r.outcome) {
      case Outcome::Yes:
        ++yes;
        CHECK(respects(r.colouring, g, L));
        CHECK_FALSE(emptied);
        CHECK(r.lists == fix);
        break;
      case Outcome::No:
        ++no;
        CHECK(count == 0);
        break;
      case Outcome::Unknown:
        ++unknown;
        CHECK_FALSE(emptied);
        CHECK(r.lists == fix);
        break;
    }
    if (emptied) CHECK(r.outcome == Outcome::No);
  }
  CHECK(yes > 100);
  CHECK(no > 100);
  CHECK(unknown > 100);
}

TEST_CASE("property: every basic rule step preserves the colouring count") {
  Rng rng(77);
  std::size_t steps = 0;
  for (int i = 0; i < 1500; ++i) {
    const int n = 3 + i % 6;
    const Graph g = random_graph(n, 0.5, rng);
    ListAssignment L = random_lists(n, 0.4, rng);
    for (int guard = 0; guard < 40 && !rule_no_empty(L); ++guard) {
      std::optional<RuleStep> s;
      switch (guard % 3) {
        case 0: s = rule_single_colour(g, L); break;
        case 1: s = rule_diamond(g, L); break;
        default: s = rule_bull(g, L); break;
      }
      if (!s) s = rule_single_colour(g, L);
      if (!s) s = rule_diamond(g, L);
      if (!s) s = rule_bull(g, L);
      if (!s) break;
      const auto before = ref::count(g, L);
      apply_step(L, *s);
      CHECK(ref::count(g, L) == before);
      ++steps;
    }
  }
  CHECK(steps > 1000);
}

TEST_CASE("rules beyond Rule 3 need the adjacency matrix") {
  std::vector<Edge> e{{0, 1}};
  const Graph big(9000, e);
  CHECK_THROWS_AS(propagate(big, full_lists(9000), RuleSet::basic()), ConfigError);
  ListAssignment L = full_lists(9000);
  L[0] = cs(1);
  const auto r = propagate(big, L, RuleSet::parse("3"));
  CHECK(r.lists[1] == cs(6));
}
