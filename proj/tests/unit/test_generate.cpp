#include <doctest.h>

#include <array>

#include "l3col/classify.hpp"
#include "l3col/errors.hpp"
#include "l3col/generate.hpp"
#include "reference.hpp"

using namespace l3col;

namespace {

constexpr std::array<GraphClass, 5> kClasses{GraphClass::C5Free, GraphClass::C6Free, GraphClass::C4C7Free,
                                             GraphClass::C4C8Free, GraphClass::C4C9Free};

}  // namespace

TEST_CASE("generator examples") {
  const ClassProfile a = classify(gen_class_graph(GraphClass::C5Free, 8, 1));
  CHECK(a.free_of(5));
  CHECK(a.diameter_at_most_2());
  const ClassProfile b = classify(gen_class_graph(GraphClass::C4C8Free, 10, 7));
  CHECK(b.free_of(4));
  CHECK(b.free_of(8));
  CHECK(b.diameter_at_most_2());
  CHECK(gen_class_graph(GraphClass::C5Free, 1, 99).order() == 1);
  CHECK(gen_class_graph(GraphClass::C4C9Free, 0, 99).order() == 0);
}

TEST_CASE("same seed, same instance") {
  for (GraphClass c : kClasses) {
    const Instance x = gen_class_instance(c, 11, 5);
    const Instance y = gen_class_instance(c, 11, 5);
    CHECK(x.graph == y.graph);
    CHECK(x.lists == y.lists);
  }
}

TEST_CASE("property: every generated graph lies in its class (reference check)") {
  for (GraphClass c : kClasses) {
    for (int s = 0; s < 120; ++s) {
      const int n = 1 + s % 12;
      const Graph g = gen_class_graph(c, n, 700 + s);
      CHECK(g.order() == n);
      const auto d = ref::diameter(g);
      CHECK((d && *d <= 2));
      CHECK_FALSE(ref::has_k4(g));
      switch (c) {
        case GraphClass::C5Free: CHECK(ref::induced_cycles(g, 5) == 0); break;
        case GraphClass::C6Free: CHECK(ref::induced_cycles(g, 6) == 0); break;
        case GraphClass::C4C7Free:
          CHECK(ref::induced_cycles(g, 4) == 0);
          CHECK(ref::induced_cycles(g, 7) == 0);
          break;
        case GraphClass::C4C8Free:
          CHECK(ref::induced_cycles(g, 4) == 0);
          CHECK(ref::induced_cycles(g, 8) == 0);
          break;
        case GraphClass::C4C9Free:
          CHECK(ref::induced_cycles(g, 4) == 0);
          CHECK(ref::induced_cycles(g, 9) == 0);
          break;
      }
    }
  }
}

TEST_CASE("large members use the hub construction") {
  for (GraphClass c : {GraphClass::C5Free, GraphClass::C6Free, GraphClass::C4C7Free}) {
    const Graph g = gen_class_graph(c, 200, 3);
    CHECK(g.order() == 200);
    CHECK(classify(g).in_class(c));
  }
}

TEST_CASE("K4 allowed on request") {
  GenOptions opt;
  opt.k4_free = false;
  bool saw = false;
  for (int s = 0; s < 200 && !saw; ++s) saw = ref::has_k4(gen_class_graph(GraphClass::C5Free, 9, s, opt));
  CHECK(saw);
}

TEST_CASE("random lists") {
  Rng rng(1);
  const ListAssignment full = random_lists(50, 0.0, rng);
  for (auto s : full) CHECK(s == ColourSet::full());
  const ListAssignment small = random_small_lists(50, rng);
  for (auto s : small) {
    CHECK(s.size() >= 1);
    CHECK(s.size() <= 2);
  }
}
