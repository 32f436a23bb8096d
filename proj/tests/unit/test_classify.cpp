#include <doctest.h>

#include "l3col/classify.hpp"
#include "l3col/families.hpp"
#include "l3col/generate.hpp"
#include "reference.hpp"

using namespace l3col;
namespace fam = l3col::families;

TEST_CASE("Petersen profile") {
  const ClassProfile p = classify(fam::petersen());
  CHECK(p.diameter == 2);
  CHECK(p.free_of(3));
  CHECK(p.free_of(4));
  CHECK_FALSE(p.free_of(5));
  CHECK_FALSE(p.free_of(6));
  CHECK(p.free_of(7));
  // subset enumeration finds no induced C8 or C9 either
  CHECK(p.free_of(8));
  CHECK(p.free_of(9));
  CHECK_FALSE(p.has_k4);
  CHECK(describe(p) == "diameter=2, C3-free, C4-free, C7-free, C8-free, C9-free, K4=absent");
  CHECK(p.in_class(GraphClass::C4C7Free));
  CHECK_FALSE(p.in_class(GraphClass::C5Free));
}

TEST_CASE("class names") {
  CHECK(class_name(GraphClass::C4C8Free) == "c4c8");
  CHECK(class_from_name("c6free") == GraphClass::C6Free);
  CHECK_FALSE(class_from_name("c3free").has_value());
}

TEST_CASE("bipartite and disconnected profiles") {
  const ClassProfile k = classify(fam::complete_bipartite(3, 3));
  CHECK(k.bipartite);
  CHECK(k.in_class(GraphClass::C5Free));
  CHECK(describe(k).find("bipartite") != std::string::npos);
  const ClassProfile e = classify(fam::empty(2));
  CHECK_FALSE(e.diameter.has_value());
  CHECK_FALSE(e.in_class(GraphClass::C5Free));
  CHECK(describe(e).rfind("diameter=inf", 0) == 0);
}

TEST_CASE("property: profile matches reference searches") {
  Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + i % 10;
    const Graph g = random_graph(n, 0.3 + 0.06 * (i % 8), rng);
    const ClassProfile p = classify(g);
    CHECK(p.diameter == ref::diameter(g));
    for (int k = 3; k <= 9; ++k) CHECK(p.free_of(k) == (ref::induced_cycles(g, k) == 0));
    CHECK(p.has_k4 == ref::has_k4(g));
    ClassFacts f(g);
    for (GraphClass c : {GraphClass::C5Free, GraphClass::C6Free, GraphClass::C4C7Free, GraphClass::C4C8Free,
                         GraphClass::C4C9Free})
      CHECK(f.in_class(c) == p.in_class(c));
  }
}

TEST_CASE("K4 and C9 profiles") {
  const ClassProfile k = classify(fam::complete(4));
  CHECK(k.diameter == 1);
  CHECK(k.has_k4);
  CHECK_FALSE(k.free_of(3));
  for (int j = 4; j <= 9; ++j) CHECK(k.free_of(j));
  const ClassProfile c = classify(fam::cycle(9));
  CHECK(c.diameter == 4);
  for (int j = 3; j <= 8; ++j) CHECK(c.free_of(j));
  CHECK_FALSE(c.free_of(9));
}
