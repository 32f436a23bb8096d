#include <doctest.h>

#include "l3col/errors.hpp"
#include "l3col/families.hpp"
#include "l3col/generate.hpp"
#include "l3col/graph.hpp"
#include "reference.hpp"

using namespace l3col;
namespace fam = l3col::families;

TEST_CASE("construction merges parallel edges and rejects bad endpoints") {
  std::vector<Edge> e{{0, 1}, {1, 0}, {1, 2}};
  Graph g(3, e);
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.degree(1) == 2);
  std::vector<Edge> loop{{1, 1}};
  CHECK_THROWS_AS(Graph(3, loop), InputError);
  std::vector<Edge> out{{0, 3}};
  CHECK_THROWS_AS(Graph(3, out), InputError);
}

TEST_CASE("edges come back sorted with u < v") {
  std::vector<Edge> e{{3, 1}, {2, 0}, {0, 1}};
  const auto got = Graph(4, e).edges();
  REQUIRE(got.size() == 3);
  CHECK(got[0] == Edge{0, 1});
  CHECK(got[1] == Edge{0, 2});
  CHECK(got[2] == Edge{1, 3});
}

TEST_CASE("family sizes") {
  CHECK(fam::cycle(7).edge_count() == 7);
  CHECK(fam::complete(5).edge_count() == 10);
  CHECK(fam::complete_bipartite(3, 4).edge_count() == 12);
  CHECK(fam::wheel(5).order() == 6);
  CHECK(fam::wheel(5).degree(5) == 5);
  CHECK(fam::petersen().edge_count() == 15);
  const Graph hs = fam::hoffman_singleton();
  CHECK(hs.order() == 50);
  CHECK(hs.edge_count() == 175);
  for (Vertex v = 0; v < 50; ++v) CHECK(hs.degree(v) == 7);
  CHECK(ref::induced_cycles(hs, 3) == 0);
  CHECK(ref::induced_cycles(hs, 4) == 0);
}

TEST_CASE("diameters of standard graphs") {
  CHECK(diameter(fam::cycle(5)) == 2);
  CHECK(diameter(fam::cycle(6)) == 3);
  CHECK(diameter(fam::petersen()) == 2);
  CHECK(diameter(fam::hoffman_singleton()) == 2);
  CHECK(diameter(fam::empty(1)) == 0);
  CHECK_FALSE(diameter(fam::empty(2)).has_value());
  CHECK(diameter_at_most(fam::petersen(), 2));
  CHECK_FALSE(diameter_at_most(fam::cycle(6), 2));
}

TEST_CASE("property: BFS diameter matches Floyd-Warshall") {
  Rng rng(11);
  for (int i = 0; i < 400; ++i) {
    const int n = 1 + i % 11;
    const Graph g = random_graph(n, 0.15 + 0.05 * (i % 12), rng);
    CHECK(diameter(g) == ref::diameter(g));
    const auto d = ref::diameter(g);
    CHECK(diameter_at_most(g, 2) == (d && *d <= 2));
  }
}

TEST_CASE("bipartition and complete bipartite test") {
  const auto b = bipartition(fam::complete_bipartite(2, 3));
  REQUIRE(b);
  CHECK(b->part_a.size() + b->part_b.size() == 5);
  CHECK(is_complete_bipartite(fam::complete_bipartite(2, 3), *b));
  const auto c6 = bipartition(fam::cycle(6));
  REQUIRE(c6);
  CHECK_FALSE(is_complete_bipartite(fam::cycle(6), *c6));
  CHECK_FALSE(bipartition(fam::cycle(5)).has_value());
}

TEST_CASE("induced subgraph and relabel") {
  const Graph p = fam::petersen();
  std::vector<Vertex> outer{0, 1, 2, 3, 4};
  const Graph h = induced_subgraph(p, outer);
  CHECK(h.order() == 5);
  std::vector<Vertex> perm{4, 3, 2, 1, 0, 9, 8, 7, 6, 5};
  const Graph r = relabel(p, perm);
  CHECK(r.edge_count() == 15);
  for (const Edge& e : p.edges()) CHECK(r.adjacent(perm[e.u], perm[e.v]));
}

TEST_CASE("large graphs carry no matrix") {
  std::vector<Edge> e{{0, 9000}};
  Graph g(9001, e);
  CHECK_FALSE(g.has_matrix());
  CHECK(g.adjacent(0, 9000));
  CHECK(fam::petersen().has_matrix());
}
