#include <doctest.h>

#include <algorithm>
#include <set>

#include "l3col/errors.hpp"
#include "l3col/families.hpp"
#include "l3col/generate.hpp"
#include "l3col/patterns.hpp"
#include "reference.hpp"

using namespace l3col;
namespace fam = l3col::families;

TEST_CASE("frozen induced cycle counts") {
  // values from ref::induced_cycles (subset enumeration)
  const Graph p = fam::petersen();
  CHECK(enumerate_induced_cycles(p, 5).size() == 12);
  CHECK(enumerate_induced_cycles(p, 6).size() == 10);
  for (int k : {3, 4, 7, 8, 9}) CHECK(enumerate_induced_cycles(p, k).empty());
  CHECK(enumerate_induced_cycles(fam::complete_bipartite(3, 3), 4).size() == 9);
  CHECK(enumerate_induced_cycles(fam::wheel(5), 3).size() == 5);
  CHECK(enumerate_induced_cycles(fam::wheel(5), 5).size() == 1);
  CHECK(enumerate_induced_cycles(fam::hoffman_singleton(), 5).size() == 1260);
}

TEST_CASE("property: cycle enumeration agrees with subset enumeration") {
  Rng rng(5);
  for (int i = 0; i < 300; ++i) {
    const int n = 3 + i % 7;
    const Graph g = random_graph(n, 0.3 + 0.05 * (i % 7), rng);
    for (int k = 3; k <= n; ++k) {
      const auto cycles = enumerate_induced_cycles(g, k);
      CHECK(cycles.size() == ref::induced_cycles(g, k));
      std::set<std::vector<Vertex>> sets;
      for (const auto& c : cycles) {
        CHECK(is_induced_cycle(g, c.vertices));
        // canonical: least vertex first, second below last
        CHECK(c.vertices.front() == *std::min_element(c.vertices.begin(), c.vertices.end()));
        CHECK(c.vertices[1] < c.vertices.back());
        auto s = c.vertices;
        std::sort(s.begin(), s.end());
        sets.insert(s);
      }
      CHECK(sets.size() == cycles.size());
      CHECK(std::is_sorted(cycles.begin(), cycles.end(),
                           [](const auto& a, const auto& b) { return a.vertices < b.vertices; }));
      const auto first = find_induced_cycle(g, k);
      CHECK(first.has_value() == !cycles.empty());
      if (first) CHECK(*first == cycles.front());
    }
  }
}

TEST_CASE("enumeration cap raises") {
  CycleSearchLimits lim;
  lim.max_cycles = 5;
  CHECK_THROWS_AS(enumerate_induced_cycles(fam::petersen(), 5, lim), EnumerationOverflow);
}

TEST_CASE("induced paths") {
  const Graph p = fam::path(5);
  CHECK(has_induced_path(p, 0, 4, 5));
  CHECK_FALSE(has_induced_path(p, 0, 4, 4));
  CHECK(has_induced_path(fam::cycle(6), 0, 3, 4));
  CHECK_FALSE(has_induced_path(fam::cycle(6), 0, 3, 5));
}

TEST_CASE("property: induced path exists iff adding the edge creates that cycle") {
  Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    const int n = 4 + i % 5;
    const Graph g = random_graph(n, 0.4, rng);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) {
        if (g.adjacent(u, v)) continue;
        auto e = g.edges();
        e.push_back({u, v});
        const Graph h(n, e);
        for (int k = 3; k <= n; ++k) {
          bool through = false;
          for (const auto& c : enumerate_induced_cycles(h, k)) {
            const auto& vs = c.vertices;
            for (std::size_t j = 0; j < vs.size(); ++j) {
              const Vertex a = vs[j], b = vs[(j + 1) % vs.size()];
              if ((a == u && b == v) || (a == v && b == u)) through = true;
            }
          }
          CHECK(has_induced_path(g, u, v, k) == through);
        }
      }
  }
}

TEST_CASE("triangle or induced C5") {
  const auto c5 = find_triangle_or_induced_c5(fam::cycle(5));
  REQUIRE(std::holds_alternative<InducedCycle>(c5));
  CHECK(std::get<InducedCycle>(c5).length() == 5);
  const auto w = find_triangle_or_induced_c5(fam::wheel(5));
  REQUIRE(std::holds_alternative<Triangle>(w));
  CHECK_THROWS_AS(find_triangle_or_induced_c5(fam::complete_bipartite(2, 2)), ContractError);
  CHECK_THROWS_AS(find_triangle_or_induced_c5(fam::cycle(7)), ContractError);
}

TEST_CASE("K4 and triangle finders") {
  CHECK(find_k4(fam::complete(4)) == Quadruple{0, 1, 2, 3});
  CHECK_FALSE(find_k4(fam::wheel(5)).has_value());
  CHECK(find_k4(fam::wheel(3)).has_value());
  CHECK(find_triangle(fam::diamond()).has_value());
  CHECK_FALSE(find_triangle(fam::petersen()).has_value());
}

TEST_CASE("diamond and bull sites on the defining graphs") {
  const Graph d = fam::diamond();
  const auto ds = diamond_sites_at(d, 2);
  REQUIRE(ds.size() == 1);
  CHECK(ds[0] == DiamondSite{0, 1, 2, 3});
  CHECK(diamond_sites_at(d, 0).empty());
  const Graph b = fam::bull();
  const auto bs = bull_sites_at(b, 2);
  REQUIRE(bs.size() == 1);
  CHECK(bs[0] == BullSite{3, 4, 2, 0, 1});
  CHECK(is_bull_site(b, bs[0]));
  CHECK(bull_sites_at(b, 0).empty());
}

TEST_CASE("property: site lists match brute force") {
  Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    const int n = 4 + i % 5;
    const Graph g = random_graph(n, 0.5, rng);
    for (Vertex x = 0; x < n; ++x) {
      std::size_t dcount = 0;
      for (Vertex y = 0; y < n; ++y)
        for (Vertex u = 0; u < n; ++u)
          for (Vertex v = u + 1; v < n; ++v) {
            const DiamondSite s{u, v, x, y};
            if (std::set<Vertex>{u, v, x, y}.size() == 4 && is_diamond_site(g, s)) ++dcount;
          }
      const auto ds = diamond_sites_at(g, x);
      CHECK(ds.size() == dcount);
      for (const auto& s : ds) CHECK(is_diamond_site(g, s));

      std::size_t bcount = 0;
      for (Vertex a = 0; a < n; ++a)
        for (Vertex c = a + 1; c < n; ++c)
          for (Vertex u = 0; u < n; ++u)
            for (Vertex v = 0; v < n; ++v) {
              const BullSite s{u, v, x, a, c};
              if (std::set<Vertex>{u, v, x, a, c}.size() == 5 && is_bull_site(g, s)) ++bcount;
            }
      const auto bs = bull_sites_at(g, x);
      CHECK(bs.size() == bcount);
      for (const auto& s : bs) CHECK(is_bull_site(g, s));
    }
  }
}
