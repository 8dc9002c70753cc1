#include <doctest.h>

#include "homlab/catalog.hpp"
#include "homlab/digraph.hpp"
#include "homlab/paths.hpp"
#include "homlab/taxonomy.hpp"
#include "oracles.hpp"

using namespace homlab;

namespace {

std::vector<Arc> arcs_of(const Digraph& g) { return g.arcs(); }

Digraph diamond() { return transitive_hull(add_loops(Digraph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}))); }

}  // namespace

TEST_CASE("loop removal") {
  const Digraph path(3, {{0, 1}, {1, 2}});
  CHECK(strip_loops(path) == path);
  CHECK(arcs_of(strip_loops(chain(2))) == std::vector<Arc>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(strip_loops(singleton_with_loop()).arc_count() == 0);
}

TEST_CASE("intervals of a chain") {
  const Digraph c2 = chain(2);
  CHECK(iota(c2, 0, 2) == 3);
  CHECK(iota(c2, 0, 1) == 2);
  CHECK(members(interval(c2, 0, 1)) == std::vector<Vertex>{0, 1});
  CHECK(interval(c2, 1, 1).test(1));
  CHECK_THROWS_AS(iota(c2, 2, 0), Error);
}

TEST_CASE("transitive hull") {
  CHECK(transitive_hull(chain(3)) == chain(3));
  CHECK(transitive_hull(Digraph(3, {{0, 1}, {1, 2}})) == Digraph(3, {{0, 1}, {1, 2}, {0, 2}}));
  const Digraph cycle(2, {{0, 1}, {1, 0}});
  CHECK(transitive_hull(cycle) == Digraph(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
}

TEST_CASE("transitive reduction and cover digraph") {
  const Digraph c3 = chain(3);
  CHECK(arcs_of(cover_digraph(c3)) == std::vector<Arc>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(transitive_reduction(c3).loop_count() == 4);
  CHECK(cover_digraph(antichain(3)).arc_count() == 0);
  CHECK(arcs_of(cover_digraph(diamond())) == std::vector<Arc>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK_THROWS_AS(transitive_reduction(Digraph(2, {{0, 1}, {1, 0}})), Error);
}

TEST_CASE("chains and the singleton") {
  CHECK(chain(0) == singleton_with_loop());
  CHECK(chain(0).arc_count() == 1);
  for (std::size_t n = 0; n <= 5; ++n) {
    CHECK(chain(n).order() == n + 1);
    CHECK(chain(n).arc_count() == (n + 1) * (n + 2) / 2);
  }
}

TEST_CASE("isolated vertices") {
  const Digraph g(3, {{0, 1}, {2, 2}});
  CHECK(members(isolated_vertices(g)) == std::vector<Vertex>{2});
  CHECK(is_isolated(g, 2));
  CHECK_FALSE(is_isolated(g, 0));
}

TEST_CASE("reduction is the unique arc-minimal digraph with the same hull") {
  // Property over T_a digraphs with at most 4 vertices: same hull, and
  // dropping any single proper arc changes the hull.
  for (const Digraph& g : generate({CatalogKind::Ta}, 4).members) {
    const Digraph rd = transitive_reduction(g);
    const Digraph hull = transitive_hull(g);
    REQUIRE(transitive_hull(rd) == hull);
    CHECK(transitive_hull(hull) == hull);
    CHECK(in_Ta(hull));
    const auto arcs = rd.arcs();
    for (std::size_t skip = 0; skip < arcs.size(); ++skip) {
      if (arcs[skip].first == arcs[skip].second) continue;
      std::vector<Arc> rest;
      for (std::size_t i = 0; i < arcs.size(); ++i) {
        if (i != skip) rest.push_back(arcs[i]);
      }
      CHECK_FALSE(transitive_hull(Digraph(g.order(), rest)) == hull);
    }
  }
}

TEST_CASE("acyclicity against sink peeling") {
  oracle::for_each_relation(3, -1, [](const Digraph& g) {
    CHECK(is_loopless_acyclic(g) == oracle::loopless_part_acyclic(g));
    CHECK(in_Ta_via_hull(g) == in_Ta(g));
  });
}

TEST_CASE("relabel and disjoint union") {
  const std::vector<Vertex> perm{2, 0, 1};
  const Digraph g = relabel(Digraph(3, {{0, 1}}), perm);
  CHECK(g == Digraph(3, {{2, 0}}));
  const Digraph u = disjoint_union(chain(1), Digraph(1));
  CHECK(u.order() == 3);
  CHECK(u.arc_count() == 3);
}
