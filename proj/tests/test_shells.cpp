#include <doctest.h>

#include "homlab/catalog.hpp"
#include "homlab/hom_engine.hpp"
#include "homlab/shells.hpp"
#include "homlab/taxonomy.hpp"

using namespace homlab;

namespace {

Digraph poset_from(std::size_t n, std::initializer_list<Arc> covers) {
  return transitive_hull(add_loops(Digraph(n, covers)));
}

/// a < b < c < d with a < z < d.
Digraph chain_with_z() { return poset_from(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 3}}); }

}  // namespace

TEST_CASE("off-top components") {
  CHECK(z_components(chain(3)).empty());
  const auto one = z_components(chain_with_z());
  REQUIRE(one.size() == 1);
  CHECK(members(one[0]) == std::vector<Vertex>{4});
  // Two side vertices between the ends of a chain, unrelated to each other.
  const Digraph two = poset_from(6, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 3}, {0, 5}, {5, 3}});
  CHECK(z_components(two).size() == 2);
}

TEST_CASE("shells of the chain with a side vertex") {
  const Digraph g = chain_with_z();
  const PathStructure ps = analyze_paths(g);
  const auto cap = find_shells(g, ps, z_components(g, ps)[0]);
  REQUIRE(cap);
  CHECK(cap->lower_bound == 0);
  CHECK(cap->upper_bound == 3);
  CHECK(cap->span == 3);
  CHECK(cap->floor == std::vector<std::size_t>{0});
  CHECK(cap->ceiling == std::vector<std::size_t>{3});
  const Digraph open = poset_from(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}});
  const PathStructure ops = analyze_paths(open);
  CHECK_FALSE(find_shells(open, ops, z_components(open, ops)[0]));
  CHECK_FALSE(find_all_shells(open, ops));
}

TEST_CASE("frontier shells lie inside the reachable ones") {
  for (const Digraph& g : generate({CatalogKind::TaghnA, 2}, 5).members) {
    const PathStructure ps = analyze_paths(g);
    for (const VertexSet& z : z_components(g, ps)) {
      const auto [fb, fu] = component_shells(g, ps, z, ShellChoice::frontier);
      const auto [rb, ru] = component_shells(g, ps, z, ShellChoice::reachable);
      for (std::size_t i = 0; i < fb.size(); ++i) {
        CHECK(std::includes(rb[i].begin(), rb[i].end(), fb[i].begin(), fb[i].end()));
        CHECK(std::includes(ru[i].begin(), ru[i].end(), fu[i].begin(), fu[i].end()));
      }
    }
  }
}

TEST_CASE("bounded chain counts") {
  const Digraph z = singleton_with_loop();
  CHECK(bounded_chain_counts(z, {0}, {3}, 3).homs == 4);
  CHECK(bounded_chain_counts(z, {0}, {3}, 3).strict == 2);
  CHECK(bounded_chain_counts(z, {0}, {1}, 1).homs == 2);
  CHECK(bounded_chain_counts(z, {0}, {1}, 1).strict == 0);
  CHECK(bounded_chain_counts(z, {2}, {1}, 3).homs == 0);
  CHECK(bounded_chain_counts(z, {2}, {1}, 3).strict == 0);
  // Two comparable vertices between 0 and 3.
  const BoundedCounts pair = bounded_chain_counts(chain(1), {0, 0}, {3, 3}, 3);
  CHECK(pair.homs == 10);
  CHECK(pair.strict == 1);
}

TEST_CASE("phi") {
  CHECK(phi(chain(3)) == 1);
  CHECK(phi(chain_with_z()) == Rational(1, 2));
  CHECK(phi(disjoint_union(chain_with_z(), chain(3))) == Rational(1, 2));
  CHECK_THROWS_AS(phi(poset_from(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}})), Error);
}

TEST_CASE("phi is the strict share of the J-class") {
  const Digraph g = chain_with_z();
  const Digraph h = chain(3);
  const auto family = top_path_family(g);
  const auto strict = enumerate_homs(g, h, HomKind::strict);
  CHECK(strict.size() == 2);
  CHECK(Rational(strict.size()) == phi(g) * Rational(j_class(g, h, strict[0], h, family).size()));
}
