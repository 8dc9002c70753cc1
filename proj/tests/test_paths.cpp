#include <doctest.h>

#include "homlab/catalog.hpp"
#include "homlab/paths.hpp"
#include "homlab/taxonomy.hpp"
#include "oracles.hpp"

using namespace homlab;

namespace {

/// a < b < c < d plus z with a < z < d.
Digraph chain_with_z() {
  return transitive_hull(add_loops(Digraph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 3}})));
}

}  // namespace

TEST_CASE("maximal paths of a chain") {
  for (std::size_t n = 0; n <= 4; ++n) {
    const PathStructure ps = analyze_paths(chain(n));
    CHECK(ps.height == n);
    REQUIRE(ps.maximal.size() == 1);
    CHECK(ps.maximal[0].length() == n);
    CHECK(ps.top_vertices.count() == n + 1);
    for (Vertex v = 0; v <= n; ++v) CHECK(ps.position[v] == static_cast<int>(v));
  }
}

TEST_CASE("chain with a side vertex") {
  const PathStructure ps = analyze_paths(chain_with_z());
  CHECK(ps.height == 3);
  CHECK(members(ps.off_top) == std::vector<Vertex>{4});
  CHECK(ps.position[4] == -1);
}

TEST_CASE("isolated vertex of a flat poset lies off the top paths") {
  const Digraph g = add_loops(Digraph(3, {{0, 1}}));
  const PathStructure ps = analyze_paths(g);
  CHECK(ps.height == 1);
  CHECK(ps.off_top.test(2));
}

TEST_CASE("positions on disjoint chains and on an N") {
  const PathStructure two = analyze_paths(disjoint_union(chain(2), chain(2)));
  CHECK(two.position == std::vector<int>{0, 1, 2, 0, 1, 2});
  // a=0 < c=2, b=1 < c, b < d=3
  const PathStructure n = analyze_paths(add_loops(Digraph(4, {{0, 2}, {1, 2}, {1, 3}})));
  CHECK(n.position == std::vector<int>{0, 0, 1, 1});
}

TEST_CASE("lambda maps") {
  const auto [lambda, lambda_hat] = lambda_maps(chain(3), 3);
  CHECK(lambda.image == std::vector<Vertex>{0, 1, 2, 3});
  const auto [iso, iso_hat] = lambda_maps(Digraph(1), 2);
  CHECK(iso(0) == 0);
  CHECK(iso_hat(0) == 2);
  const auto [lz, lz_hat] = lambda_maps(chain_with_z(), 3);
  CHECK(lz(4) == 1);
  CHECK(lz_hat(4) == 1);
  CHECK(lz_hat(3) == 3);
}

TEST_CASE("path facts on T_a digraphs with at most 4 vertices") {
  for (const Digraph& g : generate({CatalogKind::Ta}, 4).members) {
    const PathStructure ps = analyze_paths(g);
    CHECK(ps.height == oracle::longest_path(strip_loops(g)));
    const Digraph cover = cover_digraph(g);
    for (const PathSeq& p : all_paths(g)) {
      // Every path is recovered from its vertex set.
      const auto rebuilt = path_from_vertex_set(g, p.vertex_set(g.order()));
      REQUIRE(rebuilt);
      CHECK(*rebuilt == p);
    }
    for (const PathSeq& p : all_paths(cover)) CHECK(is_path(g, p));
    for (const PathSeq& p : ps.maximal) {
      CHECK(is_path(cover, p));
      if (g.is_reflexive()) {
        for (std::size_t i = 1; i <= p.length(); ++i) CHECK(iota(g, p[i - 1], p[i]) == 2);
      }
    }
  }
}

TEST_CASE("path reconstruction fails on a cycle") {
  const Digraph cycle(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK_FALSE(path_from_vertex_set(cycle, full_set(3)));
}

TEST_CASE("concatenation") {
  const PathSeq p{{0, 1}};
  const PathSeq q{{1, 2, 3}};
  CHECK(concatenate(p, q) == PathSeq{{0, 1, 2, 3}});
  CHECK(is_path(chain(3), concatenate(p, q)));
}
