#include <doctest.h>

#include <json.hpp>

#include "homlab/catalog.hpp"
#include "homlab/taxonomy.hpp"
#include "oracles.hpp"

using namespace homlab;

namespace {

Digraph poset_from(std::size_t n, std::initializer_list<Arc> covers) {
  return transitive_hull(add_loops(Digraph(n, covers)));
}

Digraph diamond() { return poset_from(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

}  // namespace

TEST_CASE("acyclic class") {
  CHECK(in_Ta(diamond()));
  CHECK_FALSE(in_Ta(Digraph(2, {{0, 1}, {1, 0}})));
  CHECK(in_Ta(Digraph(3, {{0, 1}, {1, 1}, {1, 2}})));
  CHECK(is_poset(chain(3)));
  CHECK_FALSE(is_poset(Digraph(2, {{0, 1}})));
}

TEST_CASE("class R membership") {
  for (const Digraph& g : generate({CatalogKind::flat_posets}, 5).members) {
    CHECK(in_R(g, RMethod::direct).member);
    CHECK(in_R(g, RMethod::sum_condition).member);
  }
  for (std::size_t n = 0; n <= 4; ++n) {
    CHECK(in_R(chain(n), RMethod::direct).member);
    CHECK(in_R(chain(n), RMethod::sum_condition).member);
  }
  CHECK_THROWS_AS(in_R(Digraph(2, {{0, 1}}), RMethod::direct), Error);
}

TEST_CASE("smallest poset outside R fails both tests") {
  std::optional<Digraph> first;
  for (const Digraph& g : generate({CatalogKind::posets}, 5).members) {
    if (!in_R(g, RMethod::direct).member) {
      first = g;
      break;
    }
  }
  REQUIRE(first);
  CHECK(first->order() == 4);
  const RResult sum = in_R(*first, RMethod::sum_condition);
  CHECK_FALSE(sum.member);
  REQUIRE(sum.violating_path);
  const RResult direct = in_R(*first, RMethod::direct);
  CHECK_FALSE(direct.witness);
}

TEST_CASE("height classes") {
  for (std::size_t n = 0; n <= 4; ++n) {
    CHECK(in_Taghn(chain(n), n));
    CHECK(in_Chn(chain(n), n));
  }
  CHECK_FALSE(in_Taghn(poset_from(3, {{0, 1}}), 1));
  CHECK_FALSE(in_Chn(diamond(), 2));
  CHECK(in_Chn(disjoint_union(chain(2), chain(2)), 2));
  CHECK_FALSE(in_Chn(disjoint_union(chain(2), chain(1)), 2));
}

TEST_CASE("shell-encapsulated class") {
  const TaghnAResult flat = in_TaghnA(chain(3), 3);
  CHECK(flat.member);
  CHECK(flat.capsules.empty());
  const Digraph z = poset_from(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 3}});
  const TaghnAResult capsule = in_TaghnA(z, 3);
  REQUIRE(capsule.member);
  REQUIRE(capsule.capsules.size() == 1);
  CHECK(capsule.capsules[0].bottom[0] == std::vector<Vertex>{0});
  CHECK(capsule.capsules[0].upper[0] == std::vector<Vertex>{3});
  CHECK_FALSE(in_TaghnA(poset_from(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}}), 3).member);
  CHECK_THROWS_AS(in_TaghnA(chain(3), 2), Error);
}

TEST_CASE("catalog members of the height classes satisfy the definitions") {
  // Chn: maximal paths have length n and every interval is a path.
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const Digraph& g : generate({CatalogKind::Chn, n}, 5).members) {
      const PathStructure ps = analyze_paths(g);
      for (const PathSeq& p : ps.maximal) CHECK(p.length() == n);
      for (const Arc& a : g.arcs()) CHECK(path_from_vertex_set(g, interval(g, a.first, a.second)));
    }
  }
}

TEST_CASE("classification record") {
  const auto j = nlohmann::json::parse(classify(chain(3)).to_json());
  CHECK(j["poset"] == true);
  CHECK(j["in_Ta"] == true);
  CHECK(j["h"] == 3);
  CHECK(j["in_R"]["member"] == true);
  CHECK(j["in_Chn"] == true);
  const auto cycle = nlohmann::json::parse(classify(Digraph(2, {{0, 1}, {1, 0}})).to_json());
  CHECK(cycle["in_Ta"] == false);
  CHECK(cycle["h"].is_null());
  CHECK(cycle["in_R"].is_null());
}
