#include <doctest.h>

#include <sstream>

#include "homlab/catalog.hpp"
#include "homlab/io.hpp"

using namespace homlab;

TEST_CASE("digraph text form") {
  const Digraph g(3, {{1, 2}, {0, 1}, {2, 2}});
  CHECK(format_digraph(g) == "digraph 3\n0 1\n1 2\n2 2\n");
  CHECK(parse_digraph("# comment\ndigraph 2\n\n1 0\n") == Digraph(2, {{1, 0}}));
  CHECK_THROWS_AS(parse_digraph("digraph 2\n0 5\n"), Error);
  CHECK_THROWS_AS(parse_digraph("graph 2\n"), Error);
  CHECK_THROWS_AS(parse_digraph(""), Error);
}

TEST_CASE("digraph records round-trip") {
  std::stringstream ss;
  const auto members = generate({CatalogKind::Ta}, 3).members;
  for (const Digraph& g : members) write_digraph(ss, g);
  CHECK(read_digraphs(ss) == members);
}

TEST_CASE("weight text form") {
  const Digraph g = chain(2);
  ArcWeight w(g);
  w.set(0, 2, 3);
  std::stringstream ss;
  write_weight(ss, w);
  CHECK(ss.str() == "weight\n0 2 3\n");
  CHECK(read_weight(ss, g) == w);
  std::stringstream loop("weight\n1 1 2\n");
  CHECK_THROWS_AS(read_weight(loop, g), Error);
}

TEST_CASE("map text form") {
  const VertexMap m{{0, 2, 1}, 3};
  CHECK(to_string(m) == "map 0->0 1->2 2->1");
  CHECK(parse_map("map 0->0 1->2 2->1", 3) == m);
  CHECK_THROWS_AS(parse_map("map 1->0", 3), Error);
  CHECK_THROWS_AS(parse_map("map 0->4", 3), Error);
}
