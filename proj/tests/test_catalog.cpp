#include <doctest.h>

#include <cstdlib>
#include <random>
#include <sstream>

#include "homlab/catalog.hpp"
#include "homlab/taxonomy.hpp"
#include "oracles.hpp"

using namespace homlab;

namespace {

std::vector<std::size_t> counts_by_order(const Catalog& c) {
  std::vector<std::size_t> out(c.max_n, 0);
  for (const Digraph& g : c.members) ++out[g.order() - 1];
  return out;
}

Digraph shuffled(const Digraph& g, std::mt19937& rng) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(g, perm);
}

std::vector<std::size_t> degree_profile(const Digraph& g) {
  std::vector<std::size_t> out;
  for (Vertex v = 0; v < g.order(); ++v) out.push_back(g.out(v).count() * 100 + g.in(v).count());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("poset counts against the relation filter") {
  const auto counts = counts_by_order(generate({CatalogKind::posets}, 5));
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(counts[n - 1] == oracle::classes(n, 1, oracle::order_relation));
  }
  CHECK(counts == std::vector<std::size_t>{1, 2, 5, 16, 63});
}

TEST_CASE("other base kinds against the relation filter") {
  const auto ta = counts_by_order(generate({CatalogKind::Ta}, 4));
  const auto reflexive = counts_by_order(generate({CatalogKind::reflexive}, 4));
  const auto all = counts_by_order(generate({CatalogKind::all_digraphs}, 4));
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(ta[n - 1] == oracle::classes(n, -1, oracle::loopless_part_acyclic));
    CHECK(reflexive[n - 1] == oracle::classes(n, 1, [](const Digraph&) { return true; }));
    CHECK(all[n - 1] == oracle::classes(n, -1, [](const Digraph&) { return true; }));
  }
  CHECK(ta == std::vector<std::size_t>{2, 7, 40, 420});
  CHECK(reflexive == std::vector<std::size_t>{1, 3, 16, 218});
  CHECK(all == std::vector<std::size_t>{2, 10, 104, 3044});
}

TEST_CASE("filtered kinds against brute-force filtering") {
  std::vector<std::vector<Digraph>> posets(6), ta(5);
  for (std::size_t n = 1; n <= 5; ++n) {
    std::set<std::string> seen;
    oracle::for_each_relation(n, 1, [&](const Digraph& g) {
      if (oracle::order_relation(g) && seen.insert(oracle::iso_key(g)).second) posets[n].push_back(g);
    });
  }
  for (std::size_t n = 1; n <= 4; ++n) {
    std::set<std::string> seen;
    oracle::for_each_relation(n, -1, [&](const Digraph& g) {
      if (oracle::loopless_part_acyclic(g) && seen.insert(oracle::iso_key(g)).second) ta[n].push_back(g);
    });
  }
  auto count = [](const std::vector<Digraph>& gs, auto pred) {
    return static_cast<std::size_t>(std::count_if(gs.begin(), gs.end(), pred));
  };
  const auto flat = counts_by_order(generate({CatalogKind::flat_posets}, 5));
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(flat[n - 1] == count(posets[n], [](const Digraph& g) { return oracle::longest_path(strip_loops(g)) <= 1; }));
  }
  for (std::size_t h = 1; h <= 3; ++h) {
    const auto chn = counts_by_order(generate({CatalogKind::Chn, h}, 5));
    const auto taghn = counts_by_order(generate({CatalogKind::Taghn, h}, 4));
    const auto taghna = counts_by_order(generate({CatalogKind::TaghnA, h}, 4));
    for (std::size_t n = 1; n <= 5; ++n) {
      CHECK(chn[n - 1] == count(posets[n], [&](const Digraph& g) { return in_Chn(g, h); }));
    }
    for (std::size_t n = 1; n <= 4; ++n) {
      auto of_height = [&](const Digraph& g) { return oracle::longest_path(strip_loops(g)) == h; };
      CHECK(taghn[n - 1] == count(ta[n], [&](const Digraph& g) { return of_height(g) && in_Taghn(g, h); }));
      CHECK(taghna[n - 1] ==
            count(ta[n], [&](const Digraph& g) { return of_height(g) && in_TaghnA(g, h).member; }));
    }
  }
  CHECK(flat == std::vector<std::size_t>{1, 2, 4, 9, 21});
}

TEST_CASE("frozen catalog sizes") {
  CHECK(counts_by_order(generate({CatalogKind::posets}, 6)).back() == 318);
  CHECK(counts_by_order(generate({CatalogKind::Ta}, 5)).back() == 8628);
  CHECK(counts_by_order(generate({CatalogKind::Chn, 1}, 6)) == std::vector<std::size_t>{0, 1, 2, 5, 12, 35});
  CHECK(counts_by_order(generate({CatalogKind::TaghnA, 3}, 6)) ==
        std::vector<std::size_t>{0, 0, 0, 128, 1856, 35456});
}

TEST_CASE("canonical form") {
  std::mt19937 rng(3);
  CHECK(canonical(relabel(chain(3), std::vector<Vertex>{2, 0, 3, 1})) == canonical(chain(3)));
  CHECK_FALSE(is_isomorphic(chain(1), antichain(2)));
  CHECK(is_isomorphic(Digraph(2, {{0, 1}}), Digraph(2, {{1, 0}})));
  for (const Digraph& g : generate({CatalogKind::all_digraphs}, 4).members) {
    const Digraph c = canonical(g);
    CHECK(canonical(c) == c);
    const Digraph other = shuffled(g, rng);
    CHECK(canonical_code(other) == canonical_code(g));
    CHECK(canonical_code(g) <= adjacency_code(other));
    CHECK(degree_profile(c) == degree_profile(g));
    CHECK(c.loop_count() == g.loop_count());
    CHECK(decode(g.order(), adjacency_code(g)) == g);
  }
  CHECK_THROWS_AS(canonical_code(Digraph(10)), Error);
}

TEST_CASE("catalog members are canonical and distinct") {
  const Catalog c = generate({CatalogKind::Ta}, 4);
  std::set<std::string> keys;
  for (const Digraph& g : c.members) {
    CHECK(canonical(g) == g);
    CHECK(keys.insert(oracle::iso_key(g)).second);
  }
}

TEST_CASE("catalog specs and limits") {
  CHECK(CatalogSpec::parse("Chn3") == CatalogSpec{CatalogKind::Chn, 3});
  CHECK(CatalogSpec::parse("posets").name() == "posets");
  CHECK(CatalogSpec{CatalogKind::TaghnA, 2}.name() == "TaghnA2");
  CHECK_THROWS_AS(CatalogSpec::parse("Chn"), Error);
  CHECK_THROWS_AS(CatalogSpec::parse("lattices"), Error);
  CHECK_THROWS_AS(generate({CatalogKind::posets}, 8), Error);
  CHECK_THROWS_AS(generate({CatalogKind::posets}, 0), Error);
  setenv("HOMLAB_MAX_N", "8", 1);
  CHECK(catalog_cap() == 8);
  setenv("HOMLAB_MAX_N", "12", 1);
  CHECK(catalog_cap() == 9);
  unsetenv("HOMLAB_MAX_N");
  CHECK(catalog_cap() == 7);
}

TEST_CASE("catalog files round-trip") {
  const Catalog c = generate({CatalogKind::posets}, 4);
  std::stringstream ss;
  save_catalog(ss, c);
  std::string header;
  std::getline(ss, header);
  CHECK(header == "catalog posets 4 24");
  ss.seekg(0);
  const Catalog back = load_catalog(ss);
  CHECK(back.spec == c.spec);
  CHECK(back.max_n == 4);
  CHECK(back.members == c.members);
  std::stringstream bad("catalog posets 4 3\ndigraph 1\n");
  CHECK_THROWS_AS(load_catalog(bad), Error);
}

TEST_CASE("generation does not depend on the worker count") {
  CHECK(generate({CatalogKind::Ta}, 5, 1).members == generate({CatalogKind::Ta}, 5, 3).members);
}
