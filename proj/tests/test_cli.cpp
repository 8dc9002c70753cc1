#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "homlab/cli.hpp"
#include "homlab/io.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "homlab");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream captured, errors;
  auto* old_out = std::cout.rdbuf(captured.rdbuf());
  auto* old_err = std::cerr.rdbuf(errors.rdbuf());
  const int code = homlab::run(static_cast<int>(argv.size()), argv.data());
  std::cout.rdbuf(old_out);
  std::cerr.rdbuf(old_err);
  return {code, captured.str()};
}

fs::path write(const std::string& name, const std::string& text) {
  const fs::path dir = fs::temp_directory_path() / "homlab_cli_test";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST_CASE("count") {
  const auto c1 = write("c1.dg", "digraph 2\n0 0\n0 1\n1 1\n").string();
  CHECK(run({"count", "--from", c1, "--to", c1}).out == "3\n");
  CHECK(run({"count", "--from", c1, "--to", c1, "--strict"}).out == "1\n");
  CHECK(run({"enumerate", "--from", c1, "--to", c1}).out ==
        "map 0->0 1->0\nmap 0->0 1->1\nmap 0->1 1->1\n");
}

TEST_CASE("classify and phi") {
  const auto c3 = write("c3.dg", homlab::format_digraph(homlab::chain(3))).string();
  const Result r = run({"classify", "--graph", c3});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"poset\":true") != std::string::npos);
  CHECK(r.out.find("\"in_Ta\":true") != std::string::npos);
  CHECK(r.out.find("\"h\":3") != std::string::npos);
  CHECK(r.out.find("\"in_R\":{\"member\":true") != std::string::npos);
  const auto z = write("z.dg", homlab::format_digraph(homlab::transitive_hull(homlab::add_loops(
                                   homlab::Digraph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 3}})))))
                     .string();
  CHECK(run({"phi", "--graph", z}).out == "1/2\n");
  CHECK(run({"shells", "--graph", z}).out.find("bounds 0 3 span 3") != std::string::npos);
}

TEST_CASE("expand") {
  const auto g = write("fork.dg", "digraph 3\n0 1\n0 2\n").string();
  const auto w = write("fork.w", "weight\n0 1 1\n0 2 2\n").string();
  const Result r = run({"expand", "--graph", g, "--weight", w, "--nu", "2"});
  CHECK(r.code == 0);
  CHECK(homlab::parse_digraph(r.out).order() == 9);
}

TEST_CASE("catalog and verify") {
  const fs::path out = fs::temp_directory_path() / "homlab_cli_test" / "p4.cat";
  CHECK(run({"catalog", "gen", "--kind", "posets", "--max-n", "4", "--out", out.string()}).code == 0);
  std::ifstream in(out);
  std::string header;
  std::getline(in, header);
  CHECK(header == "catalog posets 4 24");
  const Result v = run({"verify", "--check", "lovasz", "--max-n", "3", "--jobs", "1"});
  CHECK(v.code == 0);
  CHECK(v.out.find("violations=0") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"count", "--from", "x"}).code == 2);
  CHECK(run({"verify", "--check", "nothing"}).code == 2);
  CHECK(run({"count", "--from", "/nonexistent", "--to", "/nonexistent"}).code == 2);
}
