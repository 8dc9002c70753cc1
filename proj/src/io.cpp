#include "homlab/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace homlab {

namespace {

bool skippable(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

/// Next meaningful line, or false at end of input.
bool next_line(std::istream& is, std::string& line) {
  while (std::getline(is, line)) {
    if (!skippable(line)) return true;
  }
  return false;
}

std::size_t parse_header(const std::string& line, const std::string& keyword) {
  std::istringstream ls(line);
  std::string word;
  long long n = -1;
  std::string rest;
  if (!(ls >> word) || word != keyword || !(ls >> n) || (ls >> rest) || n < 1) {
    throw Error("expected `" + keyword + " <n>`, got: " + line);
  }
  return static_cast<std::size_t>(n);
}

std::vector<long long> parse_numbers(const std::string& line, std::size_t count) {
  std::istringstream ls(line);
  std::vector<long long> out(count);
  for (auto& x : out) {
    if (!(ls >> x) || x < 0) throw Error("malformed line: " + line);
  }
  std::string rest;
  if (ls >> rest) throw Error("trailing input on line: " + line);
  return out;
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return in;
}

}  // namespace

void write_digraph(std::ostream& os, const Digraph& g) {
  os << "digraph " << g.order() << '\n';
  for (const Arc& a : g.arcs()) os << a.first << ' ' << a.second << '\n';
}

std::string format_digraph(const Digraph& g) {
  std::ostringstream os;
  write_digraph(os, g);
  return os.str();
}

std::vector<Digraph> read_digraphs(std::istream& is) {
  std::vector<Digraph> out;
  std::string line;
  bool have = next_line(is, line);
  while (have) {
    const std::size_t n = parse_header(line, "digraph");
    std::vector<Arc> arcs;
    while ((have = next_line(is, line)) && line.rfind("digraph", 0) != 0) {
      const auto uv = parse_numbers(line, 2);
      if (static_cast<std::size_t>(uv[0]) >= n || static_cast<std::size_t>(uv[1]) >= n) {
        throw Error("arc out of range: " + line);
      }
      arcs.emplace_back(static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1]));
    }
    out.emplace_back(n, arcs);
  }
  return out;
}

Digraph read_digraph(std::istream& is) {
  auto all = read_digraphs(is);
  if (all.size() != 1) throw Error("expected exactly one digraph record");
  return std::move(all.front());
}

Digraph parse_digraph(const std::string& text) {
  std::istringstream is(text);
  return read_digraph(is);
}

Digraph load_digraph(const std::string& path) {
  auto in = open(path);
  return read_digraph(in);
}

void write_weight(std::ostream& os, const ArcWeight& w) {
  os << "weight\n";
  for (const Arc& a : w.support()) {
    os << a.first << ' ' << a.second << ' ' << w(a.first, a.second) << '\n';
  }
}

ArcWeight read_weight(std::istream& is, const Digraph& host) {
  std::string line;
  if (!next_line(is, line) || line.find_first_not_of(" \t\r") == std::string::npos ||
      line.substr(line.find_first_not_of(" \t\r"), 6) != "weight") {
    throw Error("expected `weight` header");
  }
  ArcWeight w(host);
  while (next_line(is, line)) {
    const auto t = parse_numbers(line, 3);
    if (static_cast<std::size_t>(t[0]) >= host.order() ||
        static_cast<std::size_t>(t[1]) >= host.order()) {
      throw Error("weight arc out of range: " + line);
    }
    w.set(static_cast<Vertex>(t[0]), static_cast<Vertex>(t[1]), static_cast<unsigned>(t[2]));
  }
  return w;
}

ArcWeight load_weight(const std::string& path, const Digraph& host) {
  auto in = open(path);
  return read_weight(in, host);
}

VertexMap parse_map(const std::string& line, std::size_t codomain) {
  std::istringstream ls(line);
  std::string word;
  if (!(ls >> word) || word != "map") throw Error("expected `map ...`");
  VertexMap m;
  m.codomain = codomain;
  while (ls >> word) {
    const auto arrow = word.find("->");
    if (arrow == std::string::npos) throw Error("malformed map entry: " + word);
    const unsigned long v = std::stoul(word.substr(0, arrow));
    const unsigned long w = std::stoul(word.substr(arrow + 2));
    if (v != m.image.size() || w >= codomain) throw Error("map entry out of order or range: " + word);
    m.image.push_back(static_cast<Vertex>(w));
  }
  return m;
}

}  // namespace homlab
