#include "homlab/taxonomy.hpp"

#include <json.hpp>

#include "homlab/hom_engine.hpp"

namespace homlab {

bool in_Ta(const Digraph& g) { return is_loopless_acyclic(g); }

bool in_Ta_via_hull(const Digraph& g) {
  return transitive_hull(strip_loops(g)).loop_count() == 0;
}

bool is_poset(const Digraph& g) {
  return g.is_reflexive() && g.is_antisymmetric() && g.is_transitive();
}

bool is_flat(const Digraph& g) { return in_Ta(g) && analyze_paths(g).height <= 1; }

RResult in_R(const Digraph& g, RMethod method) {
  if (!g.is_reflexive()) throw Error("class R membership needs a reflexive digraph");
  if (!in_Ta(g)) throw Error("class R membership needs a digraph in T_a");
  const PathStructure ps = analyze_paths(g);
  RResult r;
  if (method == RMethod::sum_condition) {
    for (const PathSeq& p : all_paths(g)) {
      std::size_t sum = 0;
      for (std::size_t i = 1; i < p.vertices.size(); ++i) sum += iota(g, p[i - 1], p[i]);
      if (sum > ps.height + p.length()) {
        r.violating_path = p;
        return r;
      }
    }
    r.member = true;
    return r;
  }
  const auto family = top_path_family(g, ps);
  for (const VertexMap& m : m_class(g, g, family)) {
    if (is_strict(g, g, m)) {
      r.member = true;
      r.witness = m;
      return r;
    }
  }
  return r;
}

bool in_Taghn(const Digraph& g, std::size_t n) {
  if (!in_Ta(g)) throw Error("height classes need a digraph in T_a");
  const PathStructure ps = analyze_paths(g);
  return ps.height == n && ps.off_top.none();
}

bool in_Chn(const Digraph& g, std::size_t n) {
  if (!is_poset(g)) return false;
  const PathStructure ps = analyze_paths(g);
  for (const PathSeq& p : ps.maximal) {
    if (p.length() != n) return false;
  }
  for (const Arc& a : g.arcs()) {
    const auto p = path_from_vertex_set(g, interval(g, a.first, a.second));
    if (!p || !is_path(g, *p)) return false;
  }
  return true;
}

TaghnAResult in_TaghnA(const Digraph& g, std::size_t n) {
  if (!in_Ta(g)) throw Error("height classes need a digraph in T_a");
  const PathStructure ps = analyze_paths(g);
  if (ps.height != n) throw Error("shell class queried at a height other than h_G");
  TaghnAResult r;
  auto capsules = find_all_shells(g, ps);
  if (capsules) {
    r.member = true;
    r.capsules = std::move(*capsules);
  }
  return r;
}

ClassReport classify(const Digraph& g, std::optional<std::size_t> n) {
  ClassReport c;
  c.order = g.order();
  c.arcs = g.arc_count();
  c.reflexive = g.is_reflexive();
  c.antisymmetric = g.is_antisymmetric();
  c.transitive = g.is_transitive();
  c.poset = is_poset(g);
  c.in_Ta = in_Ta(g);
  if (c.in_Ta) {
    const PathStructure ps = analyze_paths(g);
    c.height = ps.height;
    c.flat = ps.height <= 1;
    c.n = n.value_or(ps.height);
    c.in_Taghn = in_Taghn(g, c.n);
    if (ps.height == c.n) c.in_TaghnA = in_TaghnA(g, c.n).member;
    if (c.reflexive) {
      c.in_R = in_R(g, RMethod::direct);
      c.in_R_sum_condition = in_R(g, RMethod::sum_condition).member;
    }
  } else {
    c.n = n.value_or(0);
  }
  c.in_Chn = in_Chn(g, c.n);
  return c;
}

std::string ClassReport::to_json() const {
  nlohmann::ordered_json j;
  j["order"] = order;
  j["arcs"] = arcs;
  j["reflexive"] = reflexive;
  j["antisymmetric"] = antisymmetric;
  j["transitive"] = transitive;
  j["poset"] = poset;
  j["in_Ta"] = in_Ta;
  j["flat"] = flat;
  j["h"] = height ? nlohmann::ordered_json(*height) : nlohmann::ordered_json(nullptr);
  j["n"] = n;
  j["in_Taghn"] = in_Taghn ? nlohmann::ordered_json(*in_Taghn) : nlohmann::ordered_json(nullptr);
  j["in_TaghnA"] =
      in_TaghnA ? nlohmann::ordered_json(*in_TaghnA) : nlohmann::ordered_json(nullptr);
  j["in_Chn"] = in_Chn;
  if (in_R) {
    nlohmann::ordered_json r;
    r["member"] = in_R->member;
    r["method"] = "direct";
    r["witness"] = in_R->witness ? homlab::to_string(*in_R->witness) : "";
    r["sum_condition"] = in_R_sum_condition.value_or(false);
    j["in_R"] = r;
  } else {
    j["in_R"] = nullptr;
  }
  return j.dump();
}

}  // namespace homlab
