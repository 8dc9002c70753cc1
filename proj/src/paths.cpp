#include "homlab/paths.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace homlab {

std::string to_string(const VertexMap& m) {
  std::ostringstream os;
  os << "map";
  for (Vertex v = 0; v < m.image.size(); ++v) os << ' ' << v << "->" << m.image[v];
  return os.str();
}

bool is_homomorphism(const Digraph& g, const Digraph& h, const VertexMap& m) {
  if (m.image.size() != g.order()) return false;
  for (Vertex w : m.image) {
    if (w >= h.order()) return false;
  }
  for (auto [u, v] : g.arcs()) {
    if (!h.has_arc(m(u), m(v))) return false;
  }
  return true;
}

bool is_strict(const Digraph& g, const Digraph& h, const VertexMap& m) {
  if (!is_homomorphism(g, h, m)) return false;
  for (auto [u, v] : g.proper_arcs()) {
    if (m(u) == m(v)) return false;
  }
  return true;
}

VertexMap restrict_to(const VertexMap& m, const SubDigraph& sub) {
  VertexMap r;
  r.codomain = m.codomain;
  for (Vertex v : sub.vertices) r.image.push_back(m(v));
  return r;
}

VertexMap compose(const VertexMap& outer, const VertexMap& inner) {
  VertexMap r;
  r.codomain = outer.codomain;
  for (Vertex w : inner.image) r.image.push_back(outer(w));
  return r;
}

VertexSet PathSeq::vertex_set(std::size_t n) const {
  VertexSet s(n);
  for (Vertex v : vertices) s.set(v);
  return s;
}

bool is_path(const Digraph& g, const PathSeq& p) {
  if (p.vertices.empty()) return false;
  VertexSet seen(g.order());
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    Vertex v = p.vertices[i];
    if (v >= g.order() || seen.test(v)) return false;
    seen.set(v);
    if (i > 0 && !g.has_arc(p.vertices[i - 1], v)) return false;
  }
  return true;
}

std::vector<PathSeq> all_paths(const Digraph& g) {
  std::vector<PathSeq> result;
  PathSeq current;
  VertexSet used(g.order());
  std::function<void(Vertex)> extend = [&](Vertex v) {
    current.vertices.push_back(v);
    used.set(v);
    result.push_back(current);
    for (Vertex w : members(g.out(v) & ~used)) extend(w);
    used.reset(v);
    current.vertices.pop_back();
  };
  for (Vertex v = 0; v < g.order(); ++v) extend(v);
  std::sort(result.begin(), result.end());
  return result;
}

std::optional<PathSeq> path_from_vertex_set(const Digraph& g, const VertexSet& set) {
  PathSeq p;
  VertexSet rest = set;
  while (rest.any()) {
    std::optional<Vertex> first;
    for (Vertex v : members(rest)) {
      VertexSet preds = g.in(v) & rest;
      preds.reset(v);
      if (preds.none()) {
        if (first) return std::nullopt;
        first = v;
      }
    }
    if (!first) return std::nullopt;
    if (!p.vertices.empty() && !g.has_arc(p.vertices.back(), *first)) return std::nullopt;
    p.vertices.push_back(*first);
    rest.reset(*first);
  }
  if (p.vertices.empty()) return std::nullopt;
  return p;
}

PathSeq concatenate(const PathSeq& p, const PathSeq& q) {
  if (p.top() != q.bottom()) throw Error("concatenate: paths do not meet");
  PathSeq r = p;
  r.vertices.insert(r.vertices.end(), q.vertices.begin() + 1, q.vertices.end());
  return r;
}

std::vector<Vertex> topological_order(const Digraph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> indeg(n, 0);
  for (auto [u, v] : g.proper_arcs()) ++indeg[v];
  std::vector<Vertex> order;
  std::vector<Vertex> ready;
  for (Vertex v = 0; v < n; ++v) {
    if (indeg[v] == 0) ready.push_back(v);
  }
  while (!ready.empty()) {
    std::sort(ready.begin(), ready.end(), std::greater<>());
    Vertex v = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (Vertex w : members(g.out(v))) {
      if (w != v && --indeg[w] == 0) ready.push_back(w);
    }
  }
  if (order.size() != n) throw Error("digraph is not in T_a (G* has a cycle)");
  return order;
}

PathStructure analyze_paths(const Digraph& g) {
  if (!is_loopless_acyclic(g)) throw Error("path structure requires G in T_a");
  const std::size_t n = g.order();
  PathStructure ps{cover_digraph(g), 0, {}, {}, VertexSet(n), VertexSet(n),
                   std::vector<int>(n, -1)};
  const Digraph& cov = ps.cover;

  PathSeq current;
  std::function<void(Vertex)> walk = [&](Vertex v) {
    current.vertices.push_back(v);
    if (cov.out(v).none()) {
      ps.maximal.push_back(current);
    } else {
      for (Vertex w : members(cov.out(v))) walk(w);
    }
    current.vertices.pop_back();
  };
  for (Vertex v = 0; v < n; ++v) {
    if (cov.in(v).none()) walk(v);
  }
  std::sort(ps.maximal.begin(), ps.maximal.end());

  for (const auto& p : ps.maximal) ps.height = std::max(ps.height, p.length());
  for (const auto& p : ps.maximal) {
    if (p.length() != ps.height) continue;
    ps.top.push_back(p);
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
      Vertex v = p[i];
      if (ps.position[v] >= 0 && ps.position[v] != static_cast<int>(i)) {
        throw std::logic_error("top paths disagree on the position of vertex " +
                               std::to_string(v));
      }
      ps.position[v] = static_cast<int>(i);
      ps.top_vertices.set(v);
    }
  }
  ps.off_top = ~ps.top_vertices;
  return ps;
}

std::pair<Digraph, std::vector<Vertex>> top_subgraph(const Digraph& g,
                                                     const PathStructure& ps) {
  return {induced(g, ps.top_vertices), members(ps.top_vertices)};
}

SubDigraph path_cover(const Digraph& g, const PathSeq& p) {
  SubDigraph s;
  s.vertices = p.vertices;
  std::sort(s.vertices.begin(), s.vertices.end());
  VertexSet set = p.vertex_set(g.order());
  Digraph local_cover = cover_digraph(induced(g, set));
  for (auto [u, v] : local_cover.arcs()) s.arcs.emplace_back(s.vertices[u], s.vertices[v]);
  std::sort(s.arcs.begin(), s.arcs.end());
  return s;
}

std::vector<SubDigraph> top_path_family(const Digraph& g, const PathStructure& ps) {
  std::vector<SubDigraph> family;
  for (const auto& p : ps.top) family.push_back(path_cover(g, p));
  return family;
}

std::vector<SubDigraph> top_path_family(const Digraph& g) {
  return top_path_family(g, analyze_paths(g));
}

std::pair<VertexMap, VertexMap> lambda_maps(const Digraph& g, std::size_t n) {
  auto order = topological_order(g);
  std::vector<std::size_t> longest(g.order(), 0);
  for (Vertex v : order) {
    for (Vertex w : members(g.out(v))) {
      if (w != v) longest[w] = std::max(longest[w], longest[v] + 1);
    }
  }
  std::size_t height = 0;
  for (auto l : longest) height = std::max(height, l);
  if (n < height) {
    throw Error("lambda maps need n >= h_G (" + std::to_string(n) + " < " +
                std::to_string(height) + ")");
  }
  VertexMap lambda{{}, n + 1};
  VertexMap lambda_hat{{}, n + 1};
  for (Vertex v = 0; v < g.order(); ++v) {
    VertexSet proper_out = g.out(v);
    proper_out.reset(v);
    lambda.image.push_back(static_cast<Vertex>(longest[v]));
    lambda_hat.image.push_back(
        proper_out.any() ? static_cast<Vertex>(longest[v]) : static_cast<Vertex>(n));
  }
  const Digraph target = chain(n);
  if (!is_strict(g, target, lambda) || !is_strict(g, target, lambda_hat)) {
    throw std::logic_error("lambda maps are not strict");
  }
  return {lambda, lambda_hat};
}

}  // namespace homlab
