#include "homlab/digraph.hpp"

#include <algorithm>
#include <sstream>

namespace homlab {

std::vector<Vertex> members(const VertexSet& set) {
  std::vector<Vertex> out;
  out.reserve(set.count());
  for (auto i = set.find_first(); i != VertexSet::npos; i = set.find_next(i)) {
    out.push_back(static_cast<Vertex>(i));
  }
  return out;
}

VertexSet empty_set(std::size_t n) { return VertexSet(n); }

VertexSet full_set(std::size_t n) {
  VertexSet s(n);
  s.set();
  return s;
}

Digraph::Digraph(std::size_t n) {
  if (n == 0) throw Error("digraph needs at least one vertex");
  out_.assign(n, VertexSet(n));
  in_.assign(n, VertexSet(n));
}

Digraph::Digraph(std::size_t n, std::span<const Arc> arcs) : Digraph(n) {
  for (const auto& [u, v] : arcs) {
    if (u >= n || v >= n) {
      throw Error("arc (" + std::to_string(u) + "," + std::to_string(v) +
                  ") outside vertex range 0.." + std::to_string(n - 1));
    }
    if (!out_[u].test(v)) {
      out_[u].set(v);
      in_[v].set(u);
      ++arc_count_;
    }
  }
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(arc_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : members(out_[u])) result.emplace_back(u, v);
  }
  return result;
}

std::vector<Arc> Digraph::proper_arcs() const {
  std::vector<Arc> result;
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : members(out_[u])) {
      if (u != v) result.emplace_back(u, v);
    }
  }
  return result;
}

std::size_t Digraph::loop_count() const {
  std::size_t c = 0;
  for (Vertex v = 0; v < order(); ++v) c += has_loop(v) ? 1 : 0;
  return c;
}

bool Digraph::is_reflexive() const { return loop_count() == order(); }

bool Digraph::is_transitive() const {
  for (Vertex u = 0; u < order(); ++u) {
    VertexSet two_step(order());
    for (Vertex v : members(out_[u])) two_step |= out_[v];
    if (!two_step.is_subset_of(out_[u])) return false;
  }
  return true;
}

bool Digraph::is_antisymmetric() const {
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : members(out_[u])) {
      if (u != v && has_arc(v, u)) return false;
    }
  }
  return true;
}

Digraph strip_loops(const Digraph& g) {
  auto arcs = g.proper_arcs();
  return Digraph(g.order(), arcs);
}

Digraph add_loops(const Digraph& g) {
  auto arcs = g.arcs();
  for (Vertex v = 0; v < g.order(); ++v) arcs.emplace_back(v, v);
  return Digraph(g.order(), arcs);
}

VertexSet interval(const Digraph& g, Vertex v, Vertex w) {
  if (v >= g.order() || w >= g.order() || !g.has_arc(v, w)) {
    throw Error("interval requires an arc, got (" + std::to_string(v) + "," +
                std::to_string(w) + ")");
  }
  return g.out(v) & g.in(w);
}

std::size_t iota(const Digraph& g, Vertex v, Vertex w) {
  return interval(g, v, w).count();
}

namespace {

std::vector<VertexSet> reachability(const Digraph& g) {
  const std::size_t n = g.order();
  std::vector<VertexSet> reach(n);
  for (Vertex v = 0; v < n; ++v) reach[v] = g.out(v);
  for (Vertex k = 0; k < n; ++k) {
    for (Vertex i = 0; i < n; ++i) {
      if (reach[i].test(k)) reach[i] |= reach[k];
    }
  }
  return reach;
}

Digraph from_rows(const std::vector<VertexSet>& rows) {
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < rows.size(); ++u) {
    for (Vertex v : members(rows[u])) arcs.emplace_back(u, v);
  }
  return Digraph(rows.size(), arcs);
}

}  // namespace

Digraph transitive_hull(const Digraph& g) { return from_rows(reachability(g)); }

bool is_loopless_acyclic(const Digraph& g) {
  auto reach = reachability(strip_loops(g));
  for (Vertex v = 0; v < g.order(); ++v) {
    if (reach[v].test(v)) return false;
  }
  return true;
}

Digraph transitive_reduction(const Digraph& g) {
  if (!is_loopless_acyclic(g)) {
    throw Error("transitive reduction is only unique for digraphs in T_a");
  }
  const std::size_t n = g.order();
  const Digraph proper = strip_loops(g);
  auto reach = reachability(proper);
  std::vector<Arc> kept;
  for (Vertex v = 0; v < n; ++v) {
    VertexSet long_walk(n);
    for (Vertex u : members(proper.out(v))) long_walk |= reach[u];
    for (Vertex w : members(g.out(v))) {
      if (v == w || !long_walk.test(w)) kept.emplace_back(v, w);
    }
  }
  return Digraph(n, kept);
}

Digraph cover_digraph(const Digraph& g) {
  return strip_loops(transitive_reduction(g));
}

Digraph induced(const Digraph& g, const VertexSet& subset) {
  auto verts = members(subset);
  if (verts.empty()) throw Error("induced subgraph needs a non-empty vertex set");
  std::vector<Vertex> local(g.order(), 0);
  for (Vertex i = 0; i < verts.size(); ++i) local[verts[i]] = i;
  std::vector<Arc> arcs;
  for (Vertex u : verts) {
    for (Vertex v : members(g.out(u) & subset)) {
      arcs.emplace_back(local[u], local[v]);
    }
  }
  return Digraph(verts.size(), arcs);
}

bool is_isolated(const Digraph& g, Vertex v) {
  VertexSet nb = g.out(v) | g.in(v);
  nb.reset(v);
  return nb.none();
}

VertexSet isolated_vertices(const Digraph& g) {
  VertexSet s(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (is_isolated(g, v)) s.set(v);
  }
  return s;
}

std::vector<VertexSet> components(const Digraph& g, const VertexSet& subset) {
  std::vector<VertexSet> result;
  VertexSet unseen = subset;
  while (unseen.any()) {
    VertexSet comp(g.order());
    VertexSet frontier(g.order());
    frontier.set(unseen.find_first());
    while (frontier.any()) {
      comp |= frontier;
      VertexSet next(g.order());
      for (Vertex v : members(frontier)) next |= g.out(v) | g.in(v);
      frontier = next & subset & ~comp;
    }
    unseen &= ~comp;
    result.push_back(std::move(comp));
  }
  return result;
}

Digraph chain(std::size_t n) {
  std::vector<Arc> arcs;
  for (Vertex i = 0; i <= n; ++i) {
    for (Vertex j = i; j <= n; ++j) arcs.emplace_back(i, j);
  }
  return Digraph(n + 1, arcs);
}

Digraph singleton_with_loop() { return chain(0); }

Digraph antichain(std::size_t n, bool loops) {
  std::vector<Arc> arcs;
  if (loops) {
    for (Vertex v = 0; v < n; ++v) arcs.emplace_back(v, v);
  }
  return Digraph(n, arcs);
}

Digraph disjoint_union(const Digraph& a, const Digraph& b) {
  auto arcs = a.arcs();
  const auto shift = static_cast<Vertex>(a.order());
  for (auto [u, v] : b.arcs()) arcs.emplace_back(u + shift, v + shift);
  return Digraph(a.order() + b.order(), arcs);
}

Digraph relabel(const Digraph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) throw Error("relabel: permutation size mismatch");
  std::vector<Arc> arcs;
  for (auto [u, v] : g.arcs()) arcs.emplace_back(perm[u], perm[v]);
  return Digraph(g.order(), arcs);
}

Digraph SubDigraph::local() const {
  std::vector<Arc> local_arcs;
  auto pos = [&](Vertex v) {
    return static_cast<Vertex>(
        std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin());
  };
  for (auto [u, v] : arcs) local_arcs.emplace_back(pos(u), pos(v));
  return Digraph(vertices.size(), local_arcs);
}

std::vector<Arc> SubDigraph::proper_arcs() const {
  std::vector<Arc> out;
  for (const auto& a : arcs) {
    if (a.first != a.second) out.push_back(a);
  }
  return out;
}

bool SubDigraph::contains_vertex(Vertex v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

bool SubDigraph::is_subgraph_of(const Digraph& host) const {
  if (vertices.empty()) return false;
  for (Vertex v : vertices) {
    if (v >= host.order()) return false;
  }
  for (auto [u, v] : arcs) {
    if (!contains_vertex(u) || !contains_vertex(v)) return false;
    if (u >= host.order() || v >= host.order() || !host.has_arc(u, v)) return false;
  }
  return true;
}

SubDigraph SubDigraph::whole(const Digraph& g) {
  SubDigraph s;
  for (Vertex v = 0; v < g.order(); ++v) s.vertices.push_back(v);
  s.arcs = g.arcs();
  return s;
}

std::string to_dot(const Digraph& g, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (Vertex v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
  for (auto [u, v] : g.arcs()) os << "  " << u << " -> " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace homlab
