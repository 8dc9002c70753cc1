#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "homlab/digraph.hpp"
#include "homlab/vertex_map.hpp"

namespace homlab {

/// A path v0..vI: distinct vertices, consecutive pairs are arcs.
struct PathSeq {
  std::vector<Vertex> vertices;

  std::size_t length() const { return vertices.size() - 1; }
  Vertex bottom() const { return vertices.front(); }
  Vertex top() const { return vertices.back(); }
  Vertex operator[](std::size_t i) const { return vertices[i]; }
  VertexSet vertex_set(std::size_t n) const;

  friend bool operator==(const PathSeq&, const PathSeq&) = default;
  friend auto operator<=>(const PathSeq&, const PathSeq&) = default;
};

bool is_path(const Digraph& g, const PathSeq& p);

/// Every path of g, including the length-0 ones, in lexicographic order.
std::vector<PathSeq> all_paths(const Digraph& g);

/// Rebuilds the vertex sequence of a path from its vertex set by repeatedly
/// taking the unique member without an in-neighbour among the remaining ones.
/// Returns nullopt when that member is not unique or an arc is missing.
std::optional<PathSeq> path_from_vertex_set(const Digraph& g, const VertexSet& set);

/// Concatenation of p and q with p.top() == q.bottom().
PathSeq concatenate(const PathSeq& p, const PathSeq& q);

/// Topological order of G* (G must be in T_a).
std::vector<Vertex> topological_order(const Digraph& g);

/// Maximal-path data of a digraph in T_a.
struct PathStructure {
  Digraph cover;                 // G_×
  std::size_t height = 0;        // h_G
  std::vector<PathSeq> maximal;  // 𝒫_G, lexicographic
  std::vector<PathSeq> top;      // 𝒫_G^h
  VertexSet top_vertices;        // V(G)^h
  VertexSet off_top;             // V(G)^{-h}
  /// g from the top-path lemma: position of v on every top path through v;
  /// -1 for vertices outside V(G)^h.
  std::vector<int> position;
};

/// Maximal paths are enumerated in G_× (source-to-sink), which has the same
/// maximal paths as G. Throws Error for G ∉ T_a and std::logic_error if two
/// top paths disagree on a position.
PathStructure analyze_paths(const Digraph& g);

/// G^h = G|_{V(G)^h}, returned together with the host ids of its vertices.
std::pair<Digraph, std::vector<Vertex>> top_subgraph(const Digraph& g,
                                                     const PathStructure& ps);

/// P_× = (G|_P)_× as a subgraph of g.
SubDigraph path_cover(const Digraph& g, const PathSeq& p);

/// ℒ(G) = { P_× : P ∈ 𝒫_G^h }.
std::vector<SubDigraph> top_path_family(const Digraph& g, const PathStructure& ps);
std::vector<SubDigraph> top_path_family(const Digraph& g);

/// (λ_{G,n}, λ̂_{G,n}) into C_n. λ(v) is the length of a longest path ending
/// in v; λ̂ sends vertices without a proper out-neighbour to n. Both maps are
/// checked to be strict homomorphisms into C_n. Requires G ∈ T_a, n >= h_G.
std::pair<VertexMap, VertexMap> lambda_maps(const Digraph& g, std::size_t n);

}  // namespace homlab
