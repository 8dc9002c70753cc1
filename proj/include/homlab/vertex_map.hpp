#pragma once

#include <string>
#include <vector>

#include "homlab/digraph.hpp"

namespace homlab {

/// A total map V(G) -> V(H), stored as the image tuple.
struct VertexMap {
  std::vector<Vertex> image;
  std::size_t codomain = 0;

  Vertex operator()(Vertex v) const { return image[v]; }
  std::size_t domain() const { return image.size(); }

  friend bool operator==(const VertexMap&, const VertexMap&) = default;
  friend auto operator<=>(const VertexMap& a, const VertexMap& b) {
    return a.image <=> b.image;
  }
};

/// `map v0->w0 v1->w1 ...`
std::string to_string(const VertexMap& m);

bool is_homomorphism(const Digraph& g, const Digraph& h, const VertexMap& m);
/// Homomorphism that additionally sends proper arcs to proper arcs.
bool is_strict(const Digraph& g, const Digraph& h, const VertexMap& m);

/// ξ|_L expressed in L's local numbering.
VertexMap restrict_to(const VertexMap& m, const SubDigraph& sub);
/// ρ ∘ σ
VertexMap compose(const VertexMap& outer, const VertexMap& inner);

}  // namespace homlab
