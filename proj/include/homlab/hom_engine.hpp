#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "homlab/bigint.hpp"
#include "homlab/digraph.hpp"
#include "homlab/vertex_map.hpp"

namespace homlab {

enum class HomKind { all, strict };

/// Candidate images as a bitmask over V(H); targets have at most 64 vertices.
using TargetMask = std::uint64_t;
inline constexpr std::size_t kMaxTargetOrder = 64;

/// Backtracking search over maps V(G) -> V(H).
///
/// Vertices of G are visited in decreasing order of their degree in G*, ties
/// by index. Each assignment filters the domains of the unassigned
/// neighbours (forward checking). The counter additionally splits the
/// unassigned vertices into independent groups at every node: an arc whose
/// constraint already holds for all remaining candidate pairs no longer links
/// its endpoints, and the count of independent groups multiplies.
class HomSearch {
 public:
  HomSearch(const Digraph& source, const Digraph& target, HomKind kind);

  /// Intersects the candidate set of v with `allowed`.
  void restrict_domain(Vertex v, TargetMask allowed);
  void fix(Vertex v, Vertex image) { restrict_domain(v, TargetMask{1} << image); }
  /// Moves the given vertices to the front of the search order, keeping their
  /// relative order. Useful when a few hub vertices decouple the rest.
  void prioritize(const std::vector<Vertex>& first);

  BigInt count() const;
  bool exists() const;
  std::optional<VertexMap> first() const;
  /// Visits every solution; the visitor returns false to stop early.
  void for_each(const std::function<bool(const VertexMap&)>& visit) const;
  /// All solutions in lexicographic order of their image tuples.
  std::vector<VertexMap> enumerate() const;

 private:
  struct Neighbor {
    Vertex other;
    bool outgoing;  // true for arcs self -> other
  };
  using Domains = std::vector<TargetMask>;

  bool propagate(Domains& dom, Vertex v, Vertex image,
                 const std::vector<char>* scope) const;
  bool entailed(const Domains& dom, Vertex from, Vertex to) const;
  std::vector<std::vector<Vertex>> split(const Domains& dom,
                                         const std::vector<Vertex>& group) const;
  BigInt count_group(const Domains& dom, const std::vector<Vertex>& group) const;
  bool search(Domains& dom, std::size_t depth, std::vector<Vertex>& image,
              const std::function<bool(const VertexMap&)>& visit) const;

  std::size_t source_order_;
  std::size_t target_order_;
  std::vector<Vertex> order_;
  std::vector<std::size_t> rank_;
  std::vector<std::vector<Neighbor>> neighbors_;
  std::vector<TargetMask> rel_out_;
  std::vector<TargetMask> rel_in_;
  Domains initial_;
};

BigInt count_homs(const Digraph& g, const Digraph& h, HomKind kind = HomKind::all);
std::vector<VertexMap> enumerate_homs(const Digraph& g, const Digraph& h,
                                      HomKind kind = HomKind::all);
bool has_hom(const Digraph& g, const Digraph& h, HomKind kind = HomKind::all);

/// [ξ]_{G'}: homomorphisms G' -> H that agree with ξ on V(G). G must be a
/// subgraph of G' with the same vertex ids.
std::vector<VertexMap> extensions(const Digraph& g, const Digraph& g_big,
                                  const Digraph& h, const VertexMap& xi);
BigInt count_extensions(const Digraph& g, const Digraph& g_big, const Digraph& h,
                        const VertexMap& xi);

/// The values ι(ξ(v), ξ(w))_H on an arc subset B of A(G*).
struct IotaProfile {
  std::vector<Arc> arcs;
  std::vector<std::size_t> values;

  friend bool operator==(const IotaProfile&, const IotaProfile&) = default;
  friend auto operator<=>(const IotaProfile&, const IotaProfile&) = default;
};

IotaProfile iota_profile(const Digraph& h, const VertexMap& xi,
                         const std::vector<Arc>& arcs);
/// μ_ξ(G): sum of ι_ξ over A(G*).
std::size_t mu(const Digraph& g, const Digraph& h, const VertexMap& xi);

/// ⋃_L A(L*), sorted and deduplicated.
std::vector<Arc> family_arcs(const std::vector<SubDigraph>& family);

struct MuHat {
  std::size_t value = 0;
  std::vector<VertexMap> maximizers;  // ℳ(L, H)
};
/// μ̂(L, H) and ℳ(L, H). Throws when ℋ(L, H) is empty.
MuHat mu_hat(const Digraph& l, const Digraph& h);

/// ℳ^ℒ(G, H): homomorphisms whose restriction to every L is μ-maximal.
std::vector<VertexMap> m_class(const Digraph& g, const Digraph& h,
                               const std::vector<SubDigraph>& family);
/// ℐ^ℒ(G, H): the profiles of ℳ^ℒ(G, H) on ⋃_L A(L*), deduplicated.
std::vector<IotaProfile> i_class(const Digraph& g, const Digraph& h,
                                 const std::vector<SubDigraph>& family);

/// 𝒥^ℒ_{G,H'}(ξ) where ξ maps G into h: every ζ ∈ ℋ(G, H') whose profile on
/// each A(L*) equals that of ξ.
std::vector<VertexMap> j_class(const Digraph& g, const Digraph& h, const VertexMap& xi,
                               const Digraph& h_target,
                               const std::vector<SubDigraph>& family);
/// Same, filtering a precomputed ℋ(G, H').
std::vector<VertexMap> j_class_of(const Digraph& h, const VertexMap& xi,
                                  const Digraph& h_target,
                                  const std::vector<VertexMap>& target_homs,
                                  const std::vector<SubDigraph>& family);

}  // namespace homlab
