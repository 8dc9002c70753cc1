#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "homlab/bigint.hpp"
#include "homlab/digraph.hpp"
#include "homlab/expo_sum.hpp"
#include "homlab/hom_engine.hpp"
#include "homlab/vertex_map.hpp"

namespace homlab {

/// A map A(G*) -> N0. Arcs outside A(G*) are rejected.
class ArcWeight {
 public:
  /// The zero weight on `host`.
  explicit ArcWeight(Digraph host);

  const Digraph& host() const { return host_; }
  /// A(G*), ascending.
  const std::vector<Arc>& domain() const { return domain_; }

  unsigned operator()(Vertex v, Vertex w) const;
  void set(Vertex v, Vertex w, unsigned value);

  /// D(α): arcs with positive weight, ascending.
  std::vector<Arc> support() const;
  bool is_zero() const;
  unsigned total() const;

  friend bool operator==(const ArcWeight& a, const ArcWeight& b) {
    return a.host_ == b.host_ && a.values_ == b.values_;
  }

 private:
  std::size_t index_of(Vertex v, Vertex w) const;

  Digraph host_;
  std::vector<Arc> domain_;
  std::vector<unsigned> values_;
};

struct Expansion {
  Digraph result{1};
  std::size_t base_order = 0;  // vertices 0..base_order-1 are those of G
  unsigned nu = 0;
  bool poset_variant = false;
  /// X_ν(v, w) for every vw in D(α), in arc order.
  std::vector<std::pair<Arc, std::vector<Vertex>>> clamps;
};

/// G(α)_ν: ν·α(v,w) fresh vertices x per weighted arc vw, each with arcs
/// v -> x -> w. Fresh vertices are numbered after V(G), arc by arc in
/// ascending order. The poset variant returns the transitive hull with loops
/// on the fresh vertices; it requires a poset G and is checked to be one.
Expansion expand(const Digraph& g, const ArcWeight& alpha, unsigned nu,
                 bool poset_variant = false);

/// #ℋ(expansion, H), searching the vertices of G first: once they are
/// placed, the fresh vertices decouple.
BigInt count_homs(const Expansion& ex, const Digraph& h);

/// π_α(ξ) = Π ι_ξ(v,w)^α(v,w) over A(G*). Requires a reflexive H.
BigInt pi_alpha(const Digraph& h, const VertexMap& xi, const ArcWeight& alpha);

struct ExtensionMismatch {
  VertexMap xi;
  BigInt expected;  // π_α(ξ)^ν
  BigInt counted;   // #[ξ] in the expansion
};

struct ExtensionReport {
  std::size_t classes = 0;
  std::vector<ExtensionMismatch> mismatches;
  BigInt total_expected = 0;  // Σ π_α(ξ)^ν
  BigInt total_counted = 0;   // #ℋ(expansion, H), counted directly
  bool ok() const { return mismatches.empty() && total_expected == total_counted; }
};

/// Counts the extensions of every ξ ∈ ℋ(G, H) to the expansion and compares
/// with π_α(ξ)^ν, and the total hom count with Σ π_α(ξ)^ν. The poset variant
/// only holds for transitive H and is rejected otherwise.
ExtensionReport check_extension_formula(const Digraph& g, const ArcWeight& alpha,
                                        const Digraph& h, unsigned nu,
                                        bool poset_variant = false);

/// β(v,w) = Σ α_L(v,w) over the L whose proper arcs contain vw. Each α_L is
/// hosted on L.local().
ArcWeight combine_weights(const Digraph& g,
                          const std::vector<std::pair<SubDigraph, ArcWeight>>& family);

/// γ(v,w) = ι_ζ(v,w) · #{L : vw ∈ A(L*)}. Rejects ζ outside ℳ^ℒ(G, H).
ArcWeight selecting_weight(const Digraph& g, const Digraph& h, const VertexMap& zeta,
                           const std::vector<SubDigraph>& family);

struct SelectingResult {
  bool selecting = true;
  std::optional<VertexMap> counterexample;
};

/// For all ξ ∈ ℋ(G, H): π_α(ξ) <= π_α(ζ), with equality iff ξ and ζ have the
/// same profile on D(α).
SelectingResult is_selecting(const Digraph& g, const Digraph& h,
                             const ArcWeight& alpha, const VertexMap& zeta);
SelectingResult is_selecting(const Digraph& h, const ArcWeight& alpha,
                             const VertexMap& zeta, const std::vector<VertexMap>& homs);

/// Π x_i^{y_i} <= Π y_i^{y_i} with equality iff x == y, checked exactly.
/// Requires equal lengths, positive entries and Σx <= Σy.
bool gibbs_check(const std::vector<BigInt>& x, const std::vector<BigInt>& y);

/// ν ↦ #ℋ(G(α)_ν, H), aggregated from ℋ(G, H) by π_α.
ExpoSum hom_count_expo(const Digraph& g, const ArcWeight& alpha, const Digraph& h);
ExpoSum hom_count_expo(const Digraph& h, const ArcWeight& alpha,
                       const std::vector<VertexMap>& homs);

}  // namespace homlab
