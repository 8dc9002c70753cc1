#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homlab/arc_weights.hpp"
#include "homlab/digraph.hpp"
#include "homlab/expo_sum.hpp"
#include "homlab/vertex_map.hpp"

namespace homlab {

struct CheckReport {
  std::string id;
  std::string universe;
  std::size_t instances = 0;
  /// Each entry is a self-contained block with the data needed to reproduce.
  std::vector<std::string> violations;
  /// Deterministic facts gathered along the way (counts, largest ν, ...).
  std::vector<std::string> notes;
  double seconds = 0;  // not part of the text form

  bool passed() const { return violations.empty(); }
  /// Header, universe, violation blocks, notes, `violations=<k> instances=<m>`.
  std::string to_text() const;
};

struct CheckOptions {
  /// Vertex bound for the source catalog; 0 picks the check's default.
  std::size_t max_n = 0;
  unsigned jobs = 1;
};

/// Weight δ = γ_ξ^ℒ together with the exponential forms of #ℋ(G(δ)_ν, R)
/// and #ℋ(G(δ)_ν, S), and the least ν at which the R-count exceeds the
/// S-count (nullopt if it never does).
struct NuWitness {
  ArcWeight weight;
  ExpoSum r_counts;
  ExpoSum s_counts;
  std::optional<unsigned> nu;
};

/// Requires reflexive R, S and ξ ∈ ℳ^ℒ(G, R).
NuWitness witness_nu(const Digraph& g, const Digraph& r, const Digraph& s,
                     const VertexMap& xi, const std::vector<SubDigraph>& family);

/// Outcome of turning a strict-count gap into a concrete hom-count gap.
struct GapWitness {
  bool found = false;
  unsigned nu = 0;
  std::size_t order = 0;  // vertices of the witness digraph
  BigInt r_count = 0;
  BigInt s_count = 0;
  std::string failure;  // why no witness was produced
};

/// Builds G(δ)_ν (or the poset variant) for ν from witness_nu and counts
/// homomorphisms into R and S directly. The counts are also compared with
/// the exponential forms.
GapWitness confirm_gap(const Digraph& g, const Digraph& r, const Digraph& s,
                       const VertexMap& xi, const std::vector<SubDigraph>& family,
                       bool poset_variant);

/// Extension-count formula over posets G, reflexive H, 0/1/2 weights on at
/// most three arcs and ν <= 2.
CheckReport check_extension(const CheckOptions& opt);
/// γ_ζ^ℒ selecting for every ζ ∈ ℳ^ℒ, leading terms, weight combination.
CheckReport check_selecting(const CheckOptions& opt);
/// Both membership tests for class R agree on reflexive T_a digraphs.
CheckReport check_r_membership(const CheckOptions& opt);
CheckReport check_cover_gaps(const CheckOptions& opt);
CheckReport check_height_gaps(const CheckOptions& opt);
/// φ_G exactness on shell-encapsulated digraphs against interval-path chains.
CheckReport check_phi_scaling(const CheckOptions& opt);
/// Strict-count gaps over shell-encapsulated sources become hom-count gaps.
CheckReport check_capsule_gaps(const CheckOptions& opt);
CheckReport check_top_path_strictness(const CheckOptions& opt);
CheckReport check_lovasz_desk(const CheckOptions& opt);
/// Backtracking counts against a naive filter of all maps on random inputs.
CheckReport check_engine(const CheckOptions& opt, std::size_t instances = 500,
                         unsigned long long seed = 20240611);

/// Check ids accepted by run_check: eq4 selecting prop1 thm5 thm6 thm7 thm8
/// prop2 lovasz engine.
std::vector<std::string> check_ids();
CheckReport run_check(const std::string& id, const CheckOptions& opt);

}  // namespace homlab
