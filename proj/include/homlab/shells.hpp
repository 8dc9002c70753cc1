#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homlab/bigint.hpp"
#include "homlab/digraph.hpp"
#include "homlab/paths.hpp"

namespace homlab {

/// Connectivity components of G_× restricted to the vertices off the top
/// paths. Empty when every vertex lies on a longest path.
std::vector<VertexSet> z_components(const Digraph& g, const PathStructure& ps);
std::vector<VertexSet> z_components(const Digraph& g);

enum class ShellChoice {
  /// Top-path vertices p with a G_×-path p -> z (dually z -> p) whose inner
  /// vertices all avoid the top paths. Every shell contains this one.
  frontier,
  /// Every top-path vertex with a G_×-path to z (dually from z).
  reachable,
};

/// Shells and bounds of one off-top component Z.
struct CapsuleData {
  std::vector<Vertex> component;             // Z, ascending
  std::vector<std::vector<Vertex>> bottom;   // B(z) per member of Z
  std::vector<std::vector<Vertex>> upper;    // U(z) per member of Z
  Vertex lower_bound = 0;                    // b_Z
  Vertex upper_bound = 0;                    // u_Z
  std::size_t span = 0;                      // k_Z = f_Z(u_Z)
  std::vector<std::size_t> floor;            // m_Z per member of Z
  std::vector<std::size_t> ceiling;          // M_Z per member of Z

  std::string to_string() const;
};

/// Bottom and upper shells of every member of Z.
std::pair<std::vector<std::vector<Vertex>>, std::vector<std::vector<Vertex>>>
component_shells(const Digraph& g, const PathStructure& ps, const VertexSet& z,
                 ShellChoice choice);

/// Every admissible (b_Z, u_Z) for the given shells: the union of the shells
/// and Z must lie inside [b_Z, u_Z] of Tr(G). Pairs in lexicographic order.
std::vector<std::pair<Vertex, Vertex>> admissible_bounds(
    const Digraph& g, const PathStructure& ps, const VertexSet& z,
    const std::vector<std::vector<Vertex>>& bottom,
    const std::vector<std::vector<Vertex>>& upper);

/// Capsule for Z with the requested shells and bounds (b_Z, u_Z).
CapsuleData make_capsule(const PathStructure& ps, const VertexSet& z,
                         std::vector<std::vector<Vertex>> bottom,
                         std::vector<std::vector<Vertex>> upper,
                         std::pair<Vertex, Vertex> bounds);

/// Frontier shells and the lexicographically first admissible bounds, or
/// nullopt when none fit.
std::optional<CapsuleData> find_shells(const Digraph& g, const PathStructure& ps,
                                       const VertexSet& z,
                                       ShellChoice choice = ShellChoice::frontier);

/// Capsules of all components, or nullopt if one of them has no admissible
/// bounds.
std::optional<std::vector<CapsuleData>> find_all_shells(
    const Digraph& g, const PathStructure& ps,
    ShellChoice choice = ShellChoice::frontier);

struct BoundedCounts {
  BigInt homs;    // θ ∈ ℋ(Z, C_k) with m(z) <= θ(z) <= M(z)
  BigInt strict;  // θ ∈ 𝒮(Z, C_k) with m(z) < θ(z) < M(z)
};

/// Counts maps of `z_sub` into the chain {0..k} within per-vertex bounds.
BoundedCounts bounded_chain_counts(const Digraph& z_sub,
                                   const std::vector<std::size_t>& floor,
                                   const std::vector<std::size_t>& ceiling,
                                   std::size_t k);

/// Π over capsules of strict/all bounded counts.
Rational phi_from(const Digraph& g, const std::vector<CapsuleData>& capsules);
/// φ_G with frontier shells. Rejects G outside the shell-encapsulated class
/// of its own height.
Rational phi(const Digraph& g);

}  // namespace homlab
