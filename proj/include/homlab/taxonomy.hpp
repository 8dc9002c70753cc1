#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homlab/digraph.hpp"
#include "homlab/paths.hpp"
#include "homlab/shells.hpp"
#include "homlab/vertex_map.hpp"

namespace homlab {

/// G* has no closed walk.
bool in_Ta(const Digraph& g);
/// Same class through the hull: Tr(G*) is loopless.
bool in_Ta_via_hull(const Digraph& g);
bool is_poset(const Digraph& g);
/// Height at most one; requires nothing, false outside T_a.
bool is_flat(const Digraph& g);

enum class RMethod { sum_condition, direct };

struct RResult {
  bool member = false;
  /// sum_condition: a path whose interval sizes along it exceed h_G + ℓ(P).
  std::optional<PathSeq> violating_path;
  /// direct: a strict self-map that is μ-maximal on every top path.
  std::optional<VertexMap> witness;
};

/// Membership in the class of reflexive T_a digraphs with a strict
/// self-homomorphism that is μ-maximal on each top path. Requires a
/// reflexive G in T_a.
RResult in_R(const Digraph& g, RMethod method);

/// Height n and every vertex on a longest path. Requires G in T_a.
bool in_Taghn(const Digraph& g, std::size_t n);

/// Poset whose maximal paths all have length n and whose intervals are
/// paths.
bool in_Chn(const Digraph& g, std::size_t n);

struct TaghnAResult {
  bool member = false;
  std::vector<CapsuleData> capsules;  // one per off-top component when member
};

/// Shell-encapsulated class of height n. Requires G in T_a with h_G == n.
TaghnAResult in_TaghnA(const Digraph& g, std::size_t n);

struct ClassReport {
  std::size_t order = 0;
  std::size_t arcs = 0;
  bool reflexive = false;
  bool antisymmetric = false;
  bool transitive = false;
  bool poset = false;
  bool in_Ta = false;
  bool flat = false;
  std::optional<std::size_t> height;
  std::size_t n = 0;  // parameter of the height classes
  std::optional<bool> in_Taghn;
  std::optional<bool> in_TaghnA;
  bool in_Chn = false;
  std::optional<RResult> in_R;  // direct method; absent unless reflexive and in T_a
  std::optional<bool> in_R_sum_condition;

  /// One-line JSON with a fixed key order.
  std::string to_json() const;
};

/// n defaults to h_G (or 0 outside T_a).
ClassReport classify(const Digraph& g, std::optional<std::size_t> n = std::nullopt);

}  // namespace homlab
