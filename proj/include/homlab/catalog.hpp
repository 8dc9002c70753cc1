#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "homlab/digraph.hpp"

namespace homlab {

enum class CatalogKind {
  all_digraphs,
  reflexive,
  Ta,
  posets,
  flat_posets,
  Chn,     // parameterized by height
  Taghn,   // parameterized by height
  TaghnA,  // parameterized by height
};

struct CatalogSpec {
  CatalogKind kind = CatalogKind::posets;
  std::size_t height = 0;  // used by the parameterized kinds

  /// "posets", "Ta", "Chn3", ...
  std::string name() const;
  static CatalogSpec parse(const std::string& name);
  bool operator==(const CatalogSpec&) const = default;
};

struct Catalog {
  CatalogSpec spec;
  std::size_t max_n = 0;
  /// Canonical representatives, ordered by order and then canonical code.
  std::vector<Digraph> members;
};

inline constexpr std::size_t kCatalogCap = 7;
inline constexpr std::size_t kCanonicalCap = 9;

/// The vertex cap for catalogs: 7, or HOMLAB_MAX_N when set (warns on stderr).
std::size_t catalog_cap();

/// Every digraph of the kind on 1..max_n vertices, one per isomorphism class.
Catalog generate(CatalogSpec spec, std::size_t max_n, unsigned jobs = 1);

/// Up to 9 vertices fit into 81 bits.
using CanonicalCode = unsigned __int128;

/// Adjacency bits read shell by shell: for k = 0, 1, ..., the bit (k,k)
/// followed by (i,k), (k,i) for i < k. The first bit is the most significant.
/// Reading the matrix this way lets a relabeling search prune on prefixes;
/// the minimum over all relabelings is the canonical code.
CanonicalCode canonical_code(const Digraph& g);
CanonicalCode adjacency_code(const Digraph& g);
Digraph decode(std::size_t n, CanonicalCode code);

/// The relabeling of g with minimal adjacency code.
Digraph canonical(const Digraph& g);
bool is_isomorphic(const Digraph& a, const Digraph& b);

void save_catalog(std::ostream& os, const Catalog& c);
Catalog load_catalog(std::istream& is);

}  // namespace homlab
