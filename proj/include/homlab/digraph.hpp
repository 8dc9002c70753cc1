#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace homlab {

using Vertex = std::uint32_t;
using Arc = std::pair<Vertex, Vertex>;
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

/// Raised for every violated precondition in the library.
class Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::vector<Vertex> members(const VertexSet& set);

/// A finite digraph on the vertices 0..n-1. Loops are allowed.
///
/// Values are immutable: every structural operation returns a new digraph.
/// Out- and in-neighbourhoods are stored as bitsets, so an interval query
/// [v, w] is a single intersection.
class Digraph {
 public:
  explicit Digraph(std::size_t n);
  Digraph(std::size_t n, std::span<const Arc> arcs);
  Digraph(std::size_t n, std::initializer_list<Arc> arcs)
      : Digraph(n, std::span<const Arc>(arcs.begin(), arcs.size())) {}

  std::size_t order() const { return out_.size(); }
  std::size_t arc_count() const { return arc_count_; }

  bool has_arc(Vertex u, Vertex v) const { return out_[u].test(v); }
  bool has_loop(Vertex v) const { return out_[v].test(v); }

  /// N^out(v), including v itself when v carries a loop.
  const VertexSet& out(Vertex v) const { return out_[v]; }
  /// N^in(v), including v itself when v carries a loop.
  const VertexSet& in(Vertex v) const { return in_[v]; }

  /// All arcs in ascending lexicographic order.
  std::vector<Arc> arcs() const;
  /// Proper arcs, i.e. A(G*), in ascending lexicographic order.
  std::vector<Arc> proper_arcs() const;
  std::size_t loop_count() const;

  bool is_reflexive() const;
  bool is_transitive() const;
  bool is_antisymmetric() const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.out_ == b.out_;
  }

 private:
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
  std::size_t arc_count_ = 0;
};

VertexSet empty_set(std::size_t n);
VertexSet full_set(std::size_t n);

/// G* : the same vertices, loops removed.
Digraph strip_loops(const Digraph& g);
/// G with a loop added at every vertex.
Digraph add_loops(const Digraph& g);

/// [v, w]_G = N^out(v) ∩ N^in(w). Requires vw ∈ A(G).
VertexSet interval(const Digraph& g, Vertex v, Vertex w);
/// ι(v, w)_G = #[v, w]_G. Requires vw ∈ A(G).
std::size_t iota(const Digraph& g, Vertex v, Vertex w);

/// Smallest transitive arc set containing A(G).
Digraph transitive_hull(const Digraph& g);

/// True iff G* has no closed walk.
bool is_loopless_acyclic(const Digraph& g);

/// Rd(G): erase every arc vw for which G* has a walk of length >= 2 from v to
/// w. Loops survive. Only defined for G ∈ 𝔗ₐ.
Digraph transitive_reduction(const Digraph& g);
/// G_× = Rd(G)*, the cover digraph.
Digraph cover_digraph(const Digraph& g);

/// G|_X with vertices renumbered in ascending order of X.
Digraph induced(const Digraph& g, const VertexSet& subset);

/// Vertex v is isolated iff N(v) ⊆ {v}.
bool is_isolated(const Digraph& g, Vertex v);
VertexSet isolated_vertices(const Digraph& g);

/// Undirected connectivity components of G|_X (ascending by least member).
std::vector<VertexSet> components(const Digraph& g, const VertexSet& subset);

/// C_n: {0..n} with i -> j iff i <= j.
Digraph chain(std::size_t n);
/// E = C_0.
Digraph singleton_with_loop();
Digraph antichain(std::size_t n, bool loops = true);
/// Vertices of a come first, then those of b shifted by a.order().
Digraph disjoint_union(const Digraph& a, const Digraph& b);
/// Vertex v of g becomes perm[v].
Digraph relabel(const Digraph& g, std::span<const Vertex> perm);

/// A subgraph L of a host digraph, kept in host vertex ids.
struct SubDigraph {
  std::vector<Vertex> vertices;  // ascending
  std::vector<Arc> arcs;         // ascending, host ids

  /// L renumbered to 0..k-1 following `vertices`.
  Digraph local() const;
  /// A(L*) in host ids.
  std::vector<Arc> proper_arcs() const;
  bool contains_vertex(Vertex v) const;
  bool is_subgraph_of(const Digraph& host) const;

  static SubDigraph whole(const Digraph& g);
  friend bool operator==(const SubDigraph&, const SubDigraph&) = default;
};

std::string to_dot(const Digraph& g, const std::string& name = "G");

}  // namespace homlab
