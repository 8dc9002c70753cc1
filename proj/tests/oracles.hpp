#pragma once

// Brute-force reference implementations, kept independent of the library's
// search code so they can serve as oracles.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "homlab/digraph.hpp"
#include "homlab/vertex_map.hpp"

namespace oracle {

using homlab::Digraph;
using homlab::Vertex;
using homlab::VertexMap;

/// Visits every map V(G) -> V(H) in lexicographic order.
inline void for_each_map(std::size_t n, std::size_t m,
                         const std::function<void(const std::vector<Vertex>&)>& visit) {
  if (m == 0 && n > 0) return;
  std::vector<Vertex> image(n, 0);
  while (true) {
    visit(image);
    std::size_t i = n;
    while (i > 0 && image[i - 1] + 1 == m) image[--i] = 0;
    if (i == 0) return;
    ++image[i - 1];
  }
}

inline bool preserves_arcs(const Digraph& g, const Digraph& h, const std::vector<Vertex>& f,
                           bool strict) {
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (!g.has_arc(u, v)) continue;
      if (!h.has_arc(f[u], f[v])) return false;
      if (strict && u != v && f[u] == f[v]) return false;
    }
  }
  return true;
}

inline std::vector<VertexMap> homs(const Digraph& g, const Digraph& h, bool strict = false) {
  std::vector<VertexMap> out;
  for_each_map(g.order(), h.order(), [&](const std::vector<Vertex>& f) {
    if (preserves_arcs(g, h, f, strict)) out.push_back({f, h.order()});
  });
  return out;
}

/// Adjacency matrix read row by row.
inline std::string matrix_string(const Digraph& g, const std::vector<Vertex>& perm) {
  const std::size_t n = g.order();
  std::string s(n * n, '0');
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (g.has_arc(u, v)) s[perm[u] * n + perm[v]] = '1';
    }
  }
  return s;
}

/// Isomorphism-invariant key: the smallest matrix string over all relabelings.
inline std::string iso_key(const Digraph& g) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::string best;
  do {
    std::string s = matrix_string(g, perm);
    if (best.empty() || s < best) best = std::move(s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::to_string(g.order()) + ":" + best;
}

/// Every relation on n labeled vertices whose loop pattern is `loops`
/// (-1: free, 0: none, 1: all).
inline void for_each_relation(std::size_t n, int loops, const std::function<void(const Digraph&)>& visit) {
  std::vector<homlab::Arc> slots;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v || loops == -1) slots.emplace_back(u, v);
    }
  }
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << slots.size()); ++bits) {
    std::vector<homlab::Arc> arcs;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (bits >> i & 1) arcs.push_back(slots[i]);
    }
    if (loops == 1) {
      for (Vertex v = 0; v < n; ++v) arcs.emplace_back(v, v);
    }
    visit(Digraph(n, arcs));
  }
}

/// Number of isomorphism classes among the relations accepted by `keep`.
inline std::size_t classes(std::size_t n, int loops, const std::function<bool(const Digraph&)>& keep) {
  std::set<std::string> keys;
  for_each_relation(n, loops, [&](const Digraph& g) {
    if (keep(g)) keys.insert(iso_key(g));
  });
  return keys.size();
}

/// Closed walk in G* found by repeated sink removal.
inline bool loopless_part_acyclic(const Digraph& g) {
  const std::size_t n = g.order();
  std::vector<char> gone(n, 0);
  for (std::size_t round = 0; round < n; ++round) {
    bool removed = false;
    for (Vertex v = 0; v < n; ++v) {
      if (gone[v]) continue;
      bool sink = true;
      for (Vertex w = 0; w < n; ++w) {
        if (w != v && !gone[w] && g.has_arc(v, w)) sink = false;
      }
      if (sink) {
        gone[v] = 1;
        removed = true;
      }
    }
    if (!removed) break;
  }
  return std::all_of(gone.begin(), gone.end(), [](char c) { return c != 0; });
}

inline bool order_relation(const Digraph& g) {
  const std::size_t n = g.order();
  for (Vertex u = 0; u < n; ++u) {
    if (!g.has_arc(u, u)) return false;
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && g.has_arc(u, v) && g.has_arc(v, u)) return false;
      for (Vertex w = 0; w < n; ++w) {
        if (g.has_arc(u, v) && g.has_arc(v, w) && !g.has_arc(u, w)) return false;
      }
    }
  }
  return true;
}

/// Length of a longest path by exhaustive search over simple paths.
inline std::size_t longest_path(const Digraph& g) {
  std::size_t best = 0;
  std::vector<char> used(g.order(), 0);
  std::function<void(Vertex, std::size_t)> dfs = [&](Vertex v, std::size_t len) {
    best = std::max(best, len);
    used[v] = 1;
    for (Vertex w = 0; w < g.order(); ++w) {
      if (!used[w] && g.has_arc(v, w)) dfs(w, len + 1);
    }
    used[v] = 0;
  };
  for (Vertex v = 0; v < g.order(); ++v) dfs(v, 0);
  return best;
}

}  // namespace oracle
