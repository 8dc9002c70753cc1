#include "homlab/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "homlab/io.hpp"
#include "homlab/parallel.hpp"
#include "homlab/paths.hpp"
#include "homlab/taxonomy.hpp"

namespace homlab {

namespace {

struct KindName {
  CatalogKind kind;
  const char* name;
  bool parameterized;
};

// Longer names first so that prefix matching picks TaghnA over Taghn over Ta.
constexpr KindName kKindNames[] = {
    {CatalogKind::all_digraphs, "all_digraphs", false},
    {CatalogKind::reflexive, "reflexive", false},
    {CatalogKind::flat_posets, "flat_posets", false},
    {CatalogKind::posets, "posets", false},
    {CatalogKind::TaghnA, "TaghnA", true},
    {CatalogKind::Taghn, "Taghn", true},
    {CatalogKind::Chn, "Chn", true},
    {CatalogKind::Ta, "Ta", false},
};

using Masks = std::vector<std::uint32_t>;

Masks out_masks(const Digraph& g) {
  Masks m(g.order(), 0);
  for (const Arc& a : g.arcs()) m[a.first] |= 1u << a.second;
  return m;
}

/// Branch-and-bound search for the least shell-ordered code.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Digraph& g)
      : n_(g.order()), adj_(out_masks(g)), total_bits_(n_ * n_) {}

  std::pair<CanonicalCode, std::vector<Vertex>> run() {
    perm_.assign(n_, 0);
    place(0, 0, 0);
    return {best_, best_perm_};
  }

 private:
  bool bit(Vertex u, Vertex v) const { return (adj_[u] >> v) & 1u; }

  /// Shell bits of candidate c at position k given the placed positions.
  CanonicalCode shell(std::size_t k, Vertex c) const {
    CanonicalCode bits = bit(c, c);
    for (std::size_t i = 0; i < k; ++i) {
      bits = (bits << 1) | bit(perm_[i], c);
      bits = (bits << 1) | bit(c, perm_[i]);
    }
    return bits;
  }

  void place(std::size_t k, std::uint32_t used, CanonicalCode prefix) {
    const std::size_t width = 2 * k + 1;
    const std::size_t length = (k + 1) * (k + 1);
    struct Option {
      CanonicalCode code;
      Vertex vertex;
    };
    std::vector<Option> options;
    for (Vertex c = 0; c < n_; ++c) {
      if (used & (1u << c)) continue;
      const CanonicalCode code = (prefix << width) | shell(k, c);
      if (found_ && code > (best_ >> (total_bits_ - length))) continue;
      options.push_back({code, c});
    }
    std::sort(options.begin(), options.end(),
              [](const Option& a, const Option& b) { return a.code < b.code; });
    for (const Option& o : options) {
      if (found_ && o.code > (best_ >> (total_bits_ - length))) break;
      perm_[k] = o.vertex;
      if (k + 1 == n_) {
        if (!found_ || o.code < best_) {
          best_ = o.code;
          best_perm_ = perm_;
          found_ = true;
        }
      } else {
        place(k + 1, used | (1u << o.vertex), o.code);
      }
    }
  }

  std::size_t n_;
  Masks adj_;
  std::size_t total_bits_;
  std::vector<Vertex> perm_;  // position -> vertex
  CanonicalCode best_ = 0;
  std::vector<Vertex> best_perm_;
  bool found_ = false;
};

void require_canonical_size(const Digraph& g) {
  if (g.order() > kCanonicalCap) throw Error("canonical form limited to 9 vertices");
}

std::vector<Digraph> seeds(CatalogKind base) {
  switch (base) {
    case CatalogKind::all_digraphs:
    case CatalogKind::Ta:
      return {Digraph(1), singleton_with_loop()};
    default:
      return {singleton_with_loop()};
  }
}

/// Digraphs on n+1 vertices whose restriction to 0..n-1 is g and in which
/// the new vertex n can be removed without leaving the class.
std::vector<Digraph> extensions_of(CatalogKind base, const Digraph& g) {
  const std::size_t n = g.order();
  const Vertex x = static_cast<Vertex>(n);
  const std::vector<Arc> old = g.arcs();
  std::vector<Digraph> out;
  auto build = [&](std::uint32_t in_set, std::uint32_t out_set, bool loop) {
    std::vector<Arc> arcs = old;
    for (Vertex v = 0; v < n; ++v) {
      if (in_set & (1u << v)) arcs.emplace_back(v, x);
      if (out_set & (1u << v)) arcs.emplace_back(x, v);
    }
    if (loop) arcs.emplace_back(x, x);
    out.emplace_back(n + 1, arcs);
  };
  const std::uint32_t subsets = 1u << n;
  switch (base) {
    case CatalogKind::all_digraphs:
    case CatalogKind::reflexive:
      for (std::uint32_t in = 0; in < subsets; ++in) {
        for (std::uint32_t o = 0; o < subsets; ++o) {
          if (base == CatalogKind::all_digraphs) build(in, o, false);
          build(in, o, true);
        }
      }
      break;
    case CatalogKind::Ta:
      // A new sink of G*.
      for (std::uint32_t in = 0; in < subsets; ++in) {
        build(in, 0, false);
        build(in, 0, true);
      }
      break;
    default: {
      // A new maximal element above a down-set.
      const Masks adj = out_masks(g);
      for (std::uint32_t in = 0; in < subsets; ++in) {
        bool down_closed = true;
        for (Vertex v = 0; v < n && down_closed; ++v) {
          if (!(in & (1u << v))) continue;
          for (Vertex u = 0; u < n; ++u) {
            if ((adj[u] >> v & 1u) && !(in & (1u << u))) {
              down_closed = false;
              break;
            }
          }
        }
        if (down_closed) build(in, 0, true);
      }
    }
  }
  return out;
}

CatalogKind base_kind(CatalogKind k) {
  switch (k) {
    case CatalogKind::all_digraphs:
    case CatalogKind::reflexive:
    case CatalogKind::Ta:
    case CatalogKind::posets:
      return k;
    case CatalogKind::Taghn:
    case CatalogKind::TaghnA:
      return CatalogKind::Ta;
    default:
      return CatalogKind::posets;
  }
}

bool keep(const CatalogSpec& spec, const Digraph& g) {
  switch (spec.kind) {
    case CatalogKind::flat_posets:
      return is_flat(g);
    case CatalogKind::Chn:
      return in_Chn(g, spec.height);
    case CatalogKind::Taghn:
      return in_Taghn(g, spec.height);
    case CatalogKind::TaghnA:
      return analyze_paths(g).height == spec.height && in_TaghnA(g, spec.height).member;
    default:
      return true;
  }
}

}  // namespace

std::string CatalogSpec::name() const {
  for (const KindName& k : kKindNames) {
    if (k.kind == kind) {
      return k.parameterized ? k.name + std::to_string(height) : std::string(k.name);
    }
  }
  throw Error("unknown catalog kind");
}

CatalogSpec CatalogSpec::parse(const std::string& name) {
  for (const KindName& k : kKindNames) {
    const std::string prefix = k.name;
    if (name.rfind(prefix, 0) != 0) continue;
    const std::string rest = name.substr(prefix.size());
    if (!k.parameterized) {
      if (rest.empty()) return {k.kind, 0};
      continue;
    }
    if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos) {
      throw Error("catalog kind " + prefix + " needs a height, e.g. " + prefix + "2");
    }
    return {k.kind, static_cast<std::size_t>(std::stoul(rest))};
  }
  throw Error("unknown catalog kind: " + name);
}

std::size_t catalog_cap() {
  const char* env = std::getenv("HOMLAB_MAX_N");
  if (env == nullptr || *env == '\0') return kCatalogCap;
  char* end = nullptr;
  const unsigned long value = std::strtoul(env, &end, 10);
  if (*end != '\0' || value == 0) throw Error("HOMLAB_MAX_N must be a positive integer");
  const std::size_t cap = std::min<std::size_t>(value, kCanonicalCap);
  std::cerr << "warning: HOMLAB_MAX_N overrides the vertex cap " << kCatalogCap << " with "
            << cap << '\n';
  return cap;
}

CanonicalCode adjacency_code(const Digraph& g) {
  require_canonical_size(g);
  CanonicalCode code = 0;
  for (Vertex k = 0; k < g.order(); ++k) {
    code = (code << 1) | g.has_arc(k, k);
    for (Vertex i = 0; i < k; ++i) {
      code = (code << 1) | g.has_arc(i, k);
      code = (code << 1) | g.has_arc(k, i);
    }
  }
  return code;
}

Digraph decode(std::size_t n, CanonicalCode code) {
  if (n == 0 || n > kCanonicalCap) throw Error("code size out of range");
  std::vector<Arc> arcs;
  std::size_t pos = n * n;
  auto next = [&] { return static_cast<bool>((code >> --pos) & 1u); };
  for (Vertex k = 0; k < n; ++k) {
    if (next()) arcs.emplace_back(k, k);
    for (Vertex i = 0; i < k; ++i) {
      if (next()) arcs.emplace_back(i, k);
      if (next()) arcs.emplace_back(k, i);
    }
  }
  return Digraph(n, arcs);
}

CanonicalCode canonical_code(const Digraph& g) {
  require_canonical_size(g);
  return CanonicalSearch(g).run().first;
}

Digraph canonical(const Digraph& g) { return decode(g.order(), canonical_code(g)); }

bool is_isomorphic(const Digraph& a, const Digraph& b) {
  if (a.order() != b.order() || a.arc_count() != b.arc_count()) return false;
  return canonical_code(a) == canonical_code(b);
}

Catalog generate(CatalogSpec spec, std::size_t max_n, unsigned jobs) {
  if (max_n == 0) throw Error("catalog needs max_n >= 1");
  if (max_n > catalog_cap()) {
    throw Error("catalog size " + std::to_string(max_n) + " exceeds the vertex cap");
  }
  const CatalogKind base = base_kind(spec.kind);
  std::vector<std::vector<Digraph>> levels{seeds(base)};
  for (std::size_t n = 2; n <= max_n; ++n) {
    std::vector<Digraph> candidates;
    for (const Digraph& g : levels.back()) {
      auto ext = extensions_of(base, g);
      candidates.insert(candidates.end(), std::make_move_iterator(ext.begin()),
                        std::make_move_iterator(ext.end()));
    }
    std::vector<CanonicalCode> codes(candidates.size());
    parallel_for(candidates.size(), jobs,
                 [&](std::size_t i) { codes[i] = canonical_code(candidates[i]); });
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
    std::vector<Digraph> level;
    level.reserve(codes.size());
    for (CanonicalCode c : codes) level.push_back(decode(n, c));
    levels.push_back(std::move(level));
  }

  Catalog cat{spec, max_n, {}};
  for (auto& level : levels) {
    std::vector<char> kept(level.size());
    parallel_for(level.size(), jobs, [&](std::size_t i) { kept[i] = keep(spec, level[i]); });
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (kept[i]) cat.members.push_back(std::move(level[i]));
    }
  }
  return cat;
}

void save_catalog(std::ostream& os, const Catalog& c) {
  os << "catalog " << c.spec.name() << ' ' << c.max_n << ' ' << c.members.size() << '\n';
  for (const Digraph& g : c.members) write_digraph(os, g);
}

Catalog load_catalog(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw Error("empty catalog file");
  std::istringstream header(line);
  std::string word, kind;
  std::size_t max_n = 0, count = 0;
  if (!(header >> word >> kind >> max_n >> count) || word != "catalog") {
    throw Error("expected `catalog <kind> <max_n> <count>`");
  }
  Catalog c{CatalogSpec::parse(kind), max_n, read_digraphs(is)};
  if (c.members.size() != count) throw Error("catalog record count does not match header");
  return c;
}

}  // namespace homlab
