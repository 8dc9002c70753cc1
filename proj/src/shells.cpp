#include "homlab/shells.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "homlab/hom_engine.hpp"

namespace homlab {

std::vector<VertexSet> z_components(const Digraph& g, const PathStructure& ps) {
  (void)g;
  return components(ps.cover, ps.off_top);
}

std::vector<VertexSet> z_components(const Digraph& g) {
  return z_components(g, analyze_paths(g));
}

namespace {

/// Top-path vertices met when walking from `start` along cover arcs in one
/// direction. The frontier walk stops at the first top-path vertex.
std::vector<Vertex> shell_of(const PathStructure& ps, Vertex start, bool downward,
                             ShellChoice choice) {
  const Digraph& cover = ps.cover;
  const std::size_t n = cover.order();
  VertexSet seen(n);
  VertexSet shell(n);
  std::vector<Vertex> stack{start};
  seen.set(start);
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex p : members(downward ? cover.in(v) : cover.out(v))) {
      if (seen.test(p)) continue;
      seen.set(p);
      if (ps.top_vertices.test(p)) {
        shell.set(p);
        if (choice == ShellChoice::frontier) continue;
      }
      stack.push_back(p);
    }
  }
  return members(shell);
}

}  // namespace

std::pair<std::vector<std::vector<Vertex>>, std::vector<std::vector<Vertex>>>
component_shells(const Digraph& g, const PathStructure& ps, const VertexSet& z,
                 ShellChoice choice) {
  (void)g;
  std::vector<std::vector<Vertex>> bottom, upper;
  for (Vertex v : members(z)) {
    bottom.push_back(shell_of(ps, v, true, choice));
    upper.push_back(shell_of(ps, v, false, choice));
  }
  return {bottom, upper};
}

std::vector<std::pair<Vertex, Vertex>> admissible_bounds(
    const Digraph& g, const PathStructure& ps, const VertexSet& z,
    const std::vector<std::vector<Vertex>>& bottom,
    const std::vector<std::vector<Vertex>>& upper) {
  const Digraph hull = transitive_hull(g);
  VertexSet needed = z;
  for (const auto& shell : bottom) for (Vertex v : shell) needed.set(v);
  for (const auto& shell : upper) for (Vertex v : shell) needed.set(v);

  std::vector<std::pair<Vertex, Vertex>> out;
  const std::vector<Vertex> top = members(ps.top_vertices);
  for (Vertex b : top) {
    for (Vertex u : top) {
      if (!hull.has_arc(b, u)) continue;
      if (needed.is_subset_of(interval(hull, b, u))) out.emplace_back(b, u);
    }
  }
  return out;
}

CapsuleData make_capsule(const PathStructure& ps, const VertexSet& z,
                         std::vector<std::vector<Vertex>> bottom,
                         std::vector<std::vector<Vertex>> upper,
                         std::pair<Vertex, Vertex> bounds) {
  CapsuleData c;
  c.component = members(z);
  c.bottom = std::move(bottom);
  c.upper = std::move(upper);
  c.lower_bound = bounds.first;
  c.upper_bound = bounds.second;
  const int base = ps.position[c.lower_bound];
  auto offset = [&](Vertex w) {
    const int f = ps.position[w] - base;
    if (ps.position[w] < 0 || f < 0) {
      throw std::logic_error("capsule vertex below its lower bound");
    }
    return static_cast<std::size_t>(f);
  };
  c.span = offset(c.upper_bound);
  for (std::size_t i = 0; i < c.component.size(); ++i) {
    if (c.bottom[i].empty() || c.upper[i].empty()) {
      throw std::logic_error("admissible capsule with an empty shell");
    }
    std::size_t lo = 0;
    for (Vertex a : c.bottom[i]) lo = std::max(lo, offset(a));
    std::size_t hi = c.span;
    for (Vertex b : c.upper[i]) hi = std::min(hi, offset(b));
    c.floor.push_back(lo);
    c.ceiling.push_back(hi);
  }
  return c;
}

std::optional<CapsuleData> find_shells(const Digraph& g, const PathStructure& ps,
                                       const VertexSet& z, ShellChoice choice) {
  auto [bottom, upper] = component_shells(g, ps, z, choice);
  const auto bounds = admissible_bounds(g, ps, z, bottom, upper);
  if (bounds.empty()) return std::nullopt;
  return make_capsule(ps, z, std::move(bottom), std::move(upper), bounds.front());
}

std::optional<std::vector<CapsuleData>> find_all_shells(const Digraph& g,
                                                        const PathStructure& ps,
                                                        ShellChoice choice) {
  std::vector<CapsuleData> out;
  for (const VertexSet& z : z_components(g, ps)) {
    auto c = find_shells(g, ps, z, choice);
    if (!c) return std::nullopt;
    out.push_back(std::move(*c));
  }
  return out;
}

std::string CapsuleData::to_string() const {
  std::ostringstream os;
  auto list = [&](const std::vector<Vertex>& vs) {
    os << '{';
    for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? "," : "") << vs[i];
    os << '}';
  };
  os << "component ";
  list(component);
  os << " bounds " << lower_bound << ' ' << upper_bound << " span " << span << '\n';
  for (std::size_t i = 0; i < component.size(); ++i) {
    os << "  z=" << component[i] << " bottom ";
    list(bottom[i]);
    os << " upper ";
    list(upper[i]);
    os << " m=" << floor[i] << " M=" << ceiling[i] << '\n';
  }
  return os.str();
}

BoundedCounts bounded_chain_counts(const Digraph& z_sub,
                                   const std::vector<std::size_t>& floor,
                                   const std::vector<std::size_t>& ceiling,
                                   std::size_t k) {
  const std::size_t n = z_sub.order();
  if (floor.size() != n || ceiling.size() != n) throw Error("bound tables do not fit");
  if (k + 1 > kMaxTargetOrder) throw Error("chain too long for the counter");
  auto range = [](std::size_t lo, std::size_t hi) {
    TargetMask mask = 0;
    for (std::size_t i = lo; i <= hi; ++i) mask |= TargetMask{1} << i;
    return mask;
  };
  const Digraph target = chain(k);
  HomSearch all(z_sub, target, HomKind::all);
  HomSearch strict(z_sub, target, HomKind::strict);
  bool strict_empty = false;
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t lo = floor[v];
    const std::size_t hi = std::min(ceiling[v], k);
    all.restrict_domain(v, lo <= hi ? range(lo, hi) : 0);
    if (lo + 1 < hi) {
      strict.restrict_domain(v, range(lo + 1, hi - 1));
    } else {
      strict_empty = true;
    }
  }
  return {all.count(), strict_empty ? BigInt(0) : strict.count()};
}

Rational phi_from(const Digraph& g, const std::vector<CapsuleData>& capsules) {
  Rational product = 1;
  for (const CapsuleData& c : capsules) {
    VertexSet z(g.order());
    for (Vertex v : c.component) z.set(v);
    const BoundedCounts counts = bounded_chain_counts(induced(g, z), c.floor, c.ceiling, c.span);
    if (counts.homs == 0) throw std::logic_error("capsule admits no bounded homomorphism");
    product *= Rational(counts.strict, counts.homs);
  }
  return product;
}

Rational phi(const Digraph& g) {
  const PathStructure ps = analyze_paths(g);
  const auto capsules = find_all_shells(g, ps);
  if (!capsules) throw Error("digraph is not shell-encapsulated");
  return phi_from(g, *capsules);
}

}  // namespace homlab
