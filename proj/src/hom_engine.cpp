#include "homlab/hom_engine.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace homlab {

namespace {

template <typename F>
void for_each_bit(TargetMask mask, F&& f) {
  while (mask) {
    f(static_cast<Vertex>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
}

}  // namespace

HomSearch::HomSearch(const Digraph& source, const Digraph& target, HomKind kind)
    : source_order_(source.order()), target_order_(target.order()) {
  if (target_order_ > kMaxTargetOrder) {
    throw Error("hom engine supports targets with at most 64 vertices");
  }
  const std::size_t n = source_order_;
  const std::size_t m = target_order_;

  neighbors_.resize(n);
  std::vector<std::size_t> degree(n, 0);
  for (auto [u, v] : source.proper_arcs()) {
    neighbors_[u].push_back({v, true});
    neighbors_[v].push_back({u, false});
    ++degree[u];
    ++degree[v];
  }
  order_.resize(n);
  std::iota(order_.begin(), order_.end(), Vertex{0});
  std::stable_sort(order_.begin(), order_.end(),
                   [&](Vertex a, Vertex b) { return degree[a] > degree[b]; });
  rank_.resize(n);
  for (std::size_t i = 0; i < n; ++i) rank_[order_[i]] = i;

  rel_out_.assign(m, 0);
  rel_in_.assign(m, 0);
  TargetMask loops = 0;
  for (auto [c, d] : target.arcs()) {
    if (c == d) loops |= TargetMask{1} << c;
    if (kind == HomKind::strict && c == d) continue;
    rel_out_[c] |= TargetMask{1} << d;
    rel_in_[d] |= TargetMask{1} << c;
  }
  const TargetMask all = m == 64 ? ~TargetMask{0} : (TargetMask{1} << m) - 1;
  initial_.assign(n, all);
  for (Vertex v = 0; v < n; ++v) {
    if (source.has_loop(v)) initial_[v] &= loops;
  }
}

void HomSearch::restrict_domain(Vertex v, TargetMask allowed) {
  if (v >= source_order_) throw Error("restrict_domain: vertex out of range");
  initial_[v] &= allowed;
}

void HomSearch::prioritize(const std::vector<Vertex>& first) {
  std::vector<char> front(source_order_, 0);
  for (Vertex v : first) {
    if (v >= source_order_) throw Error("prioritize: vertex out of range");
    front[v] = 1;
  }
  std::stable_partition(order_.begin(), order_.end(), [&](Vertex v) { return front[v] != 0; });
  for (std::size_t i = 0; i < order_.size(); ++i) rank_[order_[i]] = i;
}

bool HomSearch::propagate(Domains& dom, Vertex v, Vertex image,
                          const std::vector<char>* scope) const {
  dom[v] = TargetMask{1} << image;
  for (const auto& nb : neighbors_[v]) {
    const bool open = scope ? (*scope)[nb.other] != 0 : rank_[nb.other] > rank_[v];
    if (!open) continue;
    dom[nb.other] &= nb.outgoing ? rel_out_[image] : rel_in_[image];
    if (dom[nb.other] == 0) return false;
  }
  return true;
}

bool HomSearch::entailed(const Domains& dom, Vertex from, Vertex to) const {
  bool ok = true;
  const TargetMask need = dom[to];
  for_each_bit(dom[from], [&](Vertex c) {
    if ((rel_out_[c] & need) != need) ok = false;
  });
  return ok;
}

std::vector<std::vector<Vertex>> HomSearch::split(const Domains& dom,
                                                  const std::vector<Vertex>& group) const {
  std::vector<std::size_t> slot(source_order_, SIZE_MAX);
  for (std::size_t i = 0; i < group.size(); ++i) slot[group[i]] = i;
  std::vector<std::size_t> parent(group.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < group.size(); ++i) {
    const Vertex v = group[i];
    for (const auto& nb : neighbors_[v]) {
      if (!nb.outgoing || slot[nb.other] == SIZE_MAX) continue;
      std::size_t a = find(i), b = find(slot[nb.other]);
      if (a == b) continue;
      if (!entailed(dom, v, nb.other)) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<Vertex>> parts;
  std::vector<std::size_t> part_of(group.size(), SIZE_MAX);
  for (std::size_t i = 0; i < group.size(); ++i) {
    std::size_t r = find(i);
    if (part_of[r] == SIZE_MAX) {
      part_of[r] = parts.size();
      parts.emplace_back();
    }
    parts[part_of[r]].push_back(group[i]);
  }
  return parts;
}

BigInt HomSearch::count_group(const Domains& dom, const std::vector<Vertex>& group) const {
  if (group.size() == 1) return BigInt(std::popcount(dom[group.front()]));
  const Vertex v = group.front();
  std::vector<char> scope(source_order_, 0);
  std::vector<Vertex> rest(group.begin() + 1, group.end());
  for (Vertex x : rest) scope[x] = 1;
  BigInt total = 0;
  for_each_bit(dom[v], [&](Vertex c) {
    Domains next = dom;
    if (!propagate(next, v, c, &scope)) return;
    BigInt product = 1;
    for (const auto& part : split(next, rest)) {
      product *= count_group(next, part);
      if (product == 0) break;
    }
    total += product;
  });
  return total;
}

BigInt HomSearch::count() const {
  for (TargetMask d : initial_) {
    if (d == 0) return 0;
  }
  BigInt product = 1;
  for (const auto& part : split(initial_, order_)) {
    product *= count_group(initial_, part);
    if (product == 0) break;
  }
  return product;
}

bool HomSearch::search(Domains& dom, std::size_t depth, std::vector<Vertex>& image,
                       const std::function<bool(const VertexMap&)>& visit) const {
  if (depth == source_order_) {
    return visit(VertexMap{image, target_order_});
  }
  const Vertex v = order_[depth];
  bool keep_going = true;
  TargetMask candidates = dom[v];
  while (candidates && keep_going) {
    const auto c = static_cast<Vertex>(std::countr_zero(candidates));
    candidates &= candidates - 1;
    Domains next = dom;
    if (!propagate(next, v, c, nullptr)) continue;
    image[v] = c;
    keep_going = search(next, depth + 1, image, visit);
  }
  return keep_going;
}

void HomSearch::for_each(const std::function<bool(const VertexMap&)>& visit) const {
  for (TargetMask d : initial_) {
    if (d == 0) return;
  }
  Domains dom = initial_;
  std::vector<Vertex> image(source_order_, 0);
  search(dom, 0, image, visit);
}

std::optional<VertexMap> HomSearch::first() const {
  std::optional<VertexMap> found;
  for_each([&](const VertexMap& m) {
    found = m;
    return false;
  });
  return found;
}

bool HomSearch::exists() const { return first().has_value(); }

std::vector<VertexMap> HomSearch::enumerate() const {
  std::vector<VertexMap> out;
  for_each([&](const VertexMap& m) {
    out.push_back(m);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

BigInt count_homs(const Digraph& g, const Digraph& h, HomKind kind) {
  return HomSearch(g, h, kind).count();
}

std::vector<VertexMap> enumerate_homs(const Digraph& g, const Digraph& h, HomKind kind) {
  return HomSearch(g, h, kind).enumerate();
}

bool has_hom(const Digraph& g, const Digraph& h, HomKind kind) {
  return HomSearch(g, h, kind).exists();
}

namespace {

HomSearch extension_search(const Digraph& g, const Digraph& g_big, const Digraph& h,
                           const VertexMap& xi) {
  if (g.order() > g_big.order()) throw Error("extensions: G is not a subgraph of G'");
  for (auto [u, v] : g.arcs()) {
    if (!g_big.has_arc(u, v)) throw Error("extensions: G is not a subgraph of G'");
  }
  if (xi.domain() != g.order()) throw Error("extensions: map domain mismatch");
  HomSearch search(g_big, h, HomKind::all);
  for (Vertex v = 0; v < g.order(); ++v) search.fix(v, xi(v));
  return search;
}

}  // namespace

std::vector<VertexMap> extensions(const Digraph& g, const Digraph& g_big,
                                  const Digraph& h, const VertexMap& xi) {
  return extension_search(g, g_big, h, xi).enumerate();
}

BigInt count_extensions(const Digraph& g, const Digraph& g_big, const Digraph& h,
                        const VertexMap& xi) {
  return extension_search(g, g_big, h, xi).count();
}

IotaProfile iota_profile(const Digraph& h, const VertexMap& xi,
                         const std::vector<Arc>& arcs) {
  IotaProfile p;
  p.arcs = arcs;
  p.values.reserve(arcs.size());
  for (auto [v, w] : arcs) p.values.push_back(iota(h, xi(v), xi(w)));
  return p;
}

std::size_t mu(const Digraph& g, const Digraph& h, const VertexMap& xi) {
  std::size_t total = 0;
  for (auto [v, w] : g.proper_arcs()) total += iota(h, xi(v), xi(w));
  return total;
}

std::vector<Arc> family_arcs(const std::vector<SubDigraph>& family) {
  std::vector<Arc> arcs;
  for (const auto& l : family) {
    auto p = l.proper_arcs();
    arcs.insert(arcs.end(), p.begin(), p.end());
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  return arcs;
}

MuHat mu_hat(const Digraph& l, const Digraph& h) {
  auto homs = enumerate_homs(l, h);
  if (homs.empty()) throw Error("mu_hat: H(L, H) is empty");
  MuHat result;
  std::vector<std::size_t> values;
  values.reserve(homs.size());
  for (const auto& xi : homs) values.push_back(mu(l, h, xi));
  result.value = *std::max_element(values.begin(), values.end());
  for (std::size_t i = 0; i < homs.size(); ++i) {
    if (values[i] == result.value) result.maximizers.push_back(homs[i]);
  }
  return result;
}

std::vector<VertexMap> m_class(const Digraph& g, const Digraph& h,
                               const std::vector<SubDigraph>& family) {
  std::vector<Digraph> locals;
  std::vector<std::size_t> best;
  for (const auto& l : family) {
    if (!l.is_subgraph_of(g)) throw Error("m_class: family member is not a subgraph");
    locals.push_back(l.local());
    auto homs = enumerate_homs(locals.back(), h);
    // An empty ℋ(L, H) leaves ℳ^ℒ(G, H) empty, but then so is ℋ(G, H).
    std::size_t top = 0;
    for (const auto& xi : homs) top = std::max(top, mu(locals.back(), h, xi));
    best.push_back(top);
  }
  std::vector<VertexMap> out;
  for (const auto& xi : enumerate_homs(g, h)) {
    bool keep = true;
    for (std::size_t i = 0; i < family.size() && keep; ++i) {
      keep = mu(locals[i], h, restrict_to(xi, family[i])) == best[i];
    }
    if (keep) out.push_back(xi);
  }
  return out;
}

std::vector<IotaProfile> i_class(const Digraph& g, const Digraph& h,
                                 const std::vector<SubDigraph>& family) {
  const auto arcs = family_arcs(family);
  std::vector<IotaProfile> out;
  for (const auto& xi : m_class(g, h, family)) out.push_back(iota_profile(h, xi, arcs));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<VertexMap> j_class_of(const Digraph& h, const VertexMap& xi,
                                  const Digraph& h_target,
                                  const std::vector<VertexMap>& target_homs,
                                  const std::vector<SubDigraph>& family) {
  const auto arcs = family_arcs(family);
  const auto reference = iota_profile(h, xi, arcs);
  std::vector<VertexMap> out;
  for (const auto& zeta : target_homs) {
    if (iota_profile(h_target, zeta, arcs) == reference) out.push_back(zeta);
  }
  return out;
}

std::vector<VertexMap> j_class(const Digraph& g, const Digraph& h, const VertexMap& xi,
                               const Digraph& h_target,
                               const std::vector<SubDigraph>& family) {
  for (const auto& l : family) {
    if (!l.is_subgraph_of(g)) throw Error("j_class: family member is not a subgraph");
  }
  return j_class_of(h, xi, h_target, enumerate_homs(g, h_target), family);
}

}  // namespace homlab
