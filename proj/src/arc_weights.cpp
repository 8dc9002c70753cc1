#include "homlab/arc_weights.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace homlab {

ArcWeight::ArcWeight(Digraph host)
    : host_(std::move(host)), domain_(host_.proper_arcs()), values_(domain_.size(), 0) {}

std::size_t ArcWeight::index_of(Vertex v, Vertex w) const {
  const auto it = std::lower_bound(domain_.begin(), domain_.end(), Arc{v, w});
  if (it == domain_.end() || *it != Arc{v, w}) {
    throw Error("arc weight queried outside A(G*)");
  }
  return static_cast<std::size_t>(it - domain_.begin());
}

unsigned ArcWeight::operator()(Vertex v, Vertex w) const { return values_[index_of(v, w)]; }

void ArcWeight::set(Vertex v, Vertex w, unsigned value) { values_[index_of(v, w)] = value; }

std::vector<Arc> ArcWeight::support() const {
  std::vector<Arc> out;
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    if (values_[i] > 0) out.push_back(domain_[i]);
  }
  return out;
}

bool ArcWeight::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](unsigned x) { return x == 0; });
}

unsigned ArcWeight::total() const {
  return std::accumulate(values_.begin(), values_.end(), 0u);
}

Expansion expand(const Digraph& g, const ArcWeight& alpha, unsigned nu, bool poset_variant) {
  if (!(alpha.host() == g)) throw Error("arc weight is hosted on a different digraph");
  const bool poset = g.is_reflexive() && g.is_transitive() && g.is_antisymmetric();
  if (poset_variant && !poset) throw Error("poset expansion of a non-poset");

  Expansion ex;
  ex.nu = nu;
  ex.base_order = g.order();
  ex.poset_variant = poset_variant;
  std::vector<Arc> arcs = g.arcs();
  Vertex next = static_cast<Vertex>(g.order());
  for (const Arc& a : alpha.support()) {
    std::vector<Vertex> clamp;
    for (unsigned i = 0; i < nu * alpha(a.first, a.second); ++i) {
      clamp.push_back(next);
      arcs.emplace_back(a.first, next);
      arcs.emplace_back(next, a.second);
      if (poset_variant) arcs.emplace_back(next, next);
      ++next;
    }
    ex.clamps.emplace_back(a, std::move(clamp));
  }
  ex.result = Digraph(next, arcs);
  if (poset_variant) {
    ex.result = transitive_hull(ex.result);
    if (!ex.result.is_antisymmetric()) {
      throw std::logic_error("poset expansion is not antisymmetric");
    }
  } else if (is_loopless_acyclic(g) && !is_loopless_acyclic(ex.result)) {
    throw std::logic_error("expansion of an acyclic digraph has a cycle");
  }
  return ex;
}

BigInt count_homs(const Expansion& ex, const Digraph& h) {
  HomSearch search(ex.result, h, HomKind::all);
  std::vector<Vertex> base(ex.base_order);
  std::iota(base.begin(), base.end(), Vertex{0});
  search.prioritize(base);
  return search.count();
}

namespace {

void require_reflexive(const Digraph& h) {
  if (!h.is_reflexive()) throw Error("target digraph must be reflexive");
}

}  // namespace

BigInt pi_alpha(const Digraph& h, const VertexMap& xi, const ArcWeight& alpha) {
  require_reflexive(h);
  BigInt product = 1;
  for (const Arc& a : alpha.support()) {
    product *= power(BigInt(iota(h, xi(a.first), xi(a.second))), alpha(a.first, a.second));
  }
  return product;
}

ExtensionReport check_extension_formula(const Digraph& g, const ArcWeight& alpha,
                                        const Digraph& h, unsigned nu,
                                        bool poset_variant) {
  require_reflexive(h);
  if (poset_variant && !h.is_transitive()) {
    throw Error("poset expansion formula needs a transitive target");
  }
  const Expansion ex = expand(g, alpha, nu, poset_variant);
  ExtensionReport report;
  for (const VertexMap& xi : enumerate_homs(g, h)) {
    const BigInt expected = power(pi_alpha(h, xi, alpha), nu);
    const BigInt counted = count_extensions(g, ex.result, h, xi);
    ++report.classes;
    report.total_expected += expected;
    if (expected != counted) report.mismatches.push_back({xi, expected, counted});
  }
  report.total_counted = count_homs(ex, h);
  return report;
}

ArcWeight combine_weights(const Digraph& g,
                          const std::vector<std::pair<SubDigraph, ArcWeight>>& family) {
  ArcWeight beta(g);
  for (const auto& [sub, weight] : family) {
    if (!sub.is_subgraph_of(g)) throw Error("family member is not a subgraph");
    if (!(weight.host() == sub.local())) throw Error("weight is not hosted on its subgraph");
    for (const Arc& a : weight.support()) {
      const Vertex v = sub.vertices[a.first];
      const Vertex w = sub.vertices[a.second];
      beta.set(v, w, beta(v, w) + weight(a.first, a.second));
    }
  }
  return beta;
}

ArcWeight selecting_weight(const Digraph& g, const Digraph& h, const VertexMap& zeta,
                           const std::vector<SubDigraph>& family) {
  require_reflexive(h);
  if (!is_homomorphism(g, h, zeta)) throw Error("ζ is not a homomorphism");
  for (const SubDigraph& sub : family) {
    if (!sub.is_subgraph_of(g)) throw Error("family member is not a subgraph");
    const Digraph local = sub.local();
    if (mu(local, h, restrict_to(zeta, sub)) != mu_hat(local, h).value) {
      throw Error("ζ is not μ-maximal on every family member");
    }
  }
  ArcWeight gamma(g);
  for (const SubDigraph& sub : family) {
    for (const Arc& a : sub.proper_arcs()) {
      gamma.set(a.first, a.second,
                gamma(a.first, a.second) +
                    static_cast<unsigned>(iota(h, zeta(a.first), zeta(a.second))));
    }
  }
  return gamma;
}

SelectingResult is_selecting(const Digraph& h, const ArcWeight& alpha,
                             const VertexMap& zeta, const std::vector<VertexMap>& homs) {
  const std::vector<Arc> support = alpha.support();
  const BigInt best = pi_alpha(h, zeta, alpha);
  const IotaProfile key = iota_profile(h, zeta, support);
  for (const VertexMap& xi : homs) {
    const BigInt value = pi_alpha(h, xi, alpha);
    const bool same = iota_profile(h, xi, support) == key;
    if (value > best || (value == best) != same) return {false, xi};
  }
  return {};
}

SelectingResult is_selecting(const Digraph& g, const Digraph& h,
                             const ArcWeight& alpha, const VertexMap& zeta) {
  return is_selecting(h, alpha, zeta, enumerate_homs(g, h));
}

bool gibbs_check(const std::vector<BigInt>& x, const std::vector<BigInt>& y) {
  if (x.size() != y.size()) throw Error("gibbs_check: length mismatch");
  BigInt sx = 0;
  BigInt sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] <= 0 || y[i] <= 0) throw Error("gibbs_check: entries must be positive");
    sx += x[i];
    sy += y[i];
  }
  if (sx > sy) throw Error("gibbs_check: Σx exceeds Σy");
  BigInt lhs = 1;
  BigInt rhs = 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const unsigned e = y[i].convert_to<unsigned>();
    lhs *= power(x[i], e);
    rhs *= power(y[i], e);
  }
  return x == y ? lhs == rhs : lhs < rhs;
}

ExpoSum hom_count_expo(const Digraph& h, const ArcWeight& alpha,
                       const std::vector<VertexMap>& homs) {
  ExpoSum sum;
  for (const VertexMap& xi : homs) sum.add(1, pi_alpha(h, xi, alpha));
  return sum;
}

ExpoSum hom_count_expo(const Digraph& g, const ArcWeight& alpha, const Digraph& h) {
  return hom_count_expo(h, alpha, enumerate_homs(g, h));
}

}  // namespace homlab
