#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "homlab/hom_engine.hpp"
#include "homlab/paths.hpp"
#include "homlab/shells.hpp"
#include "homlab/taxonomy.hpp"
#include "homlab/verifier.hpp"
#include "verifier_support.hpp"

namespace homlab {

using namespace detail;

namespace {

std::size_t height_of(const Digraph& g) { return analyze_paths(g).height; }

/// Proper arcs of every family member go to distinct images.
bool strict_on_family(const std::vector<SubDigraph>& family, const VertexMap& xi) {
  for (const SubDigraph& l : family) {
    for (const Arc& a : l.proper_arcs()) {
      if (xi(a.first) == xi(a.second)) return false;
    }
  }
  return true;
}

std::optional<VertexMap> first_strict(const Digraph& g, const Digraph& h,
                                      const std::vector<VertexMap>& maps) {
  for (const VertexMap& m : maps) {
    if (is_strict(g, h, m)) return m;
  }
  return std::nullopt;
}

struct GapStats {
  std::size_t gaps = 0;
  unsigned max_nu = 0;
  std::size_t max_order = 0;

  void merge(const GapStats& o) {
    gaps += o.gaps;
    max_nu = std::max(max_nu, o.max_nu);
    max_order = std::max(max_order, o.max_order);
  }
  std::string to_string(const std::string& label) const {
    return label + ": " + std::to_string(gaps) + " strict-count gaps, each with a witness; largest nu " +
           std::to_string(max_nu) + ", largest witness " + std::to_string(max_order) + " vertices";
  }
};

/// Turns #S(G,R) > #S(G,S) into a hom-count gap through a strict μ-maximal
/// ξ ∈ ℳ^ℒ(G,R). Failures become violation blocks.
void witness_gap(InstanceResult& out, GapStats& stats, const std::string& label,
                 const Digraph& g, const Digraph& r, const Digraph& s,
                 const std::vector<SubDigraph>& family, bool poset_variant) {
  ++stats.gaps;
  std::string problem;
  GapWitness w;
  const auto xi = first_strict(g, r, m_class(g, r, family));
  if (!xi) {
    problem = "no strict map is mu-maximal on every family member";
  } else {
    w = confirm_gap(g, r, s, *xi, family, poset_variant);
    if (!w.found) problem = w.failure;
  }
  if (problem.empty()) {
    stats.max_nu = std::max(stats.max_nu, w.nu);
    stats.max_order = std::max(stats.max_order, w.order);
    return;
  }
  std::ostringstream os;
  os << "  " << label << (poset_variant ? " (poset expansion)" : "") << ": " << problem << '\n';
  if (xi) os << "  xi " << to_string(*xi) << '\n';
  os << block("G", g) << block("R", r) << block("S", s);
  out.violations.push_back(os.str());
}

/// Strict counts #S(sources[i], targets[j]).
std::vector<std::vector<BigInt>> strict_matrix(const std::vector<Digraph>& sources,
                                               const std::vector<Digraph>& targets,
                                               unsigned jobs) {
  std::vector<std::vector<BigInt>> m(sources.size(), std::vector<BigInt>(targets.size()));
  parallel_for(sources.size(), jobs, [&](std::size_t i) {
    for (std::size_t j = 0; j < targets.size(); ++j) {
      m[i][j] = count_homs(sources[i], targets[j], HomKind::strict);
    }
  });
  return m;
}

template <class T>
std::vector<T> sorted(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// Targets whose loopless part is their own cover digraph

CheckReport check_cover_gaps(const CheckOptions& opt) {
  Stopwatch clock;
  CheckReport report;
  report.id = "thm5";
  const std::size_t max_n = opt.max_n ? opt.max_n : 4;
  report.universe = "R, S reflexive T_a with loopless part equal to the cover digraph, <= " +
                    std::to_string(max_n) + " vertices; G in T_a <= " + std::to_string(max_n) +
                    " vertices";
  const auto targets = filtered({CatalogKind::Ta}, max_n, opt.jobs, [](const Digraph& t) {
    return t.is_reflexive() && strip_loops(t) == cover_digraph(t);
  });
  const auto& sources = catalog_members({CatalogKind::Ta}, max_n, opt.jobs);
  const auto strict = strict_matrix(sources, targets, opt.jobs);

  // Class membership and the μ-maximal sets, per pair (G, R).
  std::vector<char> target_in_r(targets.size());
  parallel_for(targets.size(), opt.jobs, [&](std::size_t j) {
    target_in_r[j] = in_R(targets[j], RMethod::direct).member;
  });
  const std::size_t t = targets.size();
  run_instances(report, sources.size() * t, opt.jobs, [&](std::size_t idx) {
    InstanceResult out;
    const std::size_t i = idx / t, j = idx % t;
    const Digraph& g = sources[i];
    const Digraph& r = targets[j];
    if (i == 0 && !target_in_r[j]) {
      out.violations.push_back("  target outside R\n" + block("R", r));
    }
    if (strict[i][j] == 0) return out;
    ++out.instances;
    std::vector<std::string> problems;
    const auto homs = enumerate_homs(g, r);
    auto strict_homs = enumerate_homs(g, r, HomKind::strict);
    if (sorted(mu_hat(g, r).maximizers) != strict_homs) problems.push_back("M(G,R) != S(G,R)");
    const auto arcs = g.proper_arcs();
    for (const VertexMap& xi : strict_homs) {
      const IotaProfile p = iota_profile(r, xi, arcs);
      if (std::any_of(p.values.begin(), p.values.end(), [](std::size_t x) { return x != 2; })) {
        problems.push_back("strict map with an interval size other than 2: " + to_string(xi));
        break;
      }
    }
    if (sorted(m_class(g, r, {SubDigraph::whole(g)})) != strict_homs) {
      problems.push_back("M^{G}(G,R) != S(G,R)");
    }
    const auto family = top_path_family(g);
    std::vector<VertexMap> path_strict;
    for (const VertexMap& xi : homs) {
      if (strict_on_family(family, xi)) path_strict.push_back(xi);
    }
    if (sorted(m_class(g, r, family)) != path_strict) {
      problems.push_back("M^L(G,R) differs from the maps strict on every top path");
    }
    if (!problems.empty()) {
      std::ostringstream os;
      for (const auto& p : problems) os << "  " << p << '\n';
      os << block("G", g) << block("R", r);
      out.violations.push_back(os.str());
    }
    return out;
  });
  const std::size_t lemma_instances = report.instances;

  std::vector<GapStats> stats(sources.size());
  run_instances(report, sources.size(), opt.jobs, [&](std::size_t i) {
    InstanceResult out;
    const Digraph& g = sources[i];
    const std::vector<SubDigraph> whole{SubDigraph::whole(g)};
    for (std::size_t a = 0; a < t; ++a) {
      for (std::size_t b = 0; b < t; ++b) {
        if (a == b || strict[i][b] == 0) continue;
        ++out.instances;
        if (strict[i][a] > strict[i][b]) {
          witness_gap(out, stats[i], "strict-count gap", g, targets[a], targets[b], whole, false);
        }
      }
    }
    return out;
  });
  GapStats total;
  for (const auto& s : stats) total.merge(s);
  report.notes.push_back(std::to_string(t) + " targets, " + std::to_string(sources.size()) +
                         " sources, " + std::to_string(lemma_instances) +
                         " (G,R) pairs with a strict map");
  report.notes.push_back(total.to_string("triples"));
  report.seconds = clock.seconds();
  return report;
}

// ---------------------------------------------------------------------------
// Targets in R of equal height; flat posets

namespace {

/// Part (a) for one source G ∈ 𝔗ₐʰ(n) against all R, S of height n.
void same_height_source(InstanceResult& out, GapStats& stats, GapStats& poset_stats,
                       const Digraph& g, const std::vector<Digraph>& targets,
                       const std::vector<std::size_t>& same_height,
                       const std::vector<Digraph>& equivalence_targets) {
  const auto family = top_path_family(g);
  const auto arcs = family_arcs(family);
  std::map<std::size_t, BigInt> strict;

  for (std::size_t j : same_height) {
    const Digraph& t = targets[j];
    const auto homs = enumerate_homs(g, t);
    std::vector<VertexMap> strict_homs;
    std::map<IotaProfile, std::size_t> classes;
    for (const VertexMap& xi : homs) {
      ++classes[iota_profile(t, xi, arcs)];
      if (is_strict(g, t, xi)) strict_homs.push_back(xi);
    }
    strict[j] = strict_homs.size();
    if (strict_homs.empty()) continue;
    ++out.instances;
    // Every strict ρ has 𝒥(ρ) = 𝒮(G,T): one shared profile whose class has no other members.
    std::set<IotaProfile> profiles;
    for (const VertexMap& xi : strict_homs) profiles.insert(iota_profile(t, xi, arcs));
    if (profiles.size() != 1 || classes[*profiles.begin()] != strict_homs.size()) {
      out.violations.push_back("  S(G,T) is not the J-class of its members\n" + block("G", g) +
                               block("T", t));
    }
  }

  for (const Digraph& t : equivalence_targets) {
    ++out.instances;
    HomSearch search(g, t, HomKind::all);
    std::optional<VertexMap> bad;
    search.for_each([&](const VertexMap& xi) {
      if (strict_on_family(family, xi) != is_strict(g, t, xi)) {
        bad = xi;
        return false;
      }
      return true;
    });
    if (bad) {
      out.violations.push_back("  strict on top paths but not strict: " + to_string(*bad) + "\n" +
                               block("G", g) + block("H", t));
    }
  }

  const bool poset_g = is_poset(g);
  for (std::size_t a : same_height) {
    for (std::size_t b : same_height) {
      if (a == b || strict[b] == 0) continue;
      ++out.instances;
      if (strict[a] <= strict[b]) continue;
      witness_gap(out, stats, "strict-count gap", g, targets[a], targets[b], family, false);
      if (poset_g && is_poset(targets[a]) && is_poset(targets[b])) {
        witness_gap(out, poset_stats, "strict-count gap", g, targets[a], targets[b], family, true);
      }
    }
  }
}

}  // namespace

CheckReport check_height_gaps(const CheckOptions& opt) {
  Stopwatch clock;
  CheckReport report;
  report.id = "thm6";
  const std::size_t max_n = opt.max_n ? opt.max_n : 4;
  const std::string bound = std::to_string(max_n);
  report.universe = "(a) R, S in R of equal height n >= 1, G in T_a^h(n), all <= " + bound +
                    " vertices; (b) flat posets R, S <= " + bound + " vertices, G in T_a <= " +
                    bound + " vertices";

  const auto reflexive_ta = filtered({CatalogKind::Ta}, max_n, opt.jobs,
                                     [](const Digraph& t) { return t.is_reflexive(); });
  std::vector<std::size_t> heights(reflexive_ta.size());
  std::vector<char> member(reflexive_ta.size());
  parallel_for(reflexive_ta.size(), opt.jobs, [&](std::size_t j) {
    heights[j] = height_of(reflexive_ta[j]);
    member[j] = in_R(reflexive_ta[j], RMethod::direct).member;
  });
  const auto& ta = catalog_members({CatalogKind::Ta}, max_n, opt.jobs);

  // (a)
  std::vector<Digraph> sources_a;
  for (const Digraph& g : ta) {
    const std::size_t h = height_of(g);
    if (h >= 1 && in_Taghn(g, h)) sources_a.push_back(g);
  }
  std::vector<GapStats> stats(sources_a.size()), poset_stats(sources_a.size());
  run_instances(report, sources_a.size(), opt.jobs, [&](std::size_t i) {
    InstanceResult out;
    const Digraph& g = sources_a[i];
    const std::size_t n = height_of(g);
    std::vector<std::size_t> same_height;
    std::vector<Digraph> equivalence_targets;
    for (std::size_t j = 0; j < reflexive_ta.size(); ++j) {
      if (heights[j] == n && member[j]) same_height.push_back(j);
      if (heights[j] == n || heights[j] == n + 1) equivalence_targets.push_back(reflexive_ta[j]);
    }
    same_height_source(out, stats[i], poset_stats[i], g, reflexive_ta, same_height,
                      equivalence_targets);
    return out;
  });
  GapStats total_a, total_a_poset;
  for (std::size_t i = 0; i < stats.size(); ++i) {
    total_a.merge(stats[i]);
    total_a_poset.merge(poset_stats[i]);
  }

  // (b)
  const auto& flat = catalog_members({CatalogKind::flat_posets}, max_n, opt.jobs);
  const auto strict = strict_matrix(ta, flat, opt.jobs);
  std::vector<GapStats> b_stats(ta.size()), b_poset(ta.size());
  std::vector<std::array<std::size_t, 3>> routes(ta.size(), {0, 0, 0});  // h=0, E, reduced
  run_instances(report, ta.size(), opt.jobs, [&](std::size_t i) {
    InstanceResult out;
    const Digraph& g = ta[i];
    const PathStructure ps = analyze_paths(g);
    const bool poset_g = is_poset(g);
    for (std::size_t a = 0; a < flat.size(); ++a) {
      for (std::size_t b = 0; b < flat.size(); ++b) {
        const Digraph& r = flat[a];
        const Digraph& s = flat[b];
        if (a == b || height_of(r) != height_of(s)) continue;
        ++out.instances;
        if (strict[i][a] <= strict[i][b]) continue;
        std::ostringstream os;
        if (ps.height > height_of(r)) {
          os << "  strict maps into a lower target\n";
        } else if (ps.height == 0) {
          ++routes[i][0];
          const BigInt hr = count_homs(g, r), hs = count_homs(g, s);
          if (hr != strict[i][a] || hs != strict[i][b] || hr <= hs) {
            os << "  height 0 source: hom counts " << hr << " vs " << hs << '\n';
          }
        } else if (s.order() < r.order()) {
          ++routes[i][1];
          const Digraph e = singleton_with_loop();
          if (count_homs(e, s) >= count_homs(e, r)) os << "  singleton does not separate\n";
        } else {
          ++routes[i][2];
          const auto [top, ids] = top_subgraph(g, ps);
          const std::size_t isolated = g.order() - top.order();
          const BigInt sr = count_homs(top, r, HomKind::strict);
          const BigInt ss = count_homs(top, s, HomKind::strict);
          if (sr * power(BigInt(r.order()), isolated) != strict[i][a] ||
              ss * power(BigInt(s.order()), isolated) != strict[i][b]) {
            os << "  isolated-point scaling fails\n";
          } else if (sr <= ss || ss == 0) {
            os << "  reduced source has no usable gap\n";
          } else if (!in_Taghn(top, 1) || !in_R(r, RMethod::direct).member ||
                     !in_R(s, RMethod::direct).member) {
            os << "  reduction leaves the hypotheses of part (a)\n";
          } else {
            const auto family = top_path_family(top);
            witness_gap(out, b_stats[i], "reduced gap", top, r, s, family, false);
            if (poset_g) witness_gap(out, b_poset[i], "reduced gap", top, r, s, family, true);
          }
        }
        if (!os.str().empty()) {
          os << block("G", g) << block("R", r) << block("S", s);
          out.violations.push_back(os.str());
        }
      }
    }
    return out;
  });
  GapStats total_b, total_b_poset;
  std::array<std::size_t, 3> route_total{0, 0, 0};
  for (std::size_t i = 0; i < ta.size(); ++i) {
    total_b.merge(b_stats[i]);
    total_b_poset.merge(b_poset[i]);
    for (int k = 0; k < 3; ++k) route_total[k] += routes[i][k];
  }
  report.notes.push_back(std::to_string(sources_a.size()) + " sources for (a)");
  report.notes.push_back(total_a.to_string("(a)"));
  report.notes.push_back(total_a_poset.to_string("(a) posets"));
  report.notes.push_back("(b) gaps: " + std::to_string(route_total[0]) + " height 0, " +
                         std::to_string(route_total[1]) + " by vertex count, " +
                         std::to_string(route_total[2]) + " reduced");
  report.notes.push_back(total_b.to_string("(b) reduced"));
  report.notes.push_back(total_b_poset.to_string("(b) reduced posets"));
  report.seconds = clock.seconds();
  return report;
}

// ---------------------------------------------------------------------------
// Shell-encapsulated sources: the φ identity and the gaps

namespace {

struct SkeletonCounts {
  BigInt strict = 0;
  /// Sizes of the 𝒥-classes of strict maps.
  std::set<BigInt> class_sizes;
};

SkeletonCounts skeleton_counts(const Digraph& g, const Digraph& h) {
  const auto family = top_path_family(g);
  const auto arcs = family_arcs(family);
  std::map<std::vector<std::size_t>, BigInt> classes;
  std::set<std::vector<std::size_t>> strict_profiles;
  SkeletonCounts out;
  HomSearch(g, h, HomKind::all).for_each([&](const VertexMap& xi) {
    auto values = iota_profile(h, xi, arcs).values;
    if (is_strict(g, h, xi)) {
      ++out.strict;
      strict_profiles.insert(values);
    }
    ++classes[std::move(values)];
    return true;
  });
  for (const auto& p : strict_profiles) out.class_sizes.insert(classes[p]);
  return out;
}

/// Single-capsule ratios for every shell choice and every admissible pair of
/// bounds of component z.
std::set<Rational> capsule_ratios(const Digraph& g, const PathStructure& ps, const VertexSet& z) {
  std::set<Rational> out;
  for (ShellChoice choice : {ShellChoice::frontier, ShellChoice::reachable}) {
    auto [bottom, upper] = component_shells(g, ps, z, choice);
    for (const auto& bounds : admissible_bounds(g, ps, z, bottom, upper)) {
      out.insert(phi_from(g, {make_capsule(ps, z, bottom, upper, bounds)}));
    }
  }
  return out;
}

/// a < b < c < d with a < z < d, as a poset.
Digraph hand_instance() {
  return transitive_hull(add_loops(Digraph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 3}})));
}

}  // namespace

CheckReport check_phi_scaling(const CheckOptions& opt) {
  Stopwatch clock;
  CheckReport report;
  report.id = "thm7";
  const std::size_t max_n = opt.max_n ? opt.max_n : 6;
  const std::size_t max_height = 3;
  report.universe = "G shell-encapsulated of height n <= " + std::to_string(max_height) + ", <= " +
                    std::to_string(max_n) + " vertices; H interval-path posets of height n, <= " +
                    std::to_string(max_n) + " vertices";

  {
    ++report.instances;
    const Digraph g = hand_instance();
    const Digraph h = chain(3);
    const TaghnAResult a = in_TaghnA(g, 3);
    const SkeletonCounts c = skeleton_counts(g, h);
    if (!a.member || phi(g) != Rational(1, 2) || c.strict != 2 || c.class_sizes != std::set<BigInt>{4}) {
      report.violations.push_back("  hand instance: expected phi 1/2, 2 strict maps, class size 4\n" +
                                  block("G", g));
    }
  }

  std::size_t sources = 0, skeletons = 0, pairs = 0;
  std::map<Rational, std::size_t> phi_values;
  for (std::size_t n = 0; n <= max_height; ++n) {
    const auto& gs = catalog_members({CatalogKind::TaghnA, n}, max_n, opt.jobs);
    const auto& hs = catalog_members({CatalogKind::Chn, n}, max_n, opt.jobs);
    if (gs.empty() || hs.empty()) continue;

    std::unordered_map<std::size_t, std::size_t> slot;  // source index -> skeleton index
    std::map<CanonicalCode, std::size_t> by_key;
    std::vector<Digraph> reps;
    std::vector<std::size_t> skeleton_of(gs.size());
    for (std::size_t i = 0; i < gs.size(); ++i) {
      const auto [it, fresh] = by_key.emplace(skeleton_key(gs[i]), reps.size());
      if (fresh) reps.push_back(strip_loops(gs[i]));
      skeleton_of[i] = it->second;
    }
    std::vector<std::vector<SkeletonCounts>> counts(reps.size(),
                                                    std::vector<SkeletonCounts>(hs.size()));
    parallel_for(reps.size() * hs.size(), opt.jobs, [&](std::size_t idx) {
      const std::size_t k = idx / hs.size(), j = idx % hs.size();
      counts[k][j] = skeleton_counts(reps[k], hs[j]);
    });
    sources += gs.size();
    skeletons += reps.size();
    pairs += gs.size() * hs.size();

    std::vector<Rational> phis(gs.size());
    run_instances(report, gs.size(), opt.jobs, [&](std::size_t i) {
      InstanceResult out;
      const Digraph& g = gs[i];
      const PathStructure ps = analyze_paths(g);
      const TaghnAResult a = in_TaghnA(g, n);
      std::ostringstream os;
      if (!a.member) {
        os << "  catalog member is not shell-encapsulated\n";
      } else {
        const Rational f = phi_from(g, a.capsules);
        phis[i] = f;
        if (f <= 0 || f > 1) os << "  phi " << homlab::to_string(f) << " outside (0,1]\n";
        for (const VertexSet& z : z_components(g, ps)) {
          const auto ratios = capsule_ratios(g, ps, z);
          if (ratios.size() != 1) {
            os << "  capsule ratio depends on the shell choice:";
            for (const auto& q : ratios) os << ' ' << homlab::to_string(q);
            os << '\n';
          }
        }
        for (std::size_t j = 0; j < hs.size(); ++j) {
          ++out.instances;
          const SkeletonCounts& c = counts[skeleton_of[i]][j];
          if (c.strict == 0) {
            os << "  no strict map into H" << j << '\n';
            continue;
          }
          for (const BigInt& size : c.class_sizes) {
            if (Rational(c.strict) != f * Rational(size)) {
              os << "  H" << j << ": " << c.strict << " strict maps, class size " << size
                 << ", phi " << homlab::to_string(f) << '\n';
            }
          }
        }
      }
      if (!os.str().empty()) {
        os << block("G", g);
        for (const auto& cap : a.capsules) os << "  capsule " << cap.to_string() << '\n';
        out.violations.push_back(os.str());
      }
      return out;
    });
    for (const auto& f : phis) ++phi_values[f];
  }
  report.notes.push_back(std::to_string(sources) + " sources (" + std::to_string(skeletons) +
                         " loop-free skeletons), " + std::to_string(pairs) + " (G,H) pairs");
  std::ostringstream os;
  os << "phi values:";
  for (const auto& [f, k] : phi_values) os << ' ' << homlab::to_string(f) << " x" << k;
  report.notes.push_back(os.str());
  report.seconds = clock.seconds();
  return report;
}

CheckReport check_capsule_gaps(const CheckOptions& opt) {
  Stopwatch clock;
  CheckReport report;
  report.id = "thm8";
  const std::size_t max_n = opt.max_n ? opt.max_n : 4;
  report.universe = "G shell-encapsulated of height n, R, S interval-path posets of height n, "
                    "all <= " + std::to_string(max_n) + " vertices";
  GapStats total, total_poset;
  for (std::size_t n = 0; n + 1 <= max_n; ++n) {
    const auto& gs = catalog_members({CatalogKind::TaghnA, n}, max_n, opt.jobs);
    const auto& hs = catalog_members({CatalogKind::Chn, n}, max_n, opt.jobs);
    if (gs.empty() || hs.size() < 2) continue;
    const auto strict = strict_matrix(gs, hs, opt.jobs);
    std::vector<GapStats> stats(gs.size()), poset_stats(gs.size());
    run_instances(report, gs.size(), opt.jobs, [&](std::size_t i) {
      InstanceResult out;
      const Digraph& g = gs[i];
      const auto family = top_path_family(g);
      const bool poset_g = is_poset(g);
      for (std::size_t a = 0; a < hs.size(); ++a) {
        for (std::size_t b = 0; b < hs.size(); ++b) {
          if (a == b) continue;
          ++out.instances;
          if (strict[i][b] == 0) {
            out.violations.push_back("  no strict map into a target\n" + block("G", g) +
                                     block("S", hs[b]));
            continue;
          }
          if (strict[i][a] <= strict[i][b]) continue;
          witness_gap(out, stats[i], "strict-count gap", g, hs[a], hs[b], family, false);
          if (poset_g) witness_gap(out, poset_stats[i], "strict-count gap", g, hs[a], hs[b], family, true);
        }
      }
      return out;
    });
    for (std::size_t i = 0; i < gs.size(); ++i) {
      total.merge(stats[i]);
      total_poset.merge(poset_stats[i]);
    }
  }
  report.notes.push_back(total.to_string("T_a sources"));
  report.notes.push_back(total_poset.to_string("poset sources"));
  report.seconds = clock.seconds();
  return report;
}

// ---------------------------------------------------------------------------
// Strictness along top paths characterizes T_a^h(n)

namespace {

/// κ^in and κ^out into C_n.
std::pair<VertexMap, VertexMap> kappa_maps(const Digraph& g, const PathStructure& ps) {
  const std::size_t n = ps.height;
  const Digraph reach = transitive_hull(add_loops(strip_loops(g)));
  VertexMap in{std::vector<Vertex>(g.order(), 0), n + 1};
  VertexMap out{std::vector<Vertex>(g.order(), static_cast<Vertex>(n)), n + 1};
  for (Vertex v = 0; v < g.order(); ++v) {
    for (const PathSeq& p : ps.top) {
      for (std::size_t i = 0; i <= n; ++i) {
        if (reach.has_arc(p[i], v)) in.image[v] = std::max<Vertex>(in.image[v], i);
        if (reach.has_arc(v, p[i])) out.image[v] = std::min<Vertex>(out.image[v], i);
      }
    }
  }
  return {in, out};
}

}  // namespace

CheckReport check_top_path_strictness(const CheckOptions& opt) {
  Stopwatch clock;
  CheckReport report;
  report.id = "prop2";
  const std::size_t max_n = opt.max_n ? opt.max_n : 5;
  report.universe = "G in T_a without isolated points, height >= 1, <= " + std::to_string(max_n) +
                    " vertices; H reflexive T_a of height h_G or h_G + 1, <= " +
                    std::to_string(max_n) + " vertices";
  const auto sources = filtered({CatalogKind::Ta}, max_n, opt.jobs, [](const Digraph& g) {
    return isolated_vertices(g).none() && height_of(g) >= 1;
  });
  const auto targets = filtered({CatalogKind::Ta}, max_n, opt.jobs,
                                [](const Digraph& t) { return t.is_reflexive(); });
  std::vector<std::size_t> target_height(targets.size());
  for (std::size_t j = 0; j < targets.size(); ++j) target_height[j] = height_of(targets[j]);

  std::map<CanonicalCode, std::size_t> by_key;
  std::vector<Digraph> reps;
  std::vector<std::size_t> weight;  // sources per skeleton
  for (const Digraph& g : sources) {
    const auto [it, fresh] = by_key.emplace(skeleton_key(g), reps.size());
    if (fresh) {
      reps.push_back(strip_loops(g));
      weight.push_back(0);
    }
    ++weight[it->second];
  }
  std::vector<char> outside(reps.size(), 0);
  run_instances(report, reps.size(), opt.jobs, [&](std::size_t k) {
    InstanceResult out;
    out.instances = weight[k];
    const Digraph& g = reps[k];
    const PathStructure ps = analyze_paths(g);
    const std::size_t h = ps.height;
    const auto family = top_path_family(g, ps);
    const bool member = in_Taghn(g, h);
    outside[k] = !member;
    bool equivalence = true;
    for (std::size_t j = 0; j < targets.size() && equivalence; ++j) {
      if (target_height[j] != h && target_height[j] != h + 1) continue;
      HomSearch(g, targets[j], HomKind::all).for_each([&](const VertexMap& xi) {
        if (strict_on_family(family, xi) != is_strict(g, targets[j], xi)) equivalence = false;
        return equivalence;
      });
    }
    std::ostringstream os;
    if (equivalence != member) {
      os << "  equivalence " << (equivalence ? "holds" : "fails") << " but membership is "
         << member << '\n';
    }
    const auto [kin, kout] = kappa_maps(g, ps);
    const Digraph c = chain(h);
    for (const auto* m : {&kin, &kout}) {
      if (!is_homomorphism(g, c, *m) || !strict_on_family(family, *m)) {
        os << "  kappa map " << to_string(*m) << " is not a homomorphism strict on top paths\n";
      }
    }
    for (Vertex v = 0; v < g.order(); ++v) {
      if (ps.position[v] >= 0 && (kin(v) != static_cast<Vertex>(ps.position[v]) ||
                                  kout(v) != static_cast<Vertex>(ps.position[v]))) {
        os << "  kappa differs from the position map at " << v << '\n';
      }
    }
    if (!member) {
      const Vertex v = static_cast<Vertex>(ps.off_top.find_first());
      VertexSet proper_in = g.in(v);
      proper_in.reset(v);
      const VertexMap& predicted = proper_in.any() ? kin : kout;
      if (is_strict(g, c, predicted)) {
        os << "  predicted kappa map " << to_string(predicted) << " is strict\n";
      }
    }
    if (!os.str().empty()) {
      os << block("G", g);
      out.violations.push_back(os.str());
    }
    return out;
  });
  std::size_t counterexamples = 0;
  for (std::size_t k = 0; k < reps.size(); ++k) counterexamples += outside[k] ? weight[k] : 0;
  report.notes.push_back(std::to_string(reps.size()) + " loop-free skeletons, " +
                         std::to_string(counterexamples) +
                         " sources outside T_a^h(h_G), each with a kappa counterexample");
  report.seconds = clock.seconds();
  return report;
}

}  // namespace homlab
