#include "homlab/verifier.hpp"

#include <map>
#include <mutex>
#include <random>
#include <sstream>

#include "homlab/hom_engine.hpp"
#include "homlab/paths.hpp"
#include "homlab/taxonomy.hpp"
#include "verifier_support.hpp"

namespace homlab {

namespace detail {

const std::vector<Digraph>& catalog_members(CatalogSpec spec, std::size_t max_n,
                                            unsigned jobs) {
  static std::mutex mutex;
  static std::map<std::pair<std::string, std::size_t>, std::vector<Digraph>> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(spec.name(), max_n);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, generate(spec, max_n, jobs).members).first;
  }
  return it->second;
}

std::vector<Digraph> filtered(CatalogSpec spec, std::size_t max_n, unsigned jobs,
                              const std::function<bool(const Digraph&)>& pred) {
  std::vector<Digraph> out;
  for (const Digraph& g : catalog_members(spec, max_n, jobs)) {
    if (pred(g)) out.push_back(g);
  }
  return out;
}

namespace {

std::string indent(const std::string& text) {
  std::istringstream is(text);
  std::ostringstream os;
  for (std::string line; std::getline(is, line);) os << "    " << line << '\n';
  return os.str();
}

}  // namespace

std::string block(const std::string& label, const Digraph& g) {
  return "  " + label + ":\n" + indent(format_digraph(g));
}

std::string block(const std::string& label, const ArcWeight& w) {
  std::ostringstream os;
  write_weight(os, w);
  return "  " + label + ":\n" + indent(os.str());
}

void run_instances(CheckReport& report, std::size_t count, unsigned jobs,
                   const std::function<InstanceResult(std::size_t)>& task) {
  std::vector<InstanceResult> results(count);
  parallel_for(count, jobs, [&](std::size_t i) { results[i] = task(i); });
  for (auto& r : results) {
    report.instances += r.instances;
    for (auto& v : r.violations) report.violations.push_back(std::move(v));
    for (auto& n : r.notes) report.notes.push_back(std::move(n));
  }
}

CanonicalCode skeleton_key(const Digraph& g) {
  return (canonical_code(strip_loops(g)) << 4) | g.order();
}

}  // namespace detail

using namespace detail;

std::string CheckReport::to_text() const {
  std::ostringstream os;
  os << "check " << id << '\n';
  os << "universe: " << universe << '\n';
  for (std::size_t i = 0; i < violations.size(); ++i) {
    os << "violation " << i + 1 << ":\n" << violations[i];
    if (!violations[i].empty() && violations[i].back() != '\n') os << '\n';
  }
  for (const std::string& n : notes) os << "note: " << n << '\n';
  os << "violations=" << violations.size() << " instances=" << instances << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------

namespace {

NuWitness witness_from(const Digraph& g, const Digraph& r, const Digraph& s,
                       const VertexMap& xi, const std::vector<SubDigraph>& family,
                       const std::vector<VertexMap>& r_homs,
                       const std::vector<VertexMap>& s_homs) {
  NuWitness w{selecting_weight(g, r, xi, family), {}, {}, std::nullopt};
  w.r_counts = hom_count_expo(r, w.weight, r_homs);
  w.s_counts = hom_count_expo(s, w.weight, s_homs);
  w.nu = first_exceeding(w.r_counts, w.s_counts);
  return w;
}

}  // namespace

NuWitness witness_nu(const Digraph& g, const Digraph& r, const Digraph& s,
                     const VertexMap& xi, const std::vector<SubDigraph>& family) {
  if (!r.is_reflexive() || !s.is_reflexive()) throw Error("witness_nu needs reflexive targets");
  return witness_from(g, r, s, xi, family, enumerate_homs(g, r), enumerate_homs(g, s));
}

namespace {

/// Largest expansion that is still counted directly.
constexpr std::size_t kWitnessOrderCap = 4000;

}  // namespace

GapWitness confirm_gap(const Digraph& g, const Digraph& r, const Digraph& s,
                       const VertexMap& xi, const std::vector<SubDigraph>& family,
                       bool poset_variant) {
  GapWitness out;
  const NuWitness w = witness_nu(g, r, s, xi, family);
  if (!w.nu) {
    out.failure = "R-counts never exceed S-counts: R " + w.r_counts.to_string() + " vs S " +
                  w.s_counts.to_string();
    return out;
  }
  out.nu = *w.nu;
  const std::size_t order = g.order() + static_cast<std::size_t>(out.nu) * w.weight.total();
  if (order > kWitnessOrderCap) {
    out.failure = "witness expansion too large: " + std::to_string(order) + " vertices";
    return out;
  }
  const Expansion ex = expand(g, w.weight, out.nu, poset_variant);
  out.order = ex.result.order();
  out.r_count = count_homs(ex, r);
  out.s_count = count_homs(ex, s);
  if (out.r_count != w.r_counts.evaluate(out.nu) || out.s_count != w.s_counts.evaluate(out.nu)) {
    out.failure = "direct counts differ from the exponential forms at nu=" +
                  std::to_string(out.nu);
    return out;
  }
  out.found = out.r_count > out.s_count;
  if (!out.found) out.failure = "direct counts do not separate";
  return out;
}

// ---------------------------------------------------------------------------
// Engine oracle

namespace {

BigInt naive_count(const Digraph& g, const Digraph& h, HomKind kind,
                   std::vector<VertexMap>* list) {
  const std::size_t n = g.order();
  const std::size_t m = h.order();
  VertexMap map{std::vector<Vertex>(n, 0), m};
  BigInt total = 0;
  while (true) {
    const bool ok = kind == HomKind::strict ? is_strict(g, h, map) : is_homomorphism(g, h, map);
    if (ok) {
      ++total;
      if (list) list->push_back(map);
    }
    std::size_t i = n;
    while (i > 0 && map.image[i - 1] + 1 == m) map.image[--i] = 0;
    if (i == 0) break;
    ++map.image[i - 1];
  }
  return total;
}

Digraph random_digraph(std::mt19937_64& rng, std::size_t max_order) {
  std::uniform_int_distribution<std::size_t> order(1, max_order);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t n = order(rng);
  const double density = unit(rng);
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (unit(rng) < density) arcs.emplace_back(u, v);
    }
  }
  return Digraph(n, arcs);
}

}  // namespace

CheckReport check_engine(const CheckOptions& opt, std::size_t instances,
                         unsigned long long seed) {
  Stopwatch clock;
  CheckReport report;
  report.id = "engine";
  const std::size_t max_n = opt.max_n ? opt.max_n : 4;
  report.universe = std::to_string(instances) + " random (G,H), both with 1.." +
                    std::to_string(max_n) + " vertices, seed " + std::to_string(seed);
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Digraph, Digraph>> cases;
  for (std::size_t i = 0; i < instances; ++i) {
    Digraph g = random_digraph(rng, max_n);
    Digraph h = random_digraph(rng, max_n);
    cases.emplace_back(std::move(g), std::move(h));
  }
  run_instances(report, cases.size(), opt.jobs, [&](std::size_t i) {
    InstanceResult r;
    r.instances = 1;
    const auto& [g, h] = cases[i];
    for (HomKind kind : {HomKind::all, HomKind::strict}) {
      std::vector<VertexMap> expected;
      const BigInt naive = naive_count(g, h, kind, &expected);
      const BigInt counted = count_homs(g, h, kind);
      const auto listed = enumerate_homs(g, h, kind);
      if (naive != counted || listed != expected) {
        std::ostringstream os;
        os << "  instance " << i << (kind == HomKind::strict ? " strict" : " all")
           << ": naive " << naive << " counted " << counted << " listed " << listed.size()
           << '\n'
           << block("G", g) << block("H", h);
        r.violations.push_back(os.str());
      }
    }
    return r;
  });
  report.seconds = clock.seconds();
  return report;
}

// ---------------------------------------------------------------------------
// Extension formula

namespace {

/// All weights with values in {1, 2} on at most `max_support` arcs.
std::vector<ArcWeight> small_weights(const Digraph& g, std::size_t max_support) {
  const std::vector<Arc> arcs = g.proper_arcs();
  std::vector<ArcWeight> out{ArcWeight(g)};
  std::function<void(std::size_t, std::size_t, ArcWeight&)> grow =
      [&](std::size_t from, std::size_t used, ArcWeight& w) {
        if (used == max_support) return;
        for (std::size_t i = from; i < arcs.size(); ++i) {
          for (unsigned value : {1u, 2u}) {
            w.set(arcs[i].first, arcs[i].second, value);
            out.push_back(w);
            grow(i + 1, used + 1, w);
          }
          w.set(arcs[i].first, arcs[i].second, 0);
        }
      };
  ArcWeight w(g);
  grow(0, 0, w);
  return out;
}

}  // namespace

CheckReport check_extension(const CheckOptions& opt) {
  Stopwatch clock;
  CheckReport report;
  report.id = "eq4";
  const std::size_t max_n = opt.max_n ? opt.max_n : 4;
  report.universe = "G posets <= " + std::to_string(max_n) +
                    " vertices; H reflexive <= 3 vertices; weights 0/1/2 on <= 3 arcs; "
                    "nu in {0,1,2}; poset expansion for transitive H";
  const auto& sources = catalog_members({CatalogKind::posets}, max_n, opt.jobs);
  const auto& targets = catalog_members({CatalogKind::reflexive}, 3, opt.jobs);
  const std::size_t pairs = sources.size() * targets.size();
  run_instances(report, pairs, opt.jobs, [&](std::size_t idx) {
    InstanceResult r;
    const Digraph& g = sources[idx / targets.size()];
    const Digraph& h = targets[idx % targets.size()];
    for (const ArcWeight& alpha : small_weights(g, 3)) {
      for (unsigned nu = 0; nu <= 2; ++nu) {
        for (bool poset_variant : {false, true}) {
          if (poset_variant && !h.is_transitive()) continue;
          ++r.instances;
          const ExtensionReport e = check_extension_formula(g, alpha, h, nu, poset_variant);
          if (e.ok()) continue;
          std::ostringstream os;
          os << "  nu=" << nu << (poset_variant ? " poset expansion" : "")
             << " total expected " << e.total_expected << " counted " << e.total_counted
             << '\n';
          for (const auto& m : e.mismatches) {
            os << "  " << to_string(m.xi) << " expected " << m.expected << " counted "
               << m.counted << '\n';
          }
          os << block("G", g) << block("H", h) << block("alpha", alpha);
          r.violations.push_back(os.str());
        }
      }
    }
    return r;
  });
  report.seconds = clock.seconds();
  return report;
}

// ---------------------------------------------------------------------------
// Selecting weights

CheckReport check_selecting(const CheckOptions& opt) {
  Stopwatch clock;
  CheckReport report;
  report.id = "selecting";
  const std::size_t max_n = opt.max_n ? opt.max_n : 4;
  report.universe = "G posets <= " + std::to_string(max_n) +
                    " vertices; H reflexive <= 3 vertices; families {}, {G}, top paths";
  const auto& sources = catalog_members({CatalogKind::posets}, max_n, opt.jobs);
  const auto& targets = catalog_members({CatalogKind::reflexive}, 3, opt.jobs);
  const std::size_t pairs = sources.size() * targets.size();
  run_instances(report, pairs, opt.jobs, [&](std::size_t idx) {
    InstanceResult r;
    const Digraph& g = sources[idx / targets.size()];
    const Digraph& h = targets[idx % targets.size()];
    const auto homs = enumerate_homs(g, h);
    const std::vector<std::pair<std::string, std::vector<SubDigraph>>> families = {
        {"empty", {}}, {"whole", {SubDigraph::whole(g)}}, {"top paths", top_path_family(g)}};
    for (const auto& [name, family] : families) {
      for (const VertexMap& zeta : m_class(g, h, family)) {
        ++r.instances;
        std::vector<std::string> problems;
        const ArcWeight gamma = selecting_weight(g, h, zeta, family);
        const SelectingResult sel = is_selecting(h, gamma, zeta, homs);
        if (!sel.selecting) problems.push_back("not selecting, witness " + to_string(*sel.counterexample));

        const ExpoSum expo = hom_count_expo(h, gamma, homs);
        const auto [coeff, base] = expo.leading();
        const std::size_t j = j_class_of(h, zeta, h, homs, family).size();
        if (coeff != j || base != pi_alpha(h, zeta, gamma)) {
          problems.push_back("leading term (" + coeff.str() + "," + base.str() +
                             ") but class size " + std::to_string(j));
        }

        // Combination of the per-member weights given by the profile of ζ.
        std::vector<std::pair<SubDigraph, ArcWeight>> parts;
        for (const SubDigraph& sub : family) {
          const Digraph local = sub.local();
          const VertexMap part = restrict_to(zeta, sub);
          ArcWeight w(local);
          for (const Arc& a : local.proper_arcs()) {
            w.set(a.first, a.second,
                  static_cast<unsigned>(iota(h, part(a.first), part(a.second))));
          }
          const SelectingResult local_sel = is_selecting(local, h, w, part);
          if (!local_sel.selecting) {
            problems.push_back("profile weight not selecting on a family member, witness " +
                               to_string(*local_sel.counterexample));
          }
          parts.emplace_back(sub, std::move(w));
        }
        const ArcWeight beta = combine_weights(g, parts);
        if (!(beta == gamma)) problems.push_back("combined weight differs from gamma");

        if (problems.empty()) continue;
        std::ostringstream os;
        os << "  family " << name << ", zeta " << to_string(zeta) << '\n';
        for (const auto& p : problems) os << "  " << p << '\n';
        os << block("G", g) << block("H", h) << block("gamma", gamma);
        r.violations.push_back(os.str());
      }
    }
    return r;
  });
  report.seconds = clock.seconds();
  return report;
}

// ---------------------------------------------------------------------------
// Class R: both membership tests

CheckReport check_r_membership(const CheckOptions& opt) {
  Stopwatch clock;
  CheckReport report;
  report.id = "prop1";
  const std::size_t max_n = opt.max_n ? opt.max_n : 5;
  report.universe = "reflexive T_a digraphs <= " + std::to_string(max_n) + " vertices";
  const auto members = filtered({CatalogKind::Ta}, max_n, opt.jobs,
                                [](const Digraph& g) { return g.is_reflexive(); });
  std::vector<char> outside(members.size(), 0);
  run_instances(report, members.size(), opt.jobs, [&](std::size_t i) {
    InstanceResult r;
    r.instances = 1;
    const Digraph& g = members[i];
    const RResult sum = in_R(g, RMethod::sum_condition);
    const RResult direct = in_R(g, RMethod::direct);
    outside[i] = !direct.member;
    std::ostringstream os;
    if (sum.member != direct.member) {
      os << "  sum condition " << sum.member << ", direct " << direct.member << '\n';
    }
    const bool poset = is_poset(g);
    if (poset && is_flat(g) && !direct.member) os << "  flat poset outside R\n";
    if (poset && in_Chn(g, analyze_paths(g).height) && !direct.member) {
      os << "  interval-path poset outside R\n";
    }
    if (!os.str().empty()) {
      os << block("G", g);
      r.violations.push_back(os.str());
    }
    return r;
  });
  std::size_t count = 0;
  std::optional<std::size_t> smallest_poset;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (!outside[i]) continue;
    ++count;
    if (!smallest_poset && is_poset(members[i])) smallest_poset = i;
  }
  report.notes.push_back(std::to_string(count) + " members outside R");
  if (smallest_poset) {
    const Digraph& g = members[*smallest_poset];
    const RResult sum = in_R(g, RMethod::sum_condition);
    std::ostringstream os;
    os << "smallest poset outside R has " << g.order() << " vertices, violating path";
    for (Vertex v : sum.violating_path->vertices) os << ' ' << v;
    os << "; arcs";
    for (const Arc& a : g.proper_arcs()) os << ' ' << a.first << a.second;
    report.notes.push_back(os.str());
  }
  report.seconds = clock.seconds();
  return report;
}

// ---------------------------------------------------------------------------
// Posets separated by small hom counts

CheckReport check_lovasz_desk(const CheckOptions& opt) {
  Stopwatch clock;
  CheckReport report;
  report.id = "lovasz";
  const std::size_t max_n = opt.max_n ? opt.max_n : 4;
  report.universe = "poset pairs <= " + std::to_string(max_n) +
                    " vertices; sources posets with at most max(|R|,|S|) vertices";
  const auto& posets = catalog_members({CatalogKind::posets}, max_n, opt.jobs);
  const std::size_t k = posets.size();
  // counts[kind][source][target]
  std::vector<std::vector<std::vector<BigInt>>> counts(
      2, std::vector<std::vector<BigInt>>(k, std::vector<BigInt>(k)));
  parallel_for(k * k, opt.jobs, [&](std::size_t idx) {
    const std::size_t gi = idx / k, ti = idx % k;
    counts[0][gi][ti] = count_homs(posets[gi], posets[ti], HomKind::all);
    counts[1][gi][ti] = count_homs(posets[gi], posets[ti], HomKind::strict);
  });
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      ++report.instances;
      const std::size_t bound = std::max(posets[a].order(), posets[b].order());
      for (int kind = 0; kind < 2; ++kind) {
        bool separated = false;
        for (std::size_t gi = 0; gi < k && !separated; ++gi) {
          if (posets[gi].order() > bound) continue;
          separated = counts[kind][gi][a] != counts[kind][gi][b];
        }
        if (!separated) {
          report.violations.push_back(std::string("  no ") + (kind ? "strict " : "") +
                                      "count separates\n" + block("R", posets[a]) +
                                      block("S", posets[b]));
        }
      }
    }
  }
  report.seconds = clock.seconds();
  return report;
}

// ---------------------------------------------------------------------------

std::vector<std::string> check_ids() {
  return {"eq4", "selecting", "prop1", "thm5", "thm6", "thm7", "thm8", "prop2", "lovasz", "engine"};
}

CheckReport run_check(const std::string& id, const CheckOptions& opt) {
  if (id == "eq4") return check_extension(opt);
  if (id == "selecting") return check_selecting(opt);
  if (id == "prop1") return check_r_membership(opt);
  if (id == "thm5") return check_cover_gaps(opt);
  if (id == "thm6") return check_height_gaps(opt);
  if (id == "thm7") return check_phi_scaling(opt);
  if (id == "thm8") return check_capsule_gaps(opt);
  if (id == "prop2") return check_top_path_strictness(opt);
  if (id == "lovasz") return check_lovasz_desk(opt);
  if (id == "engine") return check_engine(opt);
  throw Error("unknown check: " + id);
}

}  // namespace homlab
