#include "homlab/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "homlab/arc_weights.hpp"
#include "homlab/catalog.hpp"
#include "homlab/hom_engine.hpp"
#include "homlab/io.hpp"
#include "homlab/parallel.hpp"
#include "homlab/paths.hpp"
#include "homlab/shells.hpp"
#include "homlab/taxonomy.hpp"
#include "homlab/verifier.hpp"

namespace homlab {

namespace {

/// Writes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Homomorphism counts between finite digraphs"};
  app.require_subcommand(1);
  std::string out_path;

  std::string from, to;
  bool strict = false;
  auto* count = app.add_subcommand("count", "Print #H(G,H), or #S(G,H) with --strict");
  count->add_option("--from", from, "Source digraph file")->required();
  count->add_option("--to", to, "Target digraph file")->required();
  count->add_flag("--strict", strict, "Count strict homomorphisms");

  auto* enumerate = app.add_subcommand("enumerate", "List homomorphisms, one map per line");
  enumerate->add_option("--from", from, "Source digraph file")->required();
  enumerate->add_option("--to", to, "Target digraph file")->required();
  enumerate->add_flag("--strict", strict, "Only strict homomorphisms");
  enumerate->add_option("--out", out_path, "Output file");

  std::string graph, weight;
  unsigned nu = 0;
  bool poset = false;
  auto* expand_cmd = app.add_subcommand("expand", "Write the expansion of a weighted digraph");
  expand_cmd->add_option("--graph", graph, "Digraph file")->required();
  expand_cmd->add_option("--weight", weight, "Arc weight file")->required();
  expand_cmd->add_option("--nu", nu, "Expansion exponent")->required();
  expand_cmd->add_flag("--poset", poset, "Poset expansion (transitive hull, looped midpoints)");
  expand_cmd->add_option("--out", out_path, "Output file");

  std::optional<std::size_t> height;
  auto* classify_cmd = app.add_subcommand("classify", "Print class memberships as JSON");
  classify_cmd->add_option("--graph", graph, "Digraph file")->required();
  classify_cmd->add_option("--n", height, "Height parameter of the height classes");

  auto* shells_cmd = app.add_subcommand("shells", "Print shells and bounds of every off-top component");
  shells_cmd->add_option("--graph", graph, "Digraph file")->required();

  auto* phi_cmd = app.add_subcommand("phi", "Print the exact strict-count ratio of a "
                                            "shell-encapsulated digraph");
  phi_cmd->add_option("--graph", graph, "Digraph file")->required();

  auto* catalog_cmd = app.add_subcommand("catalog", "Catalog tools");
  catalog_cmd->require_subcommand(1);
  std::string kind;
  std::size_t max_n = 0;
  unsigned jobs = default_jobs();
  auto* gen = catalog_cmd->add_subcommand("gen", "Generate a catalog up to isomorphism");
  gen->add_option("--kind", kind, "posets, Ta, reflexive, all, flat_posets, Chn<k>, Taghn<k>, TaghnA<k>")
      ->required();
  gen->add_option("--max-n", max_n, "Largest vertex count")->required();
  gen->add_option("--out", out_path, "Output file");
  gen->add_option("--jobs", jobs, "Worker threads");

  std::vector<std::string> checks;
  std::string report_path;
  auto* verify = app.add_subcommand("verify", "Run verification sweeps");
  verify->add_option("--check", checks, "Check ids (default: all)")
      ->check(CLI::IsMember(check_ids()));
  verify->add_option("--max-n", max_n, "Vertex bound of the source catalog");
  verify->add_option("--report", report_path, "Report file");
  verify->add_option("--jobs", jobs, "Worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*count) {
      std::cout << count_homs(load_digraph(from), load_digraph(to),
                              strict ? HomKind::strict : HomKind::all)
                << '\n';
    } else if (*enumerate) {
      Output out(out_path);
      const Digraph h = load_digraph(to);
      HomSearch(load_digraph(from), h, strict ? HomKind::strict : HomKind::all)
          .for_each([&](const VertexMap& m) {
            out.stream() << to_string(m) << '\n';
            return true;
          });
    } else if (*expand_cmd) {
      const Digraph g = load_digraph(graph);
      const Expansion ex = expand(g, load_weight(weight, g), nu, poset);
      Output out(out_path);
      write_digraph(out.stream(), ex.result);
    } else if (*classify_cmd) {
      std::cout << classify(load_digraph(graph), height).to_json() << '\n';
    } else if (*shells_cmd) {
      const Digraph g = load_digraph(graph);
      const PathStructure ps = analyze_paths(g);
      for (const VertexSet& z : z_components(g, ps)) {
        const auto capsule = find_shells(g, ps, z);
        if (capsule) {
          std::cout << capsule->to_string();
        } else {
          std::cout << "component";
          for (Vertex v : members(z)) std::cout << ' ' << v;
          std::cout << ": no admissible bounds\n";
        }
      }
    } else if (*phi_cmd) {
      std::cout << to_string(phi(load_digraph(graph))) << '\n';
    } else if (*gen) {
      const Catalog c = generate(CatalogSpec::parse(kind), max_n, jobs);
      Output out(out_path);
      save_catalog(out.stream(), c);
    } else if (*verify) {
      if (checks.empty()) checks = check_ids();
      std::ofstream file;
      if (!report_path.empty()) {
        file.open(report_path);
        if (!file) throw Error("cannot write " + report_path);
      }
      std::ostream& report = file.is_open() ? file : std::cout;
      bool passed = true;
      for (const std::string& id : checks) {
        const CheckReport r = run_check(id, {max_n, jobs});
        report << r.to_text();
        std::cerr << id << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.seconds << " s)\n";
        passed = passed && r.passed();
      }
      return passed ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace homlab
