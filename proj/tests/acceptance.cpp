// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "homlab/parallel.hpp"
#include "homlab/verifier.hpp"

namespace {

struct Criterion {
  int number;
  std::string name;
  std::vector<std::string> checks;
  double limit_seconds;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "extension-count formula", {"eq4"}, 5 * 60},
      {2, "selecting weights", {"selecting"}, 10 * 60},
      {3, "class R: both membership tests agree", {"prop1"}, 10 * 60},
      {4, "strict-count ratio on shell-encapsulated sources", {"thm7"}, 15 * 60},
      {5, "strict-count gaps become hom-count gaps", {"thm5", "thm6", "thm8"}, 20 * 60},
      {6, "top-path strictness characterization", {"prop2"}, 10 * 60},
      {7, "posets separated by small sources", {"lovasz"}, 5 * 60},
      {8, "engine against full-map filter", {"engine"}, 60},
  };
  const homlab::CheckOptions opt{0, homlab::default_jobs()};
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::size_t violations = 0, instances = 0;
    std::string error;
    try {
      for (const std::string& id : c.checks) {
        const homlab::CheckReport r = homlab::run_check(id, opt);
        violations += r.violations.size();
        instances += r.instances;
        if (!r.passed()) std::fputs(r.to_text().c_str(), stdout);
      }
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = error.empty() && violations == 0 && instances > 0 && seconds < c.limit_seconds;
    if (!ok) ++failures;
    std::printf("%s criterion %d (%s): violations=%zu instances=%zu time=%.1fs limit=%.0fs%s%s\n",
                ok ? "PASS" : "FAIL", c.number, c.name.c_str(), violations, instances, seconds,
                c.limit_seconds, error.empty() ? "" : " error: ", error.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
