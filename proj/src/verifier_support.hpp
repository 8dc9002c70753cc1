#pragma once

// Helpers shared by the verifier translation units.

#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "homlab/catalog.hpp"
#include "homlab/io.hpp"
#include "homlab/parallel.hpp"
#include "homlab/verifier.hpp"

namespace homlab::detail {

/// Catalog members, generated once per (spec, max_n) and process.
const std::vector<Digraph>& catalog_members(CatalogSpec spec, std::size_t max_n,
                                            unsigned jobs);

/// Members of `spec` up to max_n that satisfy `pred`.
std::vector<Digraph> filtered(CatalogSpec spec, std::size_t max_n, unsigned jobs,
                              const std::function<bool(const Digraph&)>& pred);

/// Indented digraph record for violation blocks.
std::string block(const std::string& label, const Digraph& g);
std::string block(const std::string& label, const ArcWeight& w);

/// Runs one task per index on the worker pool and appends the violation
/// blocks in index order, so reports do not depend on scheduling.
struct InstanceResult {
  std::size_t instances = 0;
  std::vector<std::string> violations;
  std::vector<std::string> notes;
};

void run_instances(CheckReport& report, std::size_t count, unsigned jobs,
                   const std::function<InstanceResult(std::size_t)>& task);

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

/// Key of a source digraph with its loops removed; hom counts into
/// reflexive targets depend only on this.
CanonicalCode skeleton_key(const Digraph& g);

}  // namespace homlab::detail
