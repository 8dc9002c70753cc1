#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "homlab/bigint.hpp"

namespace homlab {

/// ν ↦ Σ aᵢ·xᵢ^ν with positive integer coefficients and distinct positive
/// integer bases.
class ExpoSum {
 public:
  /// Adds a·x^ν. Coefficients of equal bases merge.
  void add(const BigInt& coefficient, const BigInt& base);

  bool empty() const { return terms_.empty(); }
  /// base -> coefficient, ascending by base.
  const std::map<BigInt, BigInt>& terms() const { return terms_; }
  BigInt evaluate(unsigned nu) const;
  /// (coefficient, base) of the largest base. Requires a non-empty sum.
  std::pair<BigInt, BigInt> leading() const;
  std::string to_string() const;

  friend bool operator==(const ExpoSum&, const ExpoSum&) = default;

 private:
  std::map<BigInt, BigInt> terms_;
};

/// Leading-term rule: +1 when f eventually exceeds g (larger base, or equal
/// base and larger coefficient), -1 for the mirror case, 0 when the leading
/// terms coincide and the rule says nothing.
int compare_leading(const ExpoSum& f, const ExpoSum& g);

/// Smallest ν with f(ν) > g(ν), or nullopt when f(ν) <= g(ν) for every ν.
///
/// The difference f - g is a signed sum of powers. Past the first ν at which
/// its largest term outweighs the absolute sum of all others, magnified by the
/// second largest base, its sign is fixed; every ν up to there is scanned.
std::optional<unsigned> first_exceeding(const ExpoSum& f, const ExpoSum& g);

/// The ν beyond which the sign of f - g no longer changes (0 for f == g).
unsigned sign_settles_at(const ExpoSum& f, const ExpoSum& g);

}  // namespace homlab
