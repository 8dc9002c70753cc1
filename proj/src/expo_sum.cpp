#include "homlab/expo_sum.hpp"

#include <sstream>

#include "homlab/digraph.hpp"

namespace homlab {

void ExpoSum::add(const BigInt& coefficient, const BigInt& base) {
  if (coefficient <= 0 || base <= 0) {
    throw Error("ExpoSum terms need positive coefficient and base");
  }
  terms_[base] += coefficient;
}

BigInt ExpoSum::evaluate(unsigned nu) const {
  BigInt total = 0;
  for (const auto& [base, coeff] : terms_) total += coeff * power(base, nu);
  return total;
}

std::pair<BigInt, BigInt> ExpoSum::leading() const {
  if (terms_.empty()) throw Error("leading term of an empty ExpoSum");
  const auto& [base, coeff] = *terms_.rbegin();
  return {coeff, base};
}

std::string ExpoSum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    os << it->second << '*' << it->first << "^nu";
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

int compare_leading(const ExpoSum& f, const ExpoSum& g) {
  if (f.empty() || g.empty()) {
    if (f.empty() && g.empty()) return 0;
    return f.empty() ? -1 : 1;
  }
  const auto [a, x] = f.leading();
  const auto [b, y] = g.leading();
  if (x != y) return x > y ? 1 : -1;
  if (a != b) return a > b ? 1 : -1;
  return 0;
}

namespace {

using SignedTerms = std::map<BigInt, BigInt>;

SignedTerms difference(const ExpoSum& f, const ExpoSum& g) {
  SignedTerms d;
  for (const auto& [base, c] : f.terms()) d[base] += c;
  for (const auto& [base, c] : g.terms()) d[base] -= c;
  for (auto it = d.begin(); it != d.end();) {
    it = it->second == 0 ? d.erase(it) : std::next(it);
  }
  return d;
}

BigInt evaluate(const SignedTerms& d, unsigned nu) {
  BigInt total = 0;
  for (const auto& [base, c] : d) total += c * power(base, nu);
  return total;
}

unsigned settles(const SignedTerms& d) {
  if (d.size() <= 1) return 0;
  const auto lead = std::prev(d.end());
  const BigInt lead_abs = boost::multiprecision::abs(lead->second);
  const BigInt second_base = std::prev(lead)->first;
  BigInt rest = 0;
  for (auto it = d.begin(); it != lead; ++it) rest += boost::multiprecision::abs(it->second);
  unsigned nu = 0;
  BigInt lhs = lead_abs;
  BigInt rhs = rest;
  while (lhs <= rhs) {
    lhs *= lead->first;
    rhs *= second_base;
    ++nu;
  }
  return nu;
}

}  // namespace

unsigned sign_settles_at(const ExpoSum& f, const ExpoSum& g) {
  return settles(difference(f, g));
}

std::optional<unsigned> first_exceeding(const ExpoSum& f, const ExpoSum& g) {
  const SignedTerms d = difference(f, g);
  if (d.empty()) return std::nullopt;
  const unsigned bound = settles(d);
  for (unsigned nu = 0; nu <= bound; ++nu) {
    if (evaluate(d, nu) > 0) return nu;
  }
  return std::nullopt;
}

}  // namespace homlab
