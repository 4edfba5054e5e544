#include <algorithm>

#include "moduli/classify.hpp"
#include "moduli/error.hpp"

namespace moduli {

namespace {

bool compare(const Rational& lhs, const Rational& rhs, Relation rel) {
  switch (rel) {
    case Relation::Equal: return lhs == rhs;
    case Relation::Greater: return lhs > rhs;
    case Relation::Less: return lhs < rhs;
  }
  return false;
}

void add(InequalityReport& report, std::string name, Rational lhs, Rational rhs, Relation rel) {
  const bool holds = compare(lhs, rhs, rel);
  report.checks.push_back({std::move(name), std::move(lhs), std::move(rhs), rel, holds});
}

Rational sum(std::span<const Rational> v) {
  Rational s(0);
  for (const auto& x : v) s += x;
  return s;
}

}  // namespace

bool InequalityReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const InequalityCheck& c) { return c.holds; });
}

InequalityReport validate_inequalities(const SignedRootMultiset& roots) {
  const MonicPolynomial p = expand_from_roots(roots);
  const auto shape = try_shape_of(sign_pattern_of(p));
  if (!shape || shape->kind != ShapeKind::TwoChanges || shape->q != 1)
    throw Error(ErrorKind::InvalidArgument, "validate_inequalities needs roots realizing Sigma_{m,n,1}");
  const int d = p.degree();
  const Rational alpha = roots.positive().back();
  const Rational beta = roots.positive().front();
  const std::vector<Rational> gamma = roots.negative_moduli();
  std::vector<Rational> inv_gamma;
  for (const auto& g : gamma) inv_gamma.push_back(g.reciprocal());

  InequalityReport report;
  if (shape->m == 1) {
    add(report, "alpha + beta > sum gamma", alpha + beta, sum(gamma), Relation::Greater);
    add(report, "1/alpha + 1/beta > sum 1/gamma", alpha.reciprocal() + beta.reciprocal(), sum(inv_gamma),
        Relation::Greater);
  }

  const Rational a0 = p.coefficient(0);
  const Rational minus_a1_a0 = -p.coefficient(1) / a0;
  add(report, "1/alpha + 1/beta - sum 1/gamma = -a1/a0", alpha.reciprocal() + beta.reciprocal() - sum(inv_gamma),
      minus_a1_a0, Relation::Equal);
  add(report, "-a1/a0 > 0", minus_a1_a0, Rational(0), Relation::Greater);

  const std::string lone_low = "NPP" + std::string(static_cast<std::size_t>(std::max(d - 3, 0)), 'N');
  if (shape->n == 3 && d >= 5 && ordering_of(roots).to_string() == lone_low) {
    // gamma_1 is the lone modulus below beta; E_j are the elementary
    // symmetric sums of the remaining reciprocal moduli.
    const Rational g1 = inv_gamma.front();
    const std::span<const Rational> rest(inv_gamma.begin() + 1, inv_gamma.end());
    auto e = [&](int k) { return k > static_cast<int>(rest.size()) ? Rational(0) : elementary_symmetric(rest, k); };
    const Rational s = alpha.reciprocal() + beta.reciprocal();
    const Rational ab = (alpha * beta).reciprocal();
    const Rational expansion = e(4) + ab * e(2) + g1 * e(3) + ab * g1 * e(1) - s * e(3) - s * g1 * e(2);
    const Rational a4_a0 = p.coefficient(4) / a0;
    add(report, "a4/a0 = E4 + E2/(alpha beta) + E3/gamma1 + E1/(alpha beta gamma1) - S E3 - S E2/gamma1", a4_a0,
        expansion, Relation::Equal);
    add(report, "a4/a0 > 0", a4_a0, Rational(0), Relation::Greater);
    add(report, "E2 < E1^2/2", e(2), e(1) * e(1) / Rational(2), Relation::Less);
  }
  return report;
}

}  // namespace moduli
