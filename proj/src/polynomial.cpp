#include "moduli/polynomial.hpp"

#include <sstream>

#include "moduli/error.hpp"

namespace moduli {

Polynomial::Polynomial(std::vector<Rational> low_to_high) : coeffs_(std::move(low_to_high)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw Error(ErrorKind::InvalidArgument, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

MonicPolynomial Polynomial::normalized() const {
  if (degree() < 1) throw Error(ErrorKind::InvalidArgument, "cannot normalize a constant polynomial");
  const Rational lead = leading();
  std::vector<Rational> lower;
  lower.reserve(coeffs_.size() - 1);
  for (std::size_t k = 0; k + 1 < coeffs_.size(); ++k) lower.push_back(coeffs_[k] / lead);
  return MonicPolynomial(std::move(lower));
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (k == 0) {
      os << mag;
    } else {
      if (!unit) os << mag << "*";
      os << "x";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return Polynomial();
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return Polynomial(std::move(out));
}

MonicPolynomial::MonicPolynomial(std::vector<Rational> lower) : lower_(std::move(lower)) {
  if (lower_.empty()) throw Error(ErrorKind::InvalidArgument, "monic polynomial must have degree >= 1");
}

Rational MonicPolynomial::coefficient(int k) const {
  if (k == degree()) return Rational(1);
  if (k < 0 || k > degree()) return Rational(0);
  return lower_[static_cast<std::size_t>(k)];
}

Polynomial MonicPolynomial::as_polynomial() const {
  std::vector<Rational> all = lower_;
  all.emplace_back(1);
  return Polynomial(std::move(all));
}

Rational MonicPolynomial::evaluate(const Rational& x) const {
  Rational acc(1);
  for (auto it = lower_.rbegin(); it != lower_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational evaluate(const MonicPolynomial& p, const Rational& x) { return p.evaluate(x); }

Polynomial derivative(const Polynomial& p) {
  if (p.degree() < 1) return Polynomial();
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(p.degree()));
  for (int k = 1; k <= p.degree(); ++k) out.push_back(p.coefficient(k) * Rational(k));
  return Polynomial(std::move(out));
}

Polynomial derivative(const MonicPolynomial& p) { return derivative(p.as_polynomial()); }

Polynomial revert(const Polynomial& p) {
  if (p.coefficient(0).is_zero()) throw Error(ErrorKind::InvalidArgument, "revert requires a nonzero constant term");
  const auto c = p.coefficients();
  return Polynomial(std::vector<Rational>(c.rbegin(), c.rend()));
}

Polynomial revert(const MonicPolynomial& p) { return revert(p.as_polynomial()); }

MonicPolynomial negate_var(const MonicPolynomial& p) {
  // (-1)^d P(-x): coefficient of x^k picks up (-1)^(d-k).
  const int d = p.degree();
  std::vector<Rational> lower;
  lower.reserve(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) lower.push_back((d - k) % 2 == 0 ? p.coefficient(k) : -p.coefficient(k));
  return MonicPolynomial(std::move(lower));
}

Rational elementary_symmetric(std::span<const Rational> values, int k) {
  const int n = static_cast<int>(values.size());
  if (k < 0 || k > n) throw Error(ErrorKind::InvalidArgument, "elementary symmetric index out of range");
  // e[j] after processing a prefix; standard one-pass recurrence.
  std::vector<Rational> e(static_cast<std::size_t>(k) + 1, Rational(0));
  e[0] = Rational(1);
  for (const Rational& v : values)
    for (int j = k; j >= 1; --j) e[static_cast<std::size_t>(j)] += v * e[static_cast<std::size_t>(j) - 1];
  return e[static_cast<std::size_t>(k)];
}

Polynomial divide_by_linear(const Polynomial& p, const Rational& root, Rational* remainder) {
  if (p.degree() < 1) {
    if (remainder) *remainder = p.coefficient(0);
    return Polynomial();
  }
  const int d = p.degree();
  std::vector<Rational> q(static_cast<std::size_t>(d), Rational(0));
  Rational carry(0);
  for (int k = d; k >= 1; --k) {
    carry = carry * root + p.coefficient(k);
    q[static_cast<std::size_t>(k) - 1] = carry;
  }
  if (remainder) *remainder = carry * root + p.coefficient(0);
  return Polynomial(std::move(q));
}

int root_multiplicity(const Polynomial& p, const Rational& root) {
  int count = 0;
  Polynomial current = p;
  while (current.degree() >= 1) {
    Rational rem;
    Polynomial q = divide_by_linear(current, root, &rem);
    if (!rem.is_zero()) break;
    current = std::move(q);
    ++count;
  }
  return count;
}

}  // namespace moduli
