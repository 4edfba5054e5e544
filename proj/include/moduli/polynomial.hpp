#pragma once

#include <span>
#include <string>
#include <vector>

#include "moduli/rational.hpp"

namespace moduli {

class MonicPolynomial;

/// Dense polynomial with exact coefficients, stored low-to-high degree.
/// Trailing zeros are trimmed; the zero polynomial has degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> low_to_high);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of x^k; zero outside [0, degree].
  Rational coefficient(int k) const;
  const Rational& leading() const;
  std::span<const Rational> coefficients() const { return coeffs_; }

  Rational evaluate(const Rational& x) const;

  /// Divide by the leading coefficient.
  MonicPolynomial normalized() const;

  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);

 private:
  std::vector<Rational> coeffs_;
};

/// Monic polynomial x^d + a_{d-1} x^{d-1} + ... + a_0 with d >= 1.
class MonicPolynomial {
 public:
  /// `lower` holds a_0 ... a_{d-1}; its length is the degree.
  explicit MonicPolynomial(std::vector<Rational> lower);

  int degree() const { return static_cast<int>(lower_.size()); }

  /// Coefficient of x^k, with coefficient(degree()) == 1.
  Rational coefficient(int k) const;
  std::span<const Rational> lower_coefficients() const { return lower_; }

  Polynomial as_polynomial() const;
  Rational evaluate(const Rational& x) const;
  std::string to_string() const { return as_polynomial().to_string(); }

  friend bool operator==(const MonicPolynomial&, const MonicPolynomial&) = default;

 private:
  std::vector<Rational> lower_;
};

Rational evaluate(const MonicPolynomial& p, const Rational& x);
Polynomial derivative(const Polynomial& p);
Polynomial derivative(const MonicPolynomial& p);

/// x^d P(1/x): coefficient sequence reversed. Rejects a_0 == 0.
Polynomial revert(const Polynomial& p);
Polynomial revert(const MonicPolynomial& p);

/// (-1)^d P(-x): monic, roots negated.
MonicPolynomial negate_var(const MonicPolynomial& p);

/// e_k of the values; e_0 == 1.
Rational elementary_symmetric(std::span<const Rational> values, int k);

/// Exact division by (x - root). Returns the quotient; the remainder is P(root).
Polynomial divide_by_linear(const Polynomial& p, const Rational& root, Rational* remainder = nullptr);

/// Multiplicity of `root` as a root of p (0 when p(root) != 0).
int root_multiplicity(const Polynomial& p, const Rational& root);

}  // namespace moduli
