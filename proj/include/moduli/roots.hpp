#pragma once

#include <span>
#include <vector>

#include "moduli/polynomial.hpp"
#include "moduli/rational.hpp"

namespace moduli {

/// Multiset of nonzero real roots, split by sign.
///
/// Positive roots are kept ascending; negative roots are kept in ascending
/// modulus (so descending value). Zero roots are rejected: every polynomial
/// this library studies has a nonvanishing constant term.
class SignedRootMultiset {
 public:
  SignedRootMultiset() = default;
  SignedRootMultiset(std::vector<Rational> positive, std::vector<Rational> negative);

  static SignedRootMultiset from_roots(std::span<const Rational> roots);

  int degree() const { return static_cast<int>(positive_.size() + negative_.size()); }
  int positive_count() const { return static_cast<int>(positive_.size()); }
  int negative_count() const { return static_cast<int>(negative_.size()); }
  bool empty() const { return degree() == 0; }

  std::span<const Rational> positive() const { return positive_; }
  std::span<const Rational> negative() const { return negative_; }

  /// All roots ordered by increasing modulus; a positive root precedes a
  /// negative root of equal modulus.
  std::vector<Rational> by_modulus() const;

  /// Moduli of the negative roots, ascending.
  std::vector<Rational> negative_moduli() const;

  SignedRootMultiset reciprocal() const;
  SignedRootMultiset negated() const;
  SignedRootMultiset scaled(const Rational& factor) const;
  SignedRootMultiset merged(const SignedRootMultiset& other) const;
  SignedRootMultiset with_root(const Rational& root, int multiplicity = 1) const;

  friend bool operator==(const SignedRootMultiset&, const SignedRootMultiset&) = default;

 private:
  void normalize();

  std::vector<Rational> positive_;
  std::vector<Rational> negative_;
};

/// prod (x - r) over the roots with multiplicity.
MonicPolynomial expand_from_roots(const SignedRootMultiset& roots);
MonicPolynomial expand_from_roots(std::span<const Rational> roots);

}  // namespace moduli
