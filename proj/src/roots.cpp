#include "moduli/roots.hpp"

#include <algorithm>

#include "moduli/error.hpp"

namespace moduli {

SignedRootMultiset::SignedRootMultiset(std::vector<Rational> positive, std::vector<Rational> negative)
    : positive_(std::move(positive)), negative_(std::move(negative)) {
  for (const auto& r : positive_)
    if (r.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "positive root list holds " + r.to_string());
  for (const auto& r : negative_)
    if (r.sign() >= 0) throw Error(ErrorKind::InvalidArgument, "negative root list holds " + r.to_string());
  normalize();
}

SignedRootMultiset SignedRootMultiset::from_roots(std::span<const Rational> roots) {
  std::vector<Rational> pos, neg;
  for (const auto& r : roots) {
    if (r.is_zero()) throw Error(ErrorKind::InvalidArgument, "zero root: constant coefficient would vanish");
    (r.sign() > 0 ? pos : neg).push_back(r);
  }
  return SignedRootMultiset(std::move(pos), std::move(neg));
}

void SignedRootMultiset::normalize() {
  std::sort(positive_.begin(), positive_.end());
  std::sort(negative_.begin(), negative_.end(), std::greater<>());
}

std::vector<Rational> SignedRootMultiset::by_modulus() const {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(degree()));
  std::size_t i = 0, j = 0;
  while (i < positive_.size() || j < negative_.size()) {
    if (j == negative_.size() || (i < positive_.size() && positive_[i] <= -negative_[j])) {
      out.push_back(positive_[i++]);
    } else {
      out.push_back(negative_[j++]);
    }
  }
  return out;
}

std::vector<Rational> SignedRootMultiset::negative_moduli() const {
  std::vector<Rational> out;
  out.reserve(negative_.size());
  for (const auto& r : negative_) out.push_back(-r);
  return out;
}

SignedRootMultiset SignedRootMultiset::reciprocal() const {
  std::vector<Rational> pos, neg;
  for (const auto& r : positive_) pos.push_back(r.reciprocal());
  for (const auto& r : negative_) neg.push_back(r.reciprocal());
  return SignedRootMultiset(std::move(pos), std::move(neg));
}

SignedRootMultiset SignedRootMultiset::negated() const {
  std::vector<Rational> pos, neg;
  for (const auto& r : negative_) pos.push_back(-r);
  for (const auto& r : positive_) neg.push_back(-r);
  return SignedRootMultiset(std::move(pos), std::move(neg));
}

SignedRootMultiset SignedRootMultiset::scaled(const Rational& factor) const {
  if (factor.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "root scaling factor must be positive");
  std::vector<Rational> pos, neg;
  for (const auto& r : positive_) pos.push_back(r * factor);
  for (const auto& r : negative_) neg.push_back(r * factor);
  return SignedRootMultiset(std::move(pos), std::move(neg));
}

SignedRootMultiset SignedRootMultiset::merged(const SignedRootMultiset& other) const {
  std::vector<Rational> pos = positive_, neg = negative_;
  pos.insert(pos.end(), other.positive_.begin(), other.positive_.end());
  neg.insert(neg.end(), other.negative_.begin(), other.negative_.end());
  return SignedRootMultiset(std::move(pos), std::move(neg));
}

SignedRootMultiset SignedRootMultiset::with_root(const Rational& root, int multiplicity) const {
  std::vector<Rational> extra(static_cast<std::size_t>(multiplicity), root);
  return merged(from_roots(extra));
}

MonicPolynomial expand_from_roots(std::span<const Rational> roots) {
  if (roots.empty()) throw Error(ErrorKind::InvalidArgument, "cannot expand an empty root multiset");
  // coeffs low-to-high including the leading 1.
  std::vector<Rational> c{Rational(1)};
  c.reserve(roots.size() + 1);
  for (const auto& r : roots) {
    if (r.is_zero()) throw Error(ErrorKind::InvalidArgument, "zero root: constant coefficient would vanish");
    c.emplace_back(0);
    for (std::size_t k = c.size() - 1; k >= 1; --k) c[k] = c[k - 1] - r * c[k];
    c[0] = -r * c[0];
  }
  c.pop_back();
  return MonicPolynomial(std::move(c));
}

MonicPolynomial expand_from_roots(const SignedRootMultiset& roots) {
  const auto all = roots.by_modulus();
  return expand_from_roots(std::span<const Rational>(all));
}

}  // namespace moduli
