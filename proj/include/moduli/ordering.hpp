#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "moduli/descartes.hpp"
#include "moduli/roots.hpp"

namespace moduli {

/// One set of roots sharing a modulus.
struct ModulusGroup {
  int positives = 0;
  int negatives = 0;

  int size() const { return positives + negatives; }
  friend bool operator==(const ModulusGroup&, const ModulusGroup&) = default;
  friend auto operator<=>(const ModulusGroup&, const ModulusGroup&) = default;
};

/// How positive-root and negative-root moduli interleave on the half-line,
/// as groups of equal modulus listed by increasing modulus.
///
/// Word syntax: "PNNP" for generic orderings; tied groups are parenthesized,
/// positives first, e.g. "P(PNNN)".
class ModulusOrdering {
 public:
  ModulusOrdering() = default;
  explicit ModulusOrdering(std::vector<ModulusGroup> groups);

  static ModulusOrdering parse(std::string_view word);

  const std::vector<ModulusGroup>& groups() const { return groups_; }
  int degree() const;
  int positive_count() const;
  int negative_count() const;
  bool is_generic() const;

  std::string to_string() const;

  friend bool operator==(const ModulusOrdering&, const ModulusOrdering&) = default;
  friend auto operator<=>(const ModulusOrdering&, const ModulusOrdering&) = default;

 private:
  std::vector<ModulusGroup> groups_;
};

/// m*, n*, q*: negative-root moduli above the largest positive modulus,
/// strictly between the two positive moduli, and below the smallest one.
/// For one sign change, m* counts moduli above and n* moduli below the
/// positive modulus; q* is 0.
struct OrderingStats {
  int m_star = 0;
  int n_star = 0;
  int q_star = 0;
  bool tie_alpha = false;  // some negative modulus equals the largest positive modulus
  bool tie_beta = false;   // some negative modulus equals the smallest positive modulus

  bool has_ties() const { return tie_alpha || tie_beta; }
  friend bool operator==(const OrderingStats&, const OrderingStats&) = default;
};

ModulusOrdering ordering_of(const SignedRootMultiset& roots);

/// Requires exactly `changes` positive entries, changes in {1, 2}.
OrderingStats stats_of(const ModulusOrdering& o, int changes);

/// Realization order obtained by repeated concatenation with linear factors.
ModulusOrdering canonical_ordering(const SignPattern& sp);

/// All C(d, c) generic words with c letters P, in lexicographic order (P < N).
std::vector<ModulusOrdering> enumerate_generic(int degree, int changes);

/// Ordering of the reciprocal roots.
ModulusOrdering reverse_ordering(const ModulusOrdering& o);

/// Ordering of the negated roots (P and N exchanged).
ModulusOrdering negate_ordering(const ModulusOrdering& o);

}  // namespace moduli
