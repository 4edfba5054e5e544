#pragma once

#include <optional>
#include <span>
#include <vector>

#include "moduli/descartes.hpp"
#include "moduli/ordering.hpp"
#include "moduli/polynomial.hpp"
#include "moduli/roots.hpp"

namespace moduli {

/// Every "small enough" parameter (epsilon, eta, offset scale) is found by
/// halving from its start value until an exact predicate holds, at most this
/// many times (a hard floor of start * 2^-256).
inline constexpr int kMaxHalvings = 256;

struct ConcatenationResult {
  MonicPolynomial product;
  Rational epsilon;
  /// Epsilon times the second factor's roots.
  SignedRootMultiset scaled_roots;
  /// Roots of `product`: the first factor's roots plus scaled_roots.
  SignedRootMultiset roots;
};

/// Pattern realized by eps^{d2} P1(x) P2(x/eps) for small eps: the tail of
/// the second pattern is appended as is when the first pattern ends with +,
/// and sign-flipped when it ends with -.
SignPattern concatenated_pattern(const SignPattern& first, const SignPattern& second);

/// Splices two realizations. The second factor's roots are scaled by the
/// largest verified eps in {1/2, 1/4, ...} so that their moduli fall strictly
/// below every modulus of the first and the product shows the concatenated
/// pattern. Throws DegeneratePattern on a zero input coefficient and
/// SearchExhausted if no eps verifies.
ConcatenationResult concatenate(const SignedRootMultiset& first, const SignedRootMultiset& second);

/// Witness with distinct moduli in canonical order, built by d-1
/// concatenations with x - 1 / x + 1.
SignedRootMultiset realize_canonical(const SignPattern& sp);

/// Parameters of the one-sign-change construction for Sigma_{m,n}, n <= m.
///
/// `ties` negative roots sit exactly at -1 (modulus equal to the positive
/// root 1), `below` negative moduli lie under 1 and the rest above.
/// `below_multiplicities` groups the moduli under 1 by increasing modulus.
/// `above_multiplicities` groups the moduli above 1 listed by increasing
/// root value (so decreasing modulus); when m > n it must satisfy
/// condition_a so the far cluster and the near cluster split cleanly.
/// Empty vectors mean "all simple".
struct C1Case {
  int m = 1;
  int n = 1;
  int ties = 0;
  int below = 0;
  std::vector<int> above_multiplicities;
  std::vector<int> below_multiplicities;
};

/// True iff some prefix of `mu` (possibly empty) sums to d - 2n.
/// Requires sum(mu) == d - 1 - s - r.
bool condition_a(std::span<const int> mu, int d, int n, int s, int r);

SignedRootMultiset realize_c1_case(int m, int n, int ties, int below);
SignedRootMultiset realize_c1_case(const C1Case& spec);

/// Generic witness for Sigma_{m,n} with exactly `n_star` negative moduli below
/// the positive one. Works on both sides of m = n (reverting when n > m).
SignedRootMultiset realize_one_change(const SigmaShape& shape, int n_star);

/// Closed interval of n* realizable for Sigma_{m,n} in the generic case.
struct NStarRange {
  int low = 0;
  int high = 0;
  bool contains(int v) const { return v >= low && v <= high; }
};
NStarRange one_change_range(const SigmaShape& shape);

/// (x + s)^s (x - 1)^2 (x + 1), s >= 2.
MonicPolynomial realize_y_family(int s);
/// Closed form of the coefficient of x^k (k in 0..4) of realize_y_family(s).
Rational y_family_closed_form(int s, int k);

/// Generic witness of Sigma_{d-n,n,1} with ordering N P P N^{d-3}
/// (one negative modulus below both positive ones). n in {2, 3};
/// d >= 4 for n = 2 and d >= 5 for n = 3.
SignedRootMultiset realize_case_ii(int d, int n);

/// Adds the root -1/eta with eta halved from `eta` until the new modulus
/// exceeds every other and the pattern is "+" followed by the old pattern.
SignedRootMultiset multiply_linear_large(const SignedRootMultiset& roots, const Rational& eta);

/// Replaces offsets.size() copies of `root` by root + t * offset_i with
/// t in {1, 1/2, ...} until the original pattern (and `target`, when given)
/// is reproduced. All-zero offsets return the input unchanged.
SignedRootMultiset split_root(const SignedRootMultiset& roots, const Rational& root, std::span<const Rational> offsets,
                              const std::optional<ModulusOrdering>& target = std::nullopt);

/// Generic Sigma_{m,n,q} witness for `word` built as the concatenation of a
/// Sigma_{m,n1} realization and a scaled Sigma_{n2,q} realization
/// (n1 + n2 = n + 1), when some split of the word allows it.
std::optional<SignedRootMultiset> realize_by_concatenation(const SigmaShape& shape, const ModulusOrdering& word);

/// Tries every constructive route for a generic (pattern, word) cell:
/// canonical order, one-change family, concatenation, case ii, and the
/// perturbation families for Sigma_{2,3,1} and Sigma_{3,2,1}, each also
/// through reversion. Returns a verified witness or nothing.
std::optional<SignedRootMultiset> construct_witness(const SignPattern& sp, const ModulusOrdering& word);

/// Exact check: expansion has pattern `sp` and the roots have ordering `word`.
bool realizes(const SignedRootMultiset& roots, const SignPattern& sp, const ModulusOrdering& word);

}  // namespace moduli
