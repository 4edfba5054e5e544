#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "moduli/polynomial.hpp"
#include "moduli/roots.hpp"

namespace moduli {

enum class Sign : signed char { Minus = -1, Plus = 1 };

/// Signs of (1, a_{d-1}, ..., a_0) of a monic polynomial.
class SignPattern {
 public:
  /// Requires a nonempty sequence whose first entry is Plus.
  explicit SignPattern(std::vector<Sign> signs);

  /// Parses "+--+". A '0' entry is a degenerate pattern; a leading '-' is a
  /// parse error.
  static SignPattern parse(std::string_view text);

  int degree() const { return static_cast<int>(signs_.size()) - 1; }
  const std::vector<Sign>& signs() const { return signs_; }
  Sign operator[](std::size_t i) const { return signs_[i]; }

  int changes() const;
  int preservations() const { return degree() - changes(); }

  /// Run lengths of equal consecutive signs, e.g. "++--+" -> {2, 2, 1}.
  std::vector<int> blocks() const;

  std::string to_string() const;

  friend bool operator==(const SignPattern&, const SignPattern&) = default;
  friend auto operator<=>(const SignPattern&, const SignPattern&) = default;

 private:
  std::vector<Sign> signs_;
};

struct SignCounts {
  int changes = 0;
  int preservations = 0;
  friend bool operator==(const SignCounts&, const SignCounts&) = default;
};

SignCounts counts(const SignPattern& sp);

enum class ShapeKind { AllPlus, OneChange, TwoChanges };

/// Block decomposition of a pattern with at most two sign changes:
/// AllPlus (m pluses), OneChange (m pluses, n minuses) or
/// TwoChanges (m pluses, n minuses, q pluses).
struct SigmaShape {
  ShapeKind kind = ShapeKind::AllPlus;
  int m = 1;
  int n = 0;
  int q = 0;

  static SigmaShape all_plus(int degree);
  static SigmaShape one_change(int m, int n);
  static SigmaShape two_changes(int m, int n, int q);

  /// "m", "m,n" or "m,n,q" (block lengths).
  static SigmaShape parse(std::string_view text);

  int degree() const { return m + n + q - 1; }
  int changes() const;
  std::string to_string() const;

  friend bool operator==(const SigmaShape&, const SigmaShape&) = default;
  friend auto operator<=>(const SigmaShape&, const SigmaShape&) = default;
};

/// Pattern from comma-separated block lengths, any number of blocks: "1,2,2".
SignPattern pattern_from_blocks(std::string_view text);
std::string blocks_string(const SignPattern& sp);

/// Throws DegeneratePattern when a coefficient is exactly zero.
SignPattern sign_pattern_of(const MonicPolynomial& p);
std::optional<SignPattern> try_sign_pattern_of(const MonicPolynomial& p);

/// Throws UnsupportedShape for c > 2.
SigmaShape shape_of(const SignPattern& sp);
std::optional<SigmaShape> try_shape_of(const SignPattern& sp);
SignPattern make_pattern(const SigmaShape& shape);

/// Read backward, then flip globally if needed so the first sign is +.
SignPattern reverse_pattern(const SignPattern& sp);
SigmaShape reverse_shape(const SigmaShape& shape);

/// Pattern of (-1)^d P(-x): entry k (counted from the leading term) is
/// multiplied by (-1)^k. Exchanges c and p.
SignPattern negate_pattern(const SignPattern& sp);

/// True iff the root counts of `roots` equal (c, p) of the pattern of their
/// expansion. Propagates DegeneratePattern.
bool descartes_verify(const SignedRootMultiset& roots);

/// Every shape of degree d with exactly c sign changes (c <= 2), ordered by (m, n, q).
std::vector<SigmaShape> shapes_with_changes(int degree, int changes);

}  // namespace moduli
