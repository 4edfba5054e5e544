#include "moduli/construct.hpp"

#include <algorithm>
#include <numeric>

#include "moduli/error.hpp"

namespace moduli {

namespace {

Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

std::optional<SignPattern> pattern_of(const SignedRootMultiset& roots) {
  return try_sign_pattern_of(expand_from_roots(roots));
}

Rational max_modulus(const SignedRootMultiset& roots) {
  Rational best(0);
  for (const auto& r : roots.positive()) best = std::max(best, r);
  for (const auto& r : roots.negative()) best = std::max(best, -r);
  return best;
}

Rational min_modulus(const SignedRootMultiset& roots) {
  const auto all = roots.by_modulus();
  if (all.empty()) throw Error(ErrorKind::InvalidArgument, "empty root multiset");
  return all.front().abs();
}

/// Calls `attempt(t)` for t = start, start/2, ... until it yields a value.
template <typename Attempt>
auto halve_until(const Rational& start, Attempt&& attempt) -> decltype(attempt(start)) {
  Rational t = start;
  for (int i = 0; i <= kMaxHalvings; ++i) {
    if (auto result = attempt(t)) return result;
    t /= Rational(2);
  }
  return std::nullopt;
}

SignedRootMultiset single_root(long num, long den = 1) {
  const Rational r(num, den);
  return SignedRootMultiset::from_roots(std::span<const Rational>(&r, 1));
}

std::vector<int> ones(int count) { return std::vector<int>(static_cast<std::size_t>(std::max(count, 0)), 1); }

int sum(std::span<const int> v) { return std::accumulate(v.begin(), v.end(), 0); }

/// Offsets u * (1 + i / (2g)) for groups i = 0..g-1: distinct, within [u, 3u/2).
std::vector<Rational> spread(const Rational& u, std::size_t groups) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < groups; ++i)
    out.push_back(u * (Rational(1) + Rational(static_cast<long>(i), 2 * static_cast<long>(groups))));
  return out;
}

}  // namespace

bool realizes(const SignedRootMultiset& roots, const SignPattern& sp, const ModulusOrdering& word) {
  if (roots.degree() != sp.degree()) return false;
  const auto p = pattern_of(roots);
  return p && *p == sp && ordering_of(roots) == word;
}

SignPattern concatenated_pattern(const SignPattern& first, const SignPattern& second) {
  std::vector<Sign> signs = first.signs();
  const bool flip_tail = first.signs().back() == Sign::Minus;
  for (std::size_t i = 1; i < second.signs().size(); ++i)
    signs.push_back(flip_tail ? flip(second[i]) : second[i]);
  return SignPattern(std::move(signs));
}

ConcatenationResult concatenate(const SignedRootMultiset& first, const SignedRootMultiset& second) {
  const SignPattern target =
      concatenated_pattern(sign_pattern_of(expand_from_roots(first)), sign_pattern_of(expand_from_roots(second)));
  const Rational floor = min_modulus(first);
  const Rational top = max_modulus(second);
  auto found = halve_until(Rational(1, 2), [&](const Rational& eps) -> std::optional<ConcatenationResult> {
    if (eps * top >= floor) return std::nullopt;
    SignedRootMultiset scaled = second.scaled(eps);
    SignedRootMultiset roots = first.merged(scaled);
    MonicPolynomial product = expand_from_roots(roots);
    if (try_sign_pattern_of(product) != target) return std::nullopt;
    return ConcatenationResult{std::move(product), eps, std::move(scaled), std::move(roots)};
  });
  if (!found) throw Error(ErrorKind::SearchExhausted, "epsilon search failed for concatenation");
  return *std::move(found);
}

SignedRootMultiset realize_canonical(const SignPattern& sp) {
  const int d = sp.degree();
  SignedRootMultiset current = sp[1] == Sign::Plus ? single_root(-1) : single_root(1);
  for (int k = 1; k < d; ++k) {
    const bool change = sp[static_cast<std::size_t>(k)] != sp[static_cast<std::size_t>(k) + 1];
    current = concatenate(current, change ? single_root(1) : single_root(-1)).roots;
  }
  if (!realizes(current, sp, canonical_ordering(sp)))
    throw Error(ErrorKind::SearchExhausted, "canonical realization failed to verify for " + sp.to_string());
  return current;
}

bool condition_a(std::span<const int> mu, int d, int n, int s, int r) {
  if (sum(mu) != d - 1 - s - r)
    throw Error(ErrorKind::InvalidArgument, "multiplicity vector must sum to d - 1 - s - r");
  const int target = d - 2 * n;
  int prefix = 0;
  if (prefix == target) return true;
  for (int v : mu) {
    prefix += v;
    if (prefix == target) return true;
  }
  return false;
}

SignedRootMultiset realize_c1_case(int m, int n, int ties, int below) {
  return realize_c1_case(C1Case{m, n, ties, below, {}, {}});
}

SignedRootMultiset realize_c1_case(const C1Case& spec) {
  const int m = spec.m, n = spec.n, s = spec.ties, r = spec.below;
  if (n < 1 || m < n) throw Error(ErrorKind::InvalidArgument, "realize_c1_case needs 1 <= n <= m");
  if (s < 0 || r < 0) throw Error(ErrorKind::InvalidArgument, "tie and below counts must be nonnegative");
  if (s + r > 2 * n - 2)
    throw Error(ErrorKind::InvalidArgument, "T-c1-bound: Sigma_{" + std::to_string(m) + "," + std::to_string(n) +
                                                "} admits at most 2n-2 = " + std::to_string(2 * n - 2) +
                                                " negative moduli at or below the positive one");
  const int d = m + n - 1;
  const int above = d - 1 - s - r;
  const int far = std::max(d - 2 * n, 0);  // roots pushed out to -c/eta

  const std::vector<int> above_mu = spec.above_multiplicities.empty() ? ones(above) : spec.above_multiplicities;
  const std::vector<int> below_mu = spec.below_multiplicities.empty() ? ones(r) : spec.below_multiplicities;
  if (sum(below_mu) != r || std::any_of(below_mu.begin(), below_mu.end(), [](int v) { return v < 1; }))
    throw Error(ErrorKind::InvalidArgument, "below multiplicities must be positive and sum to the below count");
  if (std::any_of(above_mu.begin(), above_mu.end(), [](int v) { return v < 1; }))
    throw Error(ErrorKind::InvalidArgument, "above multiplicities must be positive");

  // Split the above groups into the far cluster (prefix summing to d - 2n)
  // and the near cluster around -1 - eps*u.
  std::size_t far_groups = 0;
  if (d >= 2 * n) {
    if (!condition_a(above_mu, d, n, s, r))
      throw Error(ErrorKind::InvalidArgument, "multiplicity vector fails condition A; no construction attempted");
    int prefix = 0;
    while (prefix < far) prefix += above_mu[far_groups++];
  } else if (sum(above_mu) != above) {
    throw Error(ErrorKind::InvalidArgument, "above multiplicities must sum to d - 1 - s - r");
  }
  const std::vector<int> near_mu(above_mu.begin() + static_cast<std::ptrdiff_t>(far_groups), above_mu.end());
  const std::vector<int> far_mu(above_mu.begin(), above_mu.begin() + static_cast<std::ptrdiff_t>(far_groups));

  // Expected ordering by increasing modulus: below groups, the tie group at
  // modulus 1, near groups, far groups.
  std::vector<ModulusGroup> expected_groups;
  for (int v : below_mu) expected_groups.push_back({0, v});
  expected_groups.push_back({1, s});
  for (auto it = near_mu.rbegin(); it != near_mu.rend(); ++it) expected_groups.push_back({0, *it});
  for (auto it = far_mu.rbegin(); it != far_mu.rend(); ++it) expected_groups.push_back({0, *it});
  const ModulusOrdering expected(std::move(expected_groups));
  const SignPattern target = make_pattern(SigmaShape::one_change(m, n));
  // Degree-2n intermediate realizes Sigma_{n+1,n} when d >= 2n.
  const SignPattern inner_target = d >= 2 * n ? make_pattern(SigmaShape::one_change(n + 1, n)) : target;

  for (int u = 1; u <= 16; ++u) {
    for (int w = 1; w <= 16; ++w) {
      // Near group i (decreasing modulus) sits at -(1 + eps * near_off[g-1-i]).
      const auto near_off = spread(Rational(u), near_mu.size());
      const auto below_off = spread(Rational(w), below_mu.size());
      // First-order term of the middle coefficient: sum of outward shifts
      // minus sum of inward shifts must be positive.
      Rational drift(0);
      for (std::size_t i = 0; i < near_mu.size(); ++i) drift += Rational(near_mu[i]) * near_off[near_mu.size() - 1 - i];
      for (std::size_t i = 0; i < below_mu.size(); ++i) drift -= Rational(below_mu[i]) * below_off[below_mu.size() - 1 - i];
      if (d >= 2 * n && drift.sign() <= 0) continue;

      auto inner = halve_until(Rational(1, 2), [&](const Rational& eps) -> std::optional<SignedRootMultiset> {
        std::vector<Rational> pos{Rational(1)}, neg(static_cast<std::size_t>(s), Rational(-1));
        for (std::size_t i = 0; i < below_mu.size(); ++i) {
          // below group i (increasing modulus) uses the largest offset first.
          const Rational mod = Rational(1) - eps * below_off[below_mu.size() - 1 - i];
          if (mod.sign() <= 0) return std::nullopt;
          neg.insert(neg.end(), static_cast<std::size_t>(below_mu[i]), -mod);
        }
        for (std::size_t i = 0; i < near_mu.size(); ++i) {
          const Rational mod = Rational(1) + eps * near_off[near_mu.size() - 1 - i];
          neg.insert(neg.end(), static_cast<std::size_t>(near_mu[i]), -mod);
        }
        SignedRootMultiset roots(std::move(pos), std::move(neg));
        if (pattern_of(roots) != inner_target) return std::nullopt;
        return roots;
      });
      if (!inner) continue;

      auto full = halve_until(Rational(1, 2), [&](const Rational& eta) -> std::optional<SignedRootMultiset> {
        SignedRootMultiset roots = *inner;
        for (std::size_t j = 0; j < far_mu.size(); ++j) {
          // far group j (decreasing modulus) at modulus (g - j) / eta.
          const Rational mod = Rational(static_cast<long>(far_mu.size() - j)) / eta;
          roots = roots.with_root(-mod, far_mu[j]);
        }
        if (!realizes(roots, target, expected)) return std::nullopt;
        return roots;
      });
      if (full) return *std::move(full);
    }
  }
  throw Error(ErrorKind::SearchExhausted, "no verified parameters for the one-change construction");
}

NStarRange one_change_range(const SigmaShape& shape) {
  if (shape.kind != ShapeKind::OneChange) throw Error(ErrorKind::InvalidArgument, "one_change_range needs Sigma_{m,n}");
  const int d = shape.degree();
  return {std::max(0, 2 * shape.n - d - 1), std::min(2 * shape.n - 2, d - 1)};
}

SignedRootMultiset realize_one_change(const SigmaShape& shape, int n_star) {
  const NStarRange range = one_change_range(shape);
  if (!range.contains(n_star))
    throw Error(ErrorKind::InvalidArgument, std::string(shape.n <= shape.m ? "T-c1-bound" : "C-c1-bound") +
                                                ": n* = " + std::to_string(n_star) + " is outside [" +
                                                std::to_string(range.low) + ", " + std::to_string(range.high) +
                                                "] for Sigma_{" + shape.to_string() + "}");
  const int d = shape.degree();
  SignedRootMultiset roots = shape.n <= shape.m ? realize_c1_case(shape.m, shape.n, 0, n_star)
                                                : realize_c1_case(shape.n, shape.m, 0, d - 1 - n_star).reciprocal();
  std::string word(static_cast<std::size_t>(n_star), 'N');
  word.push_back('P');
  word.append(static_cast<std::size_t>(d - 1 - n_star), 'N');
  if (!realizes(roots, make_pattern(shape), ModulusOrdering::parse(word)))
    throw Error(ErrorKind::SearchExhausted, "one-change witness failed to verify");
  return roots;
}

MonicPolynomial realize_y_family(int s) {
  if (s < 2) throw Error(ErrorKind::InvalidArgument, "Y family needs s >= 2");
  std::vector<Rational> roots(static_cast<std::size_t>(s), Rational(-s));
  roots.insert(roots.end(), {Rational(1), Rational(1), Rational(-1)});
  return expand_from_roots(roots);
}

Rational y_family_closed_form(int s, int k) {
  if (s < 2) throw Error(ErrorKind::InvalidArgument, "Y family needs s >= 2");
  const Rational S(s);
  switch (k) {
    case 0: return S.pow(s);
    case 1: return Rational(0);
    case 2: return Rational(-1, 2) * Rational(3 * s + 1) * S.pow(s - 1);
    case 3: return Rational(-1, 3) * Rational(s - 1) * Rational(s + 1) * S.pow(s - 2);
    case 4: return Rational(1, 8) * Rational(s + 1) * Rational(3 * s * s + 3 * s - 2) * S.pow(s - 3);
    default: throw Error(ErrorKind::InvalidArgument, "closed form known only for k in 0..4");
  }
}

SignedRootMultiset multiply_linear_large(const SignedRootMultiset& roots, const Rational& eta) {
  if (eta.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "eta must be positive");
  const SignPattern base = sign_pattern_of(expand_from_roots(roots));
  std::vector<Sign> prefixed{Sign::Plus};
  prefixed.insert(prefixed.end(), base.signs().begin(), base.signs().end());
  const SignPattern target(std::move(prefixed));
  const Rational top = max_modulus(roots);
  auto found = halve_until(eta, [&](const Rational& e) -> std::optional<SignedRootMultiset> {
    const Rational mod = e.reciprocal();
    if (mod <= top) return std::nullopt;
    SignedRootMultiset out = roots.with_root(-mod);
    if (pattern_of(out) != target) return std::nullopt;
    return out;
  });
  if (!found) throw Error(ErrorKind::SearchExhausted, "eta search failed when adding a large root");
  return *std::move(found);
}

SignedRootMultiset split_root(const SignedRootMultiset& roots, const Rational& root, std::span<const Rational> offsets,
                              const std::optional<ModulusOrdering>& target) {
  if (root.is_zero()) throw Error(ErrorKind::InvalidArgument, "cannot split a zero root");
  const auto same = root.sign() > 0 ? roots.positive() : roots.negative();
  const auto available = std::count(same.begin(), same.end(), root);
  if (available < static_cast<std::ptrdiff_t>(offsets.size()))
    throw Error(ErrorKind::InvalidArgument, "root " + root.to_string() + " has multiplicity " +
                                                std::to_string(available) + " < " + std::to_string(offsets.size()));
  if (std::all_of(offsets.begin(), offsets.end(), [](const Rational& o) { return o.is_zero(); })) return roots;

  const SignPattern original = sign_pattern_of(expand_from_roots(roots));
  std::vector<Rational> rest;
  std::size_t skipped = 0;
  for (const auto& r : roots.by_modulus()) {
    if (r == root && skipped < offsets.size()) {
      ++skipped;
      continue;
    }
    rest.push_back(r);
  }
  auto found = halve_until(Rational(1), [&](const Rational& scale) -> std::optional<SignedRootMultiset> {
    std::vector<Rational> all = rest;
    for (const auto& o : offsets) {
      Rational moved = root + scale * o;
      if (moved.sign() != root.sign()) return std::nullopt;
      all.push_back(std::move(moved));
    }
    SignedRootMultiset out = SignedRootMultiset::from_roots(all);
    if (pattern_of(out) != original) return std::nullopt;
    if (target && ordering_of(out) != *target) return std::nullopt;
    return out;
  });
  if (!found) throw Error(ErrorKind::SearchExhausted, "offset scaling failed when splitting root " + root.to_string());
  return *std::move(found);
}

SignedRootMultiset realize_case_ii(int d, int n) {
  if (n != 2 && n != 3) throw Error(ErrorKind::InvalidArgument, "case ii exists only for n in {2, 3}");
  if ((n == 2 && d < 4) || (n == 3 && d < 5))
    throw Error(ErrorKind::InvalidArgument, "case ii construction needs d >= 4 (n = 2) or d >= 5 (n = 3)");
  const SignPattern target = make_pattern(SigmaShape::two_changes(d - n, n, 1));
  std::string word = "NPP";
  word.append(static_cast<std::size_t>(d - 3), 'N');
  const ModulusOrdering expected = ModulusOrdering::parse(word);

  SignedRootMultiset roots;
  if (n == 2) {
    // (x + 1)(x - 3/2)(x - 8/5) lifted by d - 3 ever larger negative roots.
    roots = SignedRootMultiset::from_roots(std::vector<Rational>{Rational(-1), Rational(3, 2), Rational(8, 5)});
    for (int i = 0; i < d - 3; ++i) roots = multiply_linear_large(roots, Rational(1, 2));
  } else {
    const int s = d - 3;
    const SignPattern shifted_target = make_pattern(SigmaShape::two_changes(s, 3, 1));
    // Shift the s-fold root of (x + s)^s (x - 1)^2 (x + 1) outward until the
    // vanishing x coefficient turns negative.
    auto base = halve_until(Rational(1, 2), [&](const Rational& shift) -> std::optional<SignedRootMultiset> {
      std::vector<Rational> rs(static_cast<std::size_t>(s), -(Rational(s) + shift));
      rs.insert(rs.end(), {Rational(1), Rational(1), Rational(-1)});
      SignedRootMultiset out = SignedRootMultiset::from_roots(rs);
      if (pattern_of(out) != shifted_target) return std::nullopt;
      return out;
    });
    if (!base) throw Error(ErrorKind::SearchExhausted, "shift search failed for the Y family");
    const Rational far_root = base->negative().back();
    // Bifurcate the double positive root above 1, then the s-fold root.
    const std::vector<Rational> up{Rational(1, 8), Rational(1, 4)};
    roots = split_root(*base, Rational(1), up);
    std::vector<Rational> spread_out;
    for (int i = 0; i < s; ++i) spread_out.push_back(Rational(-i, 8));
    roots = split_root(roots, far_root, spread_out, expected);
  }
  if (!realizes(roots, target, expected))
    throw Error(ErrorKind::SearchExhausted, "case ii witness failed to verify");
  return roots;
}

std::optional<SignedRootMultiset> realize_by_concatenation(const SigmaShape& shape, const ModulusOrdering& word) {
  if (shape.kind != ShapeKind::TwoChanges || !word.is_generic() || word.degree() != shape.degree() ||
      word.positive_count() != 2)
    return std::nullopt;
  const std::string letters = word.to_string();
  for (int n1 = 1; n1 <= shape.n; ++n1) {
    const int n2 = shape.n + 1 - n1;
    const SigmaShape upper = SigmaShape::one_change(shape.m, n1);
    const SigmaShape lower = SigmaShape::one_change(n2, shape.q);
    const auto d1 = static_cast<std::size_t>(upper.degree());
    const auto d2 = static_cast<std::size_t>(lower.degree());
    // Scaled second block holds the smallest moduli.
    const std::string low_word = letters.substr(0, d2);
    const std::string high_word = letters.substr(d2, d1);
    if (std::count(low_word.begin(), low_word.end(), 'P') != 1) continue;
    const int high_nstar = static_cast<int>(high_word.find('P'));
    const int low_nstar = static_cast<int>(low_word.find('P'));
    if (!one_change_range(upper).contains(high_nstar) || !one_change_range(lower).contains(low_nstar)) continue;
    const auto result =
        concatenate(realize_one_change(upper, high_nstar), realize_one_change(lower, low_nstar));
    if (realizes(result.roots, make_pattern(shape), word)) return result.roots;
  }
  return std::nullopt;
}

namespace {

SignedRootMultiset roots_of(std::initializer_list<const char*> text) {
  std::vector<Rational> rs;
  for (const char* t : text) rs.push_back(Rational::parse(t));
  return SignedRootMultiset::from_roots(rs);
}

/// Sigma_{2,3,1}, d = 5, words P + (arrangement of the positive root among
/// three negatives): split the triple root of (x - 0.1)(x - 1)(x + 1)^3.
std::optional<SignedRootMultiset> split_tied_quintic(const ModulusOrdering& word) {
  const std::string w = word.to_string();
  if (w.size() != 5 || w[0] != 'P') return std::nullopt;
  const auto below = static_cast<long>(w.find('P', 1)) - 1;  // negatives between beta and alpha
  std::vector<Rational> offsets;
  for (long i = 0; i < 3; ++i)
    offsets.push_back(i < below ? Rational(i + 1, 8) : Rational(-(i + 1), 8));  // +: modulus below 1
  const auto base = roots_of({"0.1", "1", "-1", "-1", "-1"});
  try {
    return split_root(base, Rational(-1), offsets, word);
  } catch (const Error&) {
    return std::nullopt;
  }
}

/// Sigma_{3,2,1}, d = 5: (1 + eps x) Q for the degree-4 Sigma_{2,2,1} examples.
std::optional<SignedRootMultiset> lift_quartic(const ModulusOrdering& word) {
  const std::vector<SignedRootMultiset> quartics = {
      roots_of({"0.995", "0.99", "-1", "-1.001"}),  // beta < alpha < g1 < g2
      roots_of({"1", "0.97", "-0.99", "-1.001"}),   // beta < g1 < alpha < g2
      roots_of({"4", "1", "-2.1", "-3"}),           // beta < g1 < g2 < alpha
      roots_of({"1.6", "1.5", "-1", "-100"}),       // g1 < beta < alpha < g2
  };
  for (const auto& q : quartics) {
    std::string expected = ordering_of(q).to_string() + "N";
    if (expected != word.to_string()) continue;
    return multiply_linear_large(q, Rational(1, 2));
  }
  return std::nullopt;
}

std::optional<SignedRootMultiset> construct_direct(const SignPattern& sp, const ModulusOrdering& word) {
  if (!word.is_generic() || word.degree() != sp.degree() || word.positive_count() != sp.changes())
    return std::nullopt;
  if (word == canonical_ordering(sp)) return realize_canonical(sp);
  const auto shape = try_shape_of(sp);
  if (!shape) return std::nullopt;
  if (shape->kind == ShapeKind::OneChange) {
    const std::string w = word.to_string();
    const int n_star = static_cast<int>(w.find('P'));
    if (one_change_range(*shape).contains(n_star)) return realize_one_change(*shape, n_star);
    return std::nullopt;
  }
  if (shape->kind != ShapeKind::TwoChanges) return std::nullopt;
  if (auto r = realize_by_concatenation(*shape, word)) return r;
  const int d = sp.degree();
  std::string case_ii = "NPP";
  case_ii.append(static_cast<std::size_t>(d - 3 > 0 ? d - 3 : 0), 'N');
  if (shape->q == 1 && word.to_string() == case_ii &&
      ((shape->n == 2 && d >= 4) || (shape->n == 3 && d >= 5)))
    return realize_case_ii(d, shape->n);
  if (*shape == SigmaShape::two_changes(2, 3, 1))
    if (auto r = split_tied_quintic(word)) return r;
  if (*shape == SigmaShape::two_changes(3, 2, 1))
    if (auto r = lift_quartic(word)) return r;
  return std::nullopt;
}

}  // namespace

std::optional<SignedRootMultiset> construct_witness(const SignPattern& sp, const ModulusOrdering& word) {
  std::optional<SignedRootMultiset> found = construct_direct(sp, word);
  if (!found) {
    if (auto mirrored = construct_direct(reverse_pattern(sp), reverse_ordering(word)))
      found = mirrored->reciprocal();
  }
  if (found && !realizes(*found, sp, word)) return std::nullopt;
  return found;
}

}  // namespace moduli
