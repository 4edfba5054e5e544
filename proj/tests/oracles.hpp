#pragma once

// Slow, independent reference computations used to check the library.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "moduli/rational.hpp"

namespace oracle {

using moduli::Rational;

/// e_k by summing over all k-subsets (bitmask enumeration).
inline Rational elementary(const std::vector<Rational>& v, int k) {
  Rational total(0);
  const unsigned n = static_cast<unsigned>(v.size());
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    Rational prod(1);
    for (unsigned i = 0; i < n; ++i)
      if (mask & (1U << i)) prod *= v[i];
    total += prod;
  }
  return total;
}

/// Coefficients of prod (x - r), low to high, through Vieta.
inline std::vector<Rational> expand(const std::vector<Rational>& roots) {
  const int d = static_cast<int>(roots.size());
  std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) {
    Rational e = elementary(roots, k);
    c[static_cast<std::size_t>(d - k)] = k % 2 ? -e : e;
  }
  return c;
}

/// "+-0" string from the leading coefficient down.
inline std::string signs(const std::vector<Rational>& low_to_high) {
  std::string s;
  for (auto it = low_to_high.rbegin(); it != low_to_high.rend(); ++it)
    s.push_back(it->sign() > 0 ? '+' : it->sign() < 0 ? '-' : '0');
  return s;
}

/// Ordering word: sort by modulus (positive first on ties), group equal moduli.
inline std::string word(std::vector<Rational> roots) {
  std::sort(roots.begin(), roots.end(), [](const Rational& a, const Rational& b) {
    if (a.abs() != b.abs()) return a.abs() < b.abs();
    return a.sign() > b.sign();
  });
  std::string out;
  std::size_t i = 0;
  while (i < roots.size()) {
    std::size_t j = i;
    std::string group;
    while (j < roots.size() && roots[j].abs() == roots[i].abs()) group.push_back(roots[j++].sign() > 0 ? 'P' : 'N');
    out += group.size() > 1 ? "(" + group + ")" : group;
    i = j;
  }
  return out;
}

inline int changes(const std::string& s) {
  int c = 0;
  for (std::size_t i = 1; i < s.size(); ++i) c += s[i] != s[i - 1];
  return c;
}

/// Random nonzero roots: `positives` positive and `negatives` negative, with
/// distinct moduli drawn from a mix of wide and clustered dyadic values.
inline std::vector<Rational> random_roots(std::mt19937_64& rng, int positives, int negatives) {
  std::vector<long> moduli;
  std::uniform_int_distribution<int> mode(0, 2);
  const int m = mode(rng);
  while (static_cast<int>(moduli.size()) < positives + negatives) {
    long v;
    if (m == 0) {
      std::uniform_int_distribution<long> wide(1, 1L << 20);
      v = wide(rng);
    } else if (m == 1) {
      std::uniform_int_distribution<long> near(-(1L << 11), 1L << 11);
      v = (1L << 16) + near(rng);
    } else {
      std::uniform_int_distribution<int> e(8, 22);
      const int ex = e(rng);
      std::uniform_int_distribution<long> n(1L << ex, (2L << ex) - 1);
      v = n(rng);
    }
    if (std::find(moduli.begin(), moduli.end(), v) == moduli.end()) moduli.push_back(v);
  }
  std::vector<Rational> out;
  for (int i = 0; i < positives + negatives; ++i)
    out.emplace_back(i < positives ? moduli[static_cast<std::size_t>(i)] : -moduli[static_cast<std::size_t>(i)],
                     1L << 16);
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

}  // namespace oracle
