#pragma once

// Realizable generic words per shape for d <= 5 and c <= 2, written out by
// hand as an oracle independent of the classifier.

#include <algorithm>
#include <set>
#include <string>

#include "moduli/descartes.hpp"
#include "moduli/ordering.hpp"

namespace oracle {

inline std::string reversed(std::string s) {
  std::reverse(s.begin(), s.end());
  return s;
}

/// Expected realizable words for a shape of degree <= 5.
inline std::set<std::string> expected_realizable(const moduli::SigmaShape& shape) {
  using moduli::ShapeKind;
  const int d = shape.degree();
  if (shape.kind == ShapeKind::AllPlus) return {std::string(static_cast<std::size_t>(d), 'N')};
  if (shape.kind == ShapeKind::OneChange) {
    const int n = std::min(shape.m, shape.n);
    const int lo = std::max(0, 2 * n - d - 1), hi = std::min(2 * n - 2, d - 1);
    // n* counts N letters below P; for n > m the word is read from the top.
    std::set<std::string> out;
    for (int k = lo; k <= hi; ++k) {
      std::string w = std::string(static_cast<std::size_t>(k), 'N') + "P" +
                      std::string(static_cast<std::size_t>(d - 1 - k), 'N');
      out.insert(shape.n > shape.m ? reversed(w) : w);
    }
    return out;
  }
  const int m = shape.m, n = shape.n, q = shape.q;
  if (d == 3 && n == 2) return {"PPN", "PNP", "NPP"};
  if (n == 1 || (m == 1 && q == 1 && d >= 4)) return {moduli::canonical_ordering(moduli::make_pattern(shape)).to_string()};
  auto mirror = [](std::set<std::string> s) {
    std::set<std::string> out;
    for (const auto& w : s) out.insert(reversed(w));
    return out;
  };
  const std::set<std::string> s221{"PPNN", "PNPN", "PNNP", "NPPN"};
  const std::set<std::string> s231{"PPNNN", "PNPNN", "PNNPN", "PNNNP", "NPPNN"};
  const std::set<std::string> s321{"PPNNN", "PNPNN", "PNNPN", "NPPNN"};
  if (m == 2 && n == 2 && q == 1) return s221;
  if (m == 1 && n == 2 && q == 2) return mirror(s221);
  if (m == 2 && n == 3 && q == 1) return s231;
  if (m == 1 && n == 3 && q == 2) return mirror(s231);
  if (m == 3 && n == 2 && q == 1) return s321;
  if (m == 1 && n == 2 && q == 3) return mirror(s321);
  if (m == 2 && n == 2 && q == 2) {
    std::set<std::string> all;
    for (const auto& w : moduli::enumerate_generic(5, 2)) all.insert(w.to_string());
    return all;
  }
  return {};
}

}  // namespace oracle
