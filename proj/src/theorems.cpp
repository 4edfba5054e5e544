#include <array>
#include <string>

#include "moduli/classify.hpp"
#include "moduli/error.hpp"

namespace moduli {

namespace {

struct TheoremInfo {
  TheoremId id;
  std::string_view tag;
  std::string_view note;
};

constexpr std::array<TheoremInfo, 9> kTheorems{{
    {TheoremId::OneChangeBound, "T-c1-bound",
     "one sign change with n <= m: at most 2n-2 negative moduli lie below the positive root"},
    {TheoremId::OneChangeBoundMirror, "C-c1-bound",
     "one sign change with m <= n: at most 2m-2 negative moduli lie above the positive root"},
    {TheoremId::OneLongOne, "T-1n1",
     "Sigma_{1,d-1,1} with d >= 4: every negative modulus lies between the two positive roots"},
    {TheoremId::LastBlockOnePart1, "T-mn1-part1",
     "Sigma_{m,n,1} with d >= 4: the smallest modulus is positive, or a single negative modulus lies below both "
     "positive roots and all others above them"},
    {TheoremId::LastBlockOnePart2, "T-mn1-part2",
     "Sigma_{m,n,1}: a negative modulus below both positive roots forces n = 2 or n = 3"},
    {TheoremId::LastBlockOneBis, "T-mn1bis",
     "Sigma_{m,n,1} with positive smallest modulus: at most 2m-1 negative moduli above both positive roots when "
     "m <= n, at most 2n-1 between them when n < m"},
    {TheoremId::MiddleBlockOne, "T-m1q",
     "Sigma_{m,1,q}: only the canonical order, m-1 negative moduli above and q-1 below the positive roots"},
    {TheoremId::Shape321, "P-321", "Sigma_{3,2,1}: the three negative moduli cannot all lie between the positive roots"},
    {TheoremId::MiddleBlockOneNoTie, "L-no-tie-m1q", "Sigma_{m,1,q}: no negative modulus equals a positive root"},
}};

const TheoremInfo& info(TheoremId id) {
  for (const auto& t : kTheorems)
    if (t.id == id) return t;
  throw Error(ErrorKind::InvalidArgument, "unknown theorem id");
}

std::string letters(char c, int count) { return std::string(static_cast<std::size_t>(std::max(count, 0)), c); }

std::optional<TheoremId> one_change_rule(int m, int n, const std::string& w) {
  const int n_star = static_cast<int>(w.find('P'));
  const int m_star = static_cast<int>(w.size()) - 1 - n_star;
  if (n <= m && n_star > 2 * n - 2) return TheoremId::OneChangeBound;
  if (m <= n && m_star > 2 * m - 2) return TheoremId::OneChangeBoundMirror;
  return std::nullopt;
}

// Each rule reads the word by increasing modulus for Sigma_{m,n,q}.
using Rule = std::optional<TheoremId> (*)(int m, int n, int q, const std::string& w);

std::optional<TheoremId> rule_m1q(int m, int n, int q, const std::string& w) {
  if (n != 1) return std::nullopt;
  if (w != letters('N', q - 1) + "PP" + letters('N', m - 1)) return TheoremId::MiddleBlockOne;
  return std::nullopt;
}

std::optional<TheoremId> rule_1n1(int m, int n, int q, const std::string& w) {
  const int d = m + n + q - 1;
  if (m != 1 || q != 1 || d < 4) return std::nullopt;
  if (w != "P" + letters('N', d - 2) + "P") return TheoremId::OneLongOne;
  return std::nullopt;
}

std::string lone_low_word(int d) { return "NPP" + letters('N', d - 3); }

std::optional<TheoremId> rule_part1(int m, int n, int q, const std::string& w) {
  const int d = m + n + q - 1;
  if (q != 1 || d < 4) return std::nullopt;
  if (w.front() != 'P' && w != lone_low_word(d)) return TheoremId::LastBlockOnePart1;
  return std::nullopt;
}

std::optional<TheoremId> rule_part2(int m, int n, int q, const std::string& w) {
  const int d = m + n + q - 1;
  if (q != 1 || d < 4) return std::nullopt;
  if (w == lone_low_word(d) && n != 2 && n != 3) return TheoremId::LastBlockOnePart2;
  return std::nullopt;
}

std::optional<TheoremId> rule_bis(int m, int n, int q, const std::string& w) {
  if (q != 1 || w.front() != 'P') return std::nullopt;
  const auto alpha = w.rfind('P');
  const int m_star = static_cast<int>(w.size() - 1 - alpha);
  const int n_star = static_cast<int>(alpha) - 1;
  if (m <= n && m_star > 2 * m - 1) return TheoremId::LastBlockOneBis;
  if (n < m && n_star > 2 * n - 1) return TheoremId::LastBlockOneBis;
  return std::nullopt;
}

std::optional<TheoremId> rule_321(int m, int n, int q, const std::string& w) {
  if (m == 3 && n == 2 && q == 1 && w == "PNNNP") return TheoremId::Shape321;
  return std::nullopt;
}

constexpr std::array<Rule, 6> kTwoChangeRules{rule_m1q, rule_1n1, rule_part1, rule_part2, rule_bis, rule_321};

}  // namespace

std::string_view theorem_tag(TheoremId id) { return info(id).tag; }

std::optional<TheoremId> parse_theorem_tag(std::string_view tag) {
  for (const auto& t : kTheorems)
    if (t.tag == tag) return t.id;
  return std::nullopt;
}

TheoremCitation cite(TheoremId id) { return {id, std::string(info(id).note)}; }

std::optional<TheoremCitation> forbidden_by_theorem(const SigmaShape& shape, const ModulusOrdering& word) {
  const int c = shape.changes();
  if (!word.is_generic()) throw Error(ErrorKind::InvalidArgument, "forbidden_by_theorem needs a generic word");
  if (word.degree() != shape.degree() || word.positive_count() != c)
    throw Error(ErrorKind::InvalidArgument, "word " + word.to_string() + " does not fit shape Sigma_{" +
                                                shape.to_string() + "}");
  const std::string w = word.to_string();
  if (c == 1) {
    if (auto id = one_change_rule(shape.m, shape.n, w)) return cite(*id);
    return std::nullopt;
  }
  if (c != 2) return std::nullopt;
  const std::string reversed(w.rbegin(), w.rend());
  for (Rule rule : kTwoChangeRules) {
    if (auto id = rule(shape.m, shape.n, shape.q, w)) return cite(*id);
    if (auto id = rule(shape.q, shape.n, shape.m, reversed)) return cite(*id);
  }
  return std::nullopt;
}

bool no_tie_check_m1q(const SignedRootMultiset& roots) {
  const auto shape = try_shape_of(sign_pattern_of(expand_from_roots(roots)));
  if (!shape || shape->kind != ShapeKind::TwoChanges || shape->n != 1)
    throw Error(ErrorKind::InvalidArgument, "no_tie_check_m1q needs roots realizing Sigma_{m,1,q}");
  for (const auto& p : roots.positive())
    for (const auto& g : roots.negative())
      if (-g == p) return false;
  return true;
}

}  // namespace moduli
