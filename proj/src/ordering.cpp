#include "moduli/ordering.hpp"

#include <algorithm>

#include "moduli/error.hpp"

namespace moduli {

ModulusOrdering::ModulusOrdering(std::vector<ModulusGroup> groups) : groups_(std::move(groups)) {
  for (const auto& g : groups_)
    if (g.positives < 0 || g.negatives < 0 || g.size() < 1)
      throw Error(ErrorKind::InvalidArgument, "modulus group must hold at least one root");
}

ModulusOrdering ModulusOrdering::parse(std::string_view word) {
  std::vector<ModulusGroup> groups;
  bool in_group = false;
  ModulusGroup current;
  for (char ch : word) {
    switch (ch) {
      case 'P':
      case 'N': {
        ModulusGroup& target = in_group ? current : groups.emplace_back();
        (ch == 'P' ? target.positives : target.negatives) += 1;
        break;
      }
      case '(':
        if (in_group) throw Error(ErrorKind::Parse, "nested group in ordering '" + std::string(word) + "'");
        in_group = true;
        current = {};
        break;
      case ')':
        if (!in_group || current.size() == 0)
          throw Error(ErrorKind::Parse, "unbalanced or empty group in ordering '" + std::string(word) + "'");
        groups.push_back(current);
        in_group = false;
        break;
      default: throw Error(ErrorKind::Parse, "bad character in ordering '" + std::string(word) + "'");
    }
  }
  if (in_group) throw Error(ErrorKind::Parse, "unterminated group in ordering '" + std::string(word) + "'");
  if (groups.empty()) throw Error(ErrorKind::Parse, "empty ordering");
  return ModulusOrdering(std::move(groups));
}

int ModulusOrdering::degree() const { return positive_count() + negative_count(); }

int ModulusOrdering::positive_count() const {
  int n = 0;
  for (const auto& g : groups_) n += g.positives;
  return n;
}

int ModulusOrdering::negative_count() const {
  int n = 0;
  for (const auto& g : groups_) n += g.negatives;
  return n;
}

bool ModulusOrdering::is_generic() const {
  return std::all_of(groups_.begin(), groups_.end(), [](const ModulusGroup& g) { return g.size() == 1; });
}

std::string ModulusOrdering::to_string() const {
  std::string s;
  for (const auto& g : groups_) {
    const bool tied = g.size() > 1;
    if (tied) s.push_back('(');
    s.append(static_cast<std::size_t>(g.positives), 'P');
    s.append(static_cast<std::size_t>(g.negatives), 'N');
    if (tied) s.push_back(')');
  }
  return s;
}

ModulusOrdering ordering_of(const SignedRootMultiset& roots) {
  std::vector<ModulusGroup> groups;
  Rational last(0);
  for (const auto& r : roots.by_modulus()) {
    const Rational mod = r.abs();
    if (groups.empty() || mod != last) {
      groups.emplace_back();
      last = mod;
    }
    (r.sign() > 0 ? groups.back().positives : groups.back().negatives) += 1;
  }
  return ModulusOrdering(std::move(groups));
}

OrderingStats stats_of(const ModulusOrdering& o, int changes) {
  if (changes != 1 && changes != 2) throw Error(ErrorKind::InvalidArgument, "ordering statistics need c in {1, 2}");
  if (o.positive_count() != changes)
    throw Error(ErrorKind::InvalidArgument, "ordering " + o.to_string() + " does not hold " + std::to_string(changes) +
                                                " positive moduli");
  const auto& groups = o.groups();
  // Index of the group holding the smallest (beta) and largest (alpha) positive modulus.
  std::size_t beta = groups.size(), alpha = 0;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (groups[i].positives > 0) {
      beta = std::min(beta, i);
      alpha = i;
    }
  }
  OrderingStats st;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const int neg = groups[i].negatives;
    if (i > alpha) st.m_star += neg;
    if (changes == 2 && i > beta && i < alpha) st.n_star += neg;
    if (i < beta) (changes == 2 ? st.q_star : st.n_star) += neg;
  }
  st.tie_alpha = groups[alpha].negatives > 0;
  st.tie_beta = changes == 2 && groups[beta].negatives > 0;
  return st;
}

ModulusOrdering canonical_ordering(const SignPattern& sp) {
  // Left-to-right pairs give the decreasing order of moduli.
  std::vector<ModulusGroup> decreasing;
  for (std::size_t i = 1; i < sp.signs().size(); ++i) {
    const bool change = sp[i] != sp[i - 1];
    decreasing.push_back(change ? ModulusGroup{1, 0} : ModulusGroup{0, 1});
  }
  std::reverse(decreasing.begin(), decreasing.end());
  return ModulusOrdering(std::move(decreasing));
}

std::vector<ModulusOrdering> enumerate_generic(int degree, int changes) {
  if (degree < 1 || changes < 0 || changes > degree)
    throw Error(ErrorKind::InvalidArgument, "enumerate_generic needs 0 <= c <= d, d >= 1");
  std::string word(static_cast<std::size_t>(changes), 'P');
  word.append(static_cast<std::size_t>(degree - changes), 'N');
  // In ASCII 'N' < 'P', so P...PN...N is the last permutation; walking
  // backward gives lexicographic order with P before N.
  std::vector<ModulusOrdering> out;
  do {
    out.push_back(ModulusOrdering::parse(word));
  } while (std::prev_permutation(word.begin(), word.end()));
  return out;
}

ModulusOrdering reverse_ordering(const ModulusOrdering& o) {
  std::vector<ModulusGroup> g(o.groups().rbegin(), o.groups().rend());
  return ModulusOrdering(std::move(g));
}

ModulusOrdering negate_ordering(const ModulusOrdering& o) {
  std::vector<ModulusGroup> g;
  for (const auto& x : o.groups()) g.push_back({x.negatives, x.positives});
  return ModulusOrdering(std::move(g));
}

}  // namespace moduli
