#include "moduli/descartes.hpp"

#include <charconv>

#include "moduli/error.hpp"

namespace moduli {

namespace {

Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    int value = 0;
    const auto* first = piece.data();
    const auto* last = piece.data() + piece.size();
    while (first != last && *first == ' ') ++first;
    while (last != first && *(last - 1) == ' ') --last;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (first == last || ec != std::errc() || ptr != last)
      throw Error(ErrorKind::Parse, "bad block list '" + std::string(text) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

SignPattern::SignPattern(std::vector<Sign> signs) : signs_(std::move(signs)) {
  if (signs_.empty()) throw Error(ErrorKind::InvalidArgument, "empty sign pattern");
  if (signs_.front() != Sign::Plus) throw Error(ErrorKind::InvalidArgument, "sign pattern must start with +");
}

SignPattern SignPattern::parse(std::string_view text) {
  std::vector<Sign> signs;
  bool degenerate = false;
  for (char ch : text) {
    switch (ch) {
      case '+': signs.push_back(Sign::Plus); break;
      case '-': signs.push_back(Sign::Minus); break;
      case '0': degenerate = true; break;
      default: throw Error(ErrorKind::Parse, "bad character in sign pattern '" + std::string(text) + "'");
    }
  }
  if (text.empty()) throw Error(ErrorKind::Parse, "empty sign pattern");
  if (text.front() == '-') throw Error(ErrorKind::Parse, "sign pattern must start with +: '" + std::string(text) + "'");
  if (degenerate) throw Error(ErrorKind::DegeneratePattern, "degenerate pattern: zero coefficient in '" + std::string(text) + "'");
  if (signs.size() < 2) throw Error(ErrorKind::Parse, "sign pattern needs degree >= 1");
  return SignPattern(std::move(signs));
}

int SignPattern::changes() const {
  int c = 0;
  for (std::size_t i = 1; i < signs_.size(); ++i) c += signs_[i] != signs_[i - 1];
  return c;
}

std::vector<int> SignPattern::blocks() const {
  std::vector<int> out{1};
  for (std::size_t i = 1; i < signs_.size(); ++i) {
    if (signs_[i] == signs_[i - 1]) {
      ++out.back();
    } else {
      out.push_back(1);
    }
  }
  return out;
}

std::string SignPattern::to_string() const {
  std::string s;
  for (Sign x : signs_) s.push_back(x == Sign::Plus ? '+' : '-');
  return s;
}

SignCounts counts(const SignPattern& sp) { return {sp.changes(), sp.preservations()}; }

SigmaShape SigmaShape::all_plus(int degree) {
  if (degree < 1) throw Error(ErrorKind::InvalidArgument, "degree must be >= 1");
  return {ShapeKind::AllPlus, degree + 1, 0, 0};
}

SigmaShape SigmaShape::one_change(int m, int n) {
  if (m < 1 || n < 1) throw Error(ErrorKind::InvalidArgument, "block lengths must be positive");
  return {ShapeKind::OneChange, m, n, 0};
}

SigmaShape SigmaShape::two_changes(int m, int n, int q) {
  if (m < 1 || n < 1 || q < 1) throw Error(ErrorKind::InvalidArgument, "block lengths must be positive");
  return {ShapeKind::TwoChanges, m, n, q};
}

SigmaShape SigmaShape::parse(std::string_view text) {
  const auto v = parse_int_list(text);
  for (int b : v)
    if (b < 1) throw Error(ErrorKind::Parse, "block lengths must be positive: '" + std::string(text) + "'");
  switch (v.size()) {
    case 1:
      if (v[0] < 2) throw Error(ErrorKind::Parse, "all-plus shape needs length >= 2");
      return all_plus(v[0] - 1);
    case 2: return one_change(v[0], v[1]);
    case 3: return two_changes(v[0], v[1], v[2]);
    default: throw Error(ErrorKind::UnsupportedShape, "unsupported shape: more than two sign changes in '" + std::string(text) + "'");
  }
}

int SigmaShape::changes() const {
  switch (kind) {
    case ShapeKind::AllPlus: return 0;
    case ShapeKind::OneChange: return 1;
    case ShapeKind::TwoChanges: return 2;
  }
  return 0;
}

std::string SigmaShape::to_string() const {
  switch (kind) {
    case ShapeKind::AllPlus: return std::to_string(m);
    case ShapeKind::OneChange: return std::to_string(m) + "," + std::to_string(n);
    case ShapeKind::TwoChanges: return std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(q);
  }
  return {};
}

SignPattern pattern_from_blocks(std::string_view text) {
  const auto v = parse_int_list(text);
  std::vector<Sign> signs;
  Sign current = Sign::Plus;
  for (int b : v) {
    if (b < 1) throw Error(ErrorKind::Parse, "block lengths must be positive: '" + std::string(text) + "'");
    signs.insert(signs.end(), static_cast<std::size_t>(b), current);
    current = flip(current);
  }
  if (signs.size() < 2) throw Error(ErrorKind::Parse, "pattern needs degree >= 1: '" + std::string(text) + "'");
  return SignPattern(std::move(signs));
}

std::string blocks_string(const SignPattern& sp) {
  std::string out;
  for (int b : sp.blocks()) {
    if (!out.empty()) out.push_back(',');
    out += std::to_string(b);
  }
  return out;
}

std::optional<SignPattern> try_sign_pattern_of(const MonicPolynomial& p) {
  std::vector<Sign> signs{Sign::Plus};
  for (int k = p.degree() - 1; k >= 0; --k) {
    const int s = p.coefficient(k).sign();
    if (s == 0) return std::nullopt;
    signs.push_back(s > 0 ? Sign::Plus : Sign::Minus);
  }
  return SignPattern(std::move(signs));
}

SignPattern sign_pattern_of(const MonicPolynomial& p) {
  if (auto sp = try_sign_pattern_of(p)) return *std::move(sp);
  throw Error(ErrorKind::DegeneratePattern, "degenerate pattern: zero coefficient in " + p.to_string());
}

std::optional<SigmaShape> try_shape_of(const SignPattern& sp) {
  const auto b = sp.blocks();
  switch (b.size()) {
    case 1: return SigmaShape::all_plus(sp.degree());
    case 2: return SigmaShape::one_change(b[0], b[1]);
    case 3: return SigmaShape::two_changes(b[0], b[1], b[2]);
    default: return std::nullopt;
  }
}

SigmaShape shape_of(const SignPattern& sp) {
  if (auto s = try_shape_of(sp)) return *s;
  throw Error(ErrorKind::UnsupportedShape, "unsupported shape: " + sp.to_string() + " has " +
                                               std::to_string(sp.changes()) + " sign changes");
}

SignPattern make_pattern(const SigmaShape& shape) {
  std::vector<Sign> signs(static_cast<std::size_t>(shape.m), Sign::Plus);
  signs.insert(signs.end(), static_cast<std::size_t>(shape.n), Sign::Minus);
  signs.insert(signs.end(), static_cast<std::size_t>(shape.q), Sign::Plus);
  return SignPattern(std::move(signs));
}

SignPattern reverse_pattern(const SignPattern& sp) {
  std::vector<Sign> signs(sp.signs().rbegin(), sp.signs().rend());
  if (signs.front() == Sign::Minus)
    for (auto& s : signs) s = flip(s);
  return SignPattern(std::move(signs));
}

SigmaShape reverse_shape(const SigmaShape& shape) { return shape_of(reverse_pattern(make_pattern(shape))); }

SignPattern negate_pattern(const SignPattern& sp) {
  std::vector<Sign> signs = sp.signs();
  for (std::size_t k = 1; k < signs.size(); k += 2) signs[k] = flip(signs[k]);
  return SignPattern(std::move(signs));
}

bool descartes_verify(const SignedRootMultiset& roots) {
  const SignPattern sp = sign_pattern_of(expand_from_roots(roots));
  const auto c = counts(sp);
  return c.changes == roots.positive_count() && c.preservations == roots.negative_count();
}

std::vector<SigmaShape> shapes_with_changes(int degree, int changes) {
  std::vector<SigmaShape> out;
  const int len = degree + 1;
  switch (changes) {
    case 0: out.push_back(SigmaShape::all_plus(degree)); break;
    case 1:
      for (int m = 1; m < len; ++m) out.push_back(SigmaShape::one_change(m, len - m));
      break;
    case 2:
      for (int m = 1; m < len; ++m)
        for (int n = 1; m + n < len; ++n) out.push_back(SigmaShape::two_changes(m, n, len - m - n));
      break;
    default: throw Error(ErrorKind::UnsupportedShape, "unsupported shape: only c <= 2 has a block shape");
  }
  return out;
}

}  // namespace moduli
