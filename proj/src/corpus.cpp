#include "moduli/corpus.hpp"

#include <algorithm>
#include <sstream>

#include "moduli/construct.hpp"
#include "moduli/error.hpp"

namespace moduli {

namespace {

struct RawEntry {
  std::vector<std::string> roots;
  std::vector<std::string> coefficients;
  std::string pattern;
  std::string ordering;
};

// clang-format off
const std::vector<RawEntry> kRaw = {
    {{"-1", "-2"}, {"3", "2"}, "+++", "NN"},
    {{"-2", "1"}, {"1", "-2"}, "++-", "PN"},
    {{"1", "2"}, {"-3", "2"}, "+-+", "PP"},
    {{"-1", "2"}, {"-1", "-2"}, "+--", "NP"},
    {{"-1", "1.5", "1.6"}, {"-2.1", "-0.7", "2.4"}, "+--+", "NPP"},
    {{"-1", "1.5", "0.6"}, {"-1.1", "-1.2", "0.9"}, "+--+", "PNP"},
    {{"-1", "0.5", "0.6"}, {"-0.1", "-0.8", "0.3"}, "+--+", "PPN"},
    {{"-1", "0.2", "0.1"}, {"0.7", "-0.28", "0.02"}, "++-+", "PPN"},
    {{"-1", "-2", "0.1"}, {"2.9", "1.7", "-0.2"}, "+++-", "PNN"},
    {{"-1", "-2", "0.95"}, {"2.05", "-0.85", "-1.9"}, "++--", "PNN"},
    {{"-1", "-2", "1.5"}, {"1.5", "-2.5", "-3"}, "++--", "NPN"},
    {{"-1", "-2", "2.5"}, {"0.5", "-5.5", "-5"}, "++--", "NNP"},
    {{"1.2", "0.8", "-0.97", "-0.98"}, {"-0.05", "-1.9894", "-0.0292", "0.912576"}, "+---+", "PNNP"},
    {{"4", "1", "-2.1", "-3"}, {"0.1", "-15.2", "-11.1", "25.2"}, "++--+", "PNNP"},
    {{"0.995", "0.99", "-1", "-1.001"}, {"0.016", "-1.985935", "-0.01589995", "0.98603505"}, "++--+", "PPNN"},
    {{"1.6", "1.5", "-1", "-100"}, {"97.9", "-210.7", "-67.6", "240"}, "++--+", "NPPN"},
    {{"1", "0.97", "-0.99", "-1.001"}, {"0.021", "-1.96128", "-0.0209803", "0.9612603"}, "++--+", "PNPN"},
    {{"1", "1.05", "-1.08", "-1.09", "-1.1"}, {"1.22", "-2.0893", "-2.57819", "1.087824", "1.359666"}, "++--++", "PPNNN"},
    {{"1", "1.05", "-1.02", "-1.09", "-1.1"}, {"1.16", "-2.0977", "-2.443760", "1.097331", "1.284129"}, "++--++", "PNPNN"},
    {{"1", "1.05", "-1.02", "-1.04", "-1.1"}, {"1.11", "-2.1012", "-2.33506", "1.101036", "1.225224"}, "++--++", "PNNPN"},
    {{"1", "1.05", "-1.02", "-1.03", "-1.04"}, {"1.04", "-2.1019", "-2.187206", "1.1018508", "1.1472552"}, "++--++", "PNNNP"},
    {{"1", "1.05", "-0.99", "-1.09", "-1.1"}, {"1.13", "-2.1019", "-2.376545", "1.1020845", "1.2463605"}, "++--++", "NPPNN"},
    {{"1", "1.05", "-0.99", "-1.04", "-1.1"}, {"1.08", "-2.1039", "-2.26927", "1.103982", "1.189188"}, "++--++", "NPNPN"},
    {{"1", "-0.99", "-0.94", "-0.93", "-0.92", "-0.91", "0.9"}, {"2.79", "0.7855", "-4.244835", "-3.88785176", "0.8027291316", "2.102352335", "0.6521052938"}, "+++--+++", "PNNNNNP"},
    {{"1", "-1", "0.9", "-0.9", "-0.9", "-0.9", "-0.9"}, {"2.7", "0.62", "-4.158", "-3.5883", "0.86751", "1.9683", "0.59049"}, "+++--+++", "(PNNNN)(PN)"},
    {{"0.1", "1", "-1", "-1", "-1"}, {"1.9", "-0.2", "-2", "-0.8", "0.1"}, "++---+", "P(PNNN)"},
    {{"-1", "1", "1", "-2.1", "-2.1"}, {"3.2", "-0.79", "-7.61", "-0.21", "4.41"}, "++---+", "(PPN)(NN)"},
    {{"-1", "1.5", "1.6", "-100", "-1000"}, {"1097.9", "97689.3", "-2.107676e5", "-67360", "2.4e5"}, "+++--+", "NPPNN"},
};
// clang-format on

std::vector<Rational> parse_all(std::span<const std::string> text) {
  std::vector<Rational> out;
  for (const auto& t : text) out.push_back(Rational::parse(t));
  return out;
}

}  // namespace

std::string factored_name(std::span<const std::string> roots) {
  std::vector<std::pair<std::string, int>> counted;
  for (const auto& r : roots) {
    auto it = std::find_if(counted.begin(), counted.end(), [&](const auto& p) { return p.first == r; });
    if (it == counted.end()) {
      counted.emplace_back(r, 1);
    } else {
      ++it->second;
    }
  }
  std::string out;
  for (const auto& [r, k] : counted) {
    out += r.front() == '-' ? "(x+" + r.substr(1) + ")" : "(x-" + r + ")";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

const std::vector<CorpusEntry>& builtin_corpus() {
  static const std::vector<CorpusEntry> corpus = [] {
    std::vector<CorpusEntry> out;
    for (const auto& raw : kRaw)
      out.push_back({factored_name(raw.roots), raw.roots, raw.coefficients, raw.pattern, raw.ordering});
    return out;
  }();
  return corpus;
}

CorpusResult verify_entry(const CorpusEntry& entry) {
  CorpusResult result;
  result.name = entry.name;
  try {
    const auto roots = parse_all(entry.roots);
    const auto printed = parse_all(entry.coefficients);
    const MonicPolynomial p = expand_from_roots(roots);
    const int d = p.degree();
    if (static_cast<int>(printed.size()) != d)
      throw Error(ErrorKind::InvalidArgument, "expected " + std::to_string(d) + " printed coefficients, got " +
                                                  std::to_string(printed.size()));
    for (int i = 0; i < d; ++i) {
      const int power = d - 1 - i;
      const Rational exact = p.coefficient(power);
      if (exact != printed[static_cast<std::size_t>(i)])
        result.mismatches.push_back({power, entry.coefficients[static_cast<std::size_t>(i)], exact.to_string()});
    }
    const auto sp = try_sign_pattern_of(p);
    result.pattern = sp ? sp->to_string() : "degenerate";
    result.ordering = ordering_of(SignedRootMultiset::from_roots(roots)).to_string();
    result.pattern_ok = result.pattern == entry.pattern;
    result.ordering_ok = result.ordering == entry.ordering;
    result.passed = result.mismatches.empty() && result.pattern_ok && result.ordering_ok;
  } catch (const Error& e) {
    result.error = e.what();
    result.passed = false;
  }
  return result;
}

std::vector<CorpusResult> verify_corpus(std::span<const CorpusEntry> entries) {
  std::vector<CorpusResult> out;
  for (const auto& e : entries) out.push_back(verify_entry(e));
  return out;
}

std::vector<CorpusResult> verify_corpus() { return verify_corpus(builtin_corpus()); }

std::string format_corpus_report(std::span<const CorpusResult> results) {
  std::ostringstream os;
  for (const auto& r : results) {
    os << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.error.empty()) os << ": " << r.error;
    for (const auto& m : r.mismatches)
      os << ": x^" << m.power << " printed " << m.printed << " exact " << m.exact;
    if (r.error.empty() && !r.pattern_ok) os << ": pattern " << r.pattern;
    if (r.error.empty() && !r.ordering_ok) os << ": ordering " << r.ordering;
    os << '\n';
  }
  return os.str();
}

std::optional<SignedRootMultiset> corpus_witness(const SignPattern& pattern, const ModulusOrdering& word) {
  static const std::vector<SignedRootMultiset> root_sets = [] {
    std::vector<SignedRootMultiset> out;
    for (const auto& e : builtin_corpus()) out.push_back(SignedRootMultiset::from_roots(parse_all(e.roots)));
    return out;
  }();
  for (const auto& r : root_sets) {
    if (r.degree() != pattern.degree()) continue;
    for (const auto& candidate : {r, r.reciprocal(), r.negated(), r.negated().reciprocal()})
      if (realizes(candidate, pattern, word)) return candidate;
  }
  return std::nullopt;
}

}  // namespace moduli
