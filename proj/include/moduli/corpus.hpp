#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "moduli/descartes.hpp"
#include "moduli/ordering.hpp"
#include "moduli/roots.hpp"

namespace moduli {

/// A published polynomial: its roots, its coefficients exactly as printed
/// (x^{d-1} down to x^0, leading 1 omitted), its sign pattern and modulus
/// ordering. Numbers are decimal strings read exactly.
struct CorpusEntry {
  std::string name;
  std::vector<std::string> roots;
  std::vector<std::string> coefficients;
  std::string pattern;
  std::string ordering;
};

/// The built-in corpus, 28 entries.
const std::vector<CorpusEntry>& builtin_corpus();

/// Factored form, e.g. "(x+1)(x-1.5)(x-1.6)"; repeated roots use powers.
std::string factored_name(std::span<const std::string> roots);

struct CoefficientMismatch {
  int power = 0;
  std::string printed;
  std::string exact;
};

struct CorpusResult {
  std::string name;
  bool passed = false;
  std::vector<CoefficientMismatch> mismatches;
  std::string pattern;   // found
  std::string ordering;  // found
  bool pattern_ok = false;
  bool ordering_ok = false;
  std::string error;     // parse or degeneracy problem
};

CorpusResult verify_entry(const CorpusEntry& entry);
std::vector<CorpusResult> verify_corpus(std::span<const CorpusEntry> entries);
std::vector<CorpusResult> verify_corpus();

/// Plain text, one line per entry: "PASS name" or "FAIL name: ...".
std::string format_corpus_report(std::span<const CorpusResult> results);

/// A corpus root set (possibly reverted, negated, or both) realizing the
/// cell, if any.
std::optional<SignedRootMultiset> corpus_witness(const SignPattern& pattern, const ModulusOrdering& word);

}  // namespace moduli
