#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "moduli/classify.hpp"
#include "moduli/corpus.hpp"

namespace moduli {

inline constexpr std::string_view kEngineVersion = "moduli 1.0.0";
inline constexpr int kAtlasFormatVersion = 1;

struct Provenance {
  std::uint64_t seed = 1;
  long budget = 0;
  std::string engine_version{kEngineVersion};

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct AtlasDocument {
  int format_version = kAtlasFormatVersion;
  int degree = 0;
  std::vector<AtlasCell> cells;
  Provenance provenance;

  friend bool operator==(const AtlasDocument&, const AtlasDocument&) = default;
};

/// Pretty-printed JSON with a fixed key order, newline-terminated.
/// Witness roots are exact "n" / "n/d" strings in increasing modulus.
std::string serialize_json(const AtlasDocument& doc);
/// Throws Error(Parse) on malformed input.
AtlasDocument parse_atlas_json(std::string_view text);

/// Header "shape,word,status,citation,witness"; shape is quoted, witness
/// roots are joined by ';'. The witness source is not part of the CSV and
/// comes back empty.
std::string serialize_csv(std::span<const AtlasCell> cells);
std::vector<AtlasCell> parse_atlas_csv(std::string_view text);

/// Witness roots as exact strings, increasing modulus.
std::vector<std::string> witness_strings(const SignedRootMultiset& roots);

/// Corpus fixtures: a JSON array of {name, roots, coefficients, pattern, ordering}.
std::string serialize_corpus_json(std::span<const CorpusEntry> entries);
std::vector<CorpusEntry> parse_corpus_json(std::string_view text);

}  // namespace moduli
