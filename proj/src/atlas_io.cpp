#include "moduli/atlas_io.hpp"

#include <sstream>

#include "json.hpp"
#include "moduli/error.hpp"

namespace moduli {

namespace {

using json = nlohmann::ordered_json;

CellStatus parse_status(const std::string& s) {
  if (s == "realizable") return CellStatus::Realizable;
  if (s == "forbidden") return CellStatus::Forbidden;
  if (s == "unknown") return CellStatus::Unknown;
  throw Error(ErrorKind::Parse, "unknown cell status '" + s + "'");
}

WitnessSource parse_source(const std::string& s) {
  if (s == "corpus") return WitnessSource::Corpus;
  if (s == "constructed") return WitnessSource::Constructed;
  if (s == "searched") return WitnessSource::Searched;
  throw Error(ErrorKind::Parse, "unknown witness source '" + s + "'");
}

TheoremCitation parse_citation(const std::string& tag) {
  const auto id = parse_theorem_tag(tag);
  if (!id) throw Error(ErrorKind::Parse, "unknown theorem tag '" + tag + "'");
  return cite(*id);
}

SignedRootMultiset parse_witness(const std::vector<std::string>& roots) {
  std::vector<Rational> rs;
  for (const auto& r : roots) rs.push_back(Rational::parse(r));
  return SignedRootMultiset::from_roots(rs);
}

json cell_json(const AtlasCell& cell) {
  json j;
  j["shape"] = blocks_string(cell.pattern);
  j["word"] = cell.word.to_string();
  j["status"] = std::string(status_name(cell.status));
  j["source"] = cell.source ? json(std::string(source_name(*cell.source))) : json(nullptr);
  j["citation"] = cell.citation ? json(std::string(cell.citation->tag())) : json(nullptr);
  j["witness"] = cell.witness ? json(witness_strings(*cell.witness)) : json(nullptr);
  return j;
}

AtlasCell cell_from_json(const json& j) {
  AtlasCell cell;
  cell.pattern = pattern_from_blocks(j.at("shape").get<std::string>());
  cell.word = ModulusOrdering::parse(j.at("word").get<std::string>());
  cell.status = parse_status(j.at("status").get<std::string>());
  if (!j.at("source").is_null()) cell.source = parse_source(j.at("source").get<std::string>());
  if (!j.at("citation").is_null()) cell.citation = parse_citation(j.at("citation").get<std::string>());
  if (!j.at("witness").is_null()) cell.witness = parse_witness(j.at("witness").get<std::vector<std::string>>());
  return cell;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out.push_back('"');
    out.push_back(ch);
  }
  return out + "\"";
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back().push_back('"');
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        fields.back().push_back(ch);
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.emplace_back();
    } else {
      fields.back().push_back(ch);
    }
  }
  if (quoted) throw Error(ErrorKind::Parse, "unterminated quote in CSV line");
  return fields;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

}  // namespace

std::vector<std::string> witness_strings(const SignedRootMultiset& roots) {
  std::vector<std::string> out;
  for (const auto& r : roots.by_modulus()) out.push_back(r.to_string());
  return out;
}

std::string serialize_json(const AtlasDocument& doc) {
  json j;
  j["format_version"] = doc.format_version;
  j["degree"] = doc.degree;
  j["provenance"] = {{"seed", doc.provenance.seed},
                     {"budget", doc.provenance.budget},
                     {"engine_version", doc.provenance.engine_version}};
  json cells = json::array();
  for (const auto& c : doc.cells) cells.push_back(cell_json(c));
  j["cells"] = std::move(cells);
  return j.dump(2) + "\n";
}

AtlasDocument parse_atlas_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    AtlasDocument doc;
    doc.format_version = j.at("format_version").get<int>();
    if (doc.format_version != kAtlasFormatVersion)
      throw Error(ErrorKind::Parse, "unsupported atlas format version " + std::to_string(doc.format_version));
    doc.degree = j.at("degree").get<int>();
    const json& p = j.at("provenance");
    doc.provenance.seed = p.at("seed").get<std::uint64_t>();
    doc.provenance.budget = p.at("budget").get<long>();
    doc.provenance.engine_version = p.at("engine_version").get<std::string>();
    for (const auto& c : j.at("cells")) doc.cells.push_back(cell_from_json(c));
    return doc;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("malformed atlas JSON: ") + e.what());
  }
}

std::string serialize_csv(std::span<const AtlasCell> cells) {
  std::string out = "shape,word,status,citation,witness\n";
  for (const auto& c : cells) {
    std::string witness;
    if (c.witness)
      for (const auto& r : witness_strings(*c.witness)) witness += (witness.empty() ? "" : ";") + r;
    out += csv_field(blocks_string(c.pattern)) + "," + csv_field(c.word.to_string()) + "," +
           std::string(status_name(c.status)) + "," + (c.citation ? std::string(c.citation->tag()) : "") + "," +
           csv_field(witness) + "\n";
  }
  return out;
}

std::vector<AtlasCell> parse_atlas_csv(std::string_view text) {
  std::vector<AtlasCell> cells;
  std::istringstream is{std::string(text)};
  std::string line;
  if (!std::getline(is, line) || line != "shape,word,status,citation,witness")
    throw Error(ErrorKind::Parse, "missing CSV header");
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 5) throw Error(ErrorKind::Parse, "CSV row needs 5 fields: '" + line + "'");
    AtlasCell cell;
    cell.pattern = pattern_from_blocks(f[0]);
    cell.word = ModulusOrdering::parse(f[1]);
    cell.status = parse_status(f[2]);
    if (!f[3].empty()) cell.citation = parse_citation(f[3]);
    if (!f[4].empty()) cell.witness = parse_witness(split(f[4], ';'));
    cells.push_back(std::move(cell));
  }
  return cells;
}

std::string serialize_corpus_json(std::span<const CorpusEntry> entries) {
  json arr = json::array();
  for (const auto& e : entries)
    arr.push_back({{"name", e.name},
                   {"roots", e.roots},
                   {"coefficients", e.coefficients},
                   {"pattern", e.pattern},
                   {"ordering", e.ordering}});
  return arr.dump(2) + "\n";
}

std::vector<CorpusEntry> parse_corpus_json(std::string_view text) {
  try {
    std::vector<CorpusEntry> out;
    for (const auto& e : json::parse(text))
      out.push_back({e.at("name").get<std::string>(), e.at("roots").get<std::vector<std::string>>(),
                     e.at("coefficients").get<std::vector<std::string>>(), e.at("pattern").get<std::string>(),
                     e.at("ordering").get<std::string>()});
    return out;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("malformed corpus JSON: ") + e.what());
  }
}

}  // namespace moduli
