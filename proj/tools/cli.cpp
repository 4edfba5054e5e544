#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "moduli/atlas_io.hpp"
#include "moduli/classify.hpp"
#include "moduli/construct.hpp"
#include "moduli/corpus.hpp"
#include "moduli/error.hpp"

namespace moduli::cli {

namespace {

using json = nlohmann::ordered_json;

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::DegeneratePattern: return kDegenerate;
    case ErrorKind::SearchExhausted: return kUnknown;
    case ErrorKind::Parse:
    case ErrorKind::InvalidArgument:
    case ErrorKind::UnsupportedShape: return kParseError;
  }
  return kParseError;
}

class IoFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoFailure("cannot write " + path);
  out << content;
  out.flush();
  if (!out) throw IoFailure("write failed for " + path);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, ',')) {
    const auto b = cur.find_first_not_of(' ');
    const auto e = cur.find_last_not_of(' ');
    if (b == std::string::npos) throw Error(ErrorKind::Parse, "empty entry in list '" + text + "'");
    out.push_back(cur.substr(b, e - b + 1));
  }
  if (out.empty()) throw Error(ErrorKind::Parse, "empty list");
  return out;
}

SignPattern pattern_from_flags(const std::string& pattern, const std::string& shape) {
  if (!pattern.empty() && !shape.empty()) throw Error(ErrorKind::Parse, "give either --pattern or --shape, not both");
  if (!pattern.empty()) return SignPattern::parse(pattern);
  if (!shape.empty()) return pattern_from_blocks(shape);
  throw Error(ErrorKind::Parse, "one of --pattern or --shape is required");
}

long resolve_budget(std::optional<long> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("MODULI_ATLAS_BUDGET")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return v;
    throw Error(ErrorKind::Parse, "MODULI_ATLAS_BUDGET must be a positive integer");
  }
  return kDefaultBudget;
}

json string_array(const std::vector<std::string>& v) { return json(v); }

json witness_json(const SignPattern& pattern, const SignedRootMultiset& roots) {
  const MonicPolynomial p = expand_from_roots(roots);
  std::vector<std::string> coeffs;
  for (int k = p.degree(); k >= 0; --k) coeffs.push_back(p.coefficient(k).to_string());
  json j;
  j["pattern"] = pattern.to_string();
  j["shape"] = blocks_string(pattern);
  j["ordering"] = ordering_of(roots).to_string();
  j["roots"] = string_array(witness_strings(roots));
  j["coefficients"] = string_array(coeffs);
  return j;
}

std::string describe(const AtlasCell& cell) {
  std::string s = "shape " + blocks_string(cell.pattern) + " word " + cell.word.to_string() + ": " +
                  std::string(status_name(cell.status));
  if (cell.source) s += " (" + std::string(source_name(*cell.source)) + ")";
  if (cell.citation) s += " [" + std::string(cell.citation->tag()) + "] " + cell.citation->note;
  return s;
}

int status_exit(CellStatus s) {
  switch (s) {
    case CellStatus::Realizable: return kOk;
    case CellStatus::Forbidden: return kForbidden;
    case CellStatus::Unknown: return kUnknown;
  }
  return kUnknown;
}

struct Flags {
  std::string pattern;
  std::string shape;
  std::string ordering;
  std::string out_path;
  std::string format = "json";
  std::string roots;
  std::string corpus_path;
  std::string export_path;
  std::optional<long> budget;
  std::uint64_t seed = 1;
  int degree = 0;
  std::vector<int> changes;
  unsigned threads = 0;
};

int cmd_realize(const Flags& f, std::ostream& out) {
  const SignPattern sp = pattern_from_flags(f.pattern, f.shape);
  json j;
  if (f.ordering.empty()) {
    const SignedRootMultiset roots = realize_canonical(sp);
    j = witness_json(sp, roots);
    j["source"] = "canonical";
  } else {
    AtlasOptions opt;
    opt.seed = f.seed;
    opt.budget = resolve_budget(f.budget);
    const AtlasCell cell = classify_cell(sp, ModulusOrdering::parse(f.ordering), opt);
    if (cell.status != CellStatus::Realizable) {
      out << describe(cell) << '\n';
      return status_exit(cell.status);
    }
    j = witness_json(sp, *cell.witness);
    j["source"] = std::string(source_name(*cell.source));
  }
  out << j.dump(2) << '\n';
  return kOk;
}

int cmd_classify(const Flags& f, std::ostream& out) {
  const SignPattern sp = pattern_from_flags(f.pattern, f.shape);
  const ModulusOrdering word = ModulusOrdering::parse(f.ordering);
  AtlasOptions opt;
  opt.seed = f.seed;
  opt.budget = resolve_budget(f.budget);
  const AtlasCell cell = classify_cell(sp, word, opt);
  out << describe(cell) << '\n';
  if (cell.witness) {
    out << "witness:";
    for (const auto& r : witness_strings(*cell.witness)) out << ' ' << r;
    out << '\n';
  }
  return status_exit(cell.status);
}

int cmd_atlas(const Flags& f, std::ostream& out) {
  if (f.degree < 1 || f.degree > kMaxAtlasDegree)
    throw Error(ErrorKind::InvalidArgument, "--degree must be in 1.." + std::to_string(kMaxAtlasDegree));
  if (f.format != "json" && f.format != "csv") throw Error(ErrorKind::Parse, "--format must be json or csv");
  std::vector<int> changes = f.changes.empty() ? std::vector<int>{0, 1, 2} : f.changes;
  AtlasOptions opt;
  opt.seed = f.seed;
  opt.budget = resolve_budget(f.budget);
  opt.threads = f.threads;
  AtlasDocument doc;
  doc.degree = f.degree;
  doc.cells = build_atlas(f.degree, changes, opt);
  doc.provenance = {opt.seed, opt.budget, std::string(kEngineVersion)};

  // Per-shape summary, cells arrive grouped by shape.
  for (std::size_t i = 0; i < doc.cells.size();) {
    const SignPattern& sp = doc.cells[i].pattern;
    int realizable = 0, forbidden = 0, unknown = 0, total = 0;
    int lo = -1, hi = -1;
    for (; i < doc.cells.size() && doc.cells[i].pattern == sp; ++i) {
      const AtlasCell& c = doc.cells[i];
      ++total;
      if (c.status == CellStatus::Realizable) {
        ++realizable;
        if (sp.changes() == 1) {
          const int n_star = stats_of(c.word, 1).n_star;
          lo = lo < 0 ? n_star : std::min(lo, n_star);
          hi = std::max(hi, n_star);
        }
      }
      forbidden += c.status == CellStatus::Forbidden;
      unknown += c.status == CellStatus::Unknown;
    }
    out << "shape " << blocks_string(sp) << ": " << realizable << "/" << total << " realizable, " << forbidden
        << " forbidden, " << unknown << " unknown";
    if (sp.changes() == 1 && lo >= 0) out << ", n* in [" << lo << ", " << hi << "]";
    out << '\n';
  }
  if (!f.out_path.empty())
    write_file(f.out_path, f.format == "json" ? serialize_json(doc) : serialize_csv(doc.cells));
  return kOk;
}

int cmd_verify_corpus(const Flags& f, std::ostream& out) {
  if (!f.export_path.empty()) write_file(f.export_path, serialize_corpus_json(builtin_corpus()));
  const std::vector<CorpusEntry> entries =
      f.corpus_path.empty() ? builtin_corpus() : parse_corpus_json(read_file(f.corpus_path));
  const auto results = verify_corpus(entries);
  out << format_corpus_report(results);
  const auto passed = std::count_if(results.begin(), results.end(), [](const CorpusResult& r) { return r.passed; });
  out << passed << "/" << results.size() << " entries pass\n";
  return passed == static_cast<std::ptrdiff_t>(results.size()) ? kOk : kForbidden;
}

int cmd_stats(const Flags& f, std::ostream& out) {
  if (!f.roots.empty()) {
    std::vector<Rational> rs;
    for (const auto& t : split_list(f.roots)) rs.push_back(Rational::parse(t));
    const SignedRootMultiset roots = SignedRootMultiset::from_roots(rs);
    const SignPattern sp = sign_pattern_of(expand_from_roots(roots));
    json j = witness_json(sp, roots);
    j["descartes"] = descartes_verify(roots);
    const int c = sp.changes();
    if (c == 1 || c == 2) {
      const OrderingStats st = stats_of(ordering_of(roots), c);
      j["stats"] = {{"m_star", st.m_star}, {"n_star", st.n_star}, {"q_star", st.q_star},
                    {"tie_alpha", st.tie_alpha}, {"tie_beta", st.tie_beta}};
    }
    const auto shape = try_shape_of(sp);
    if (shape && shape->kind == ShapeKind::TwoChanges && shape->q == 1) {
      json checks = json::array();
      for (const auto& chk : validate_inequalities(roots).checks)
        checks.push_back({{"name", chk.name}, {"lhs", chk.lhs.to_string()}, {"rhs", chk.rhs.to_string()},
                          {"holds", chk.holds}});
      j["inequalities"] = std::move(checks);
    }
    out << j.dump(2) << '\n';
    return kOk;
  }
  if (f.degree < 1 || f.degree > kMaxAtlasDegree)
    throw Error(ErrorKind::InvalidArgument, "stats needs --roots, or --degree in 1.." + std::to_string(kMaxAtlasDegree));
  const std::vector<int> changes = f.changes.empty() ? std::vector<int>{1, 2} : f.changes;
  AtlasOptions opt;
  opt.seed = f.seed;
  opt.budget = resolve_budget(f.budget);
  opt.threads = f.threads;
  for (int c : changes) {
    for (const auto& summary : n_star_summary(f.degree, c, opt)) {
      out << "shape " << summary.shape.to_string() << ": n* realized {";
      for (std::size_t i = 0; i < summary.realized.size(); ++i) out << (i ? ", " : "") << summary.realized[i];
      out << "}";
      if (summary.max_n_star() >= 0) out << ", max " << summary.max_n_star();
      out << '\n';
    }
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sign patterns and root-modulus orderings of hyperbolic polynomials", "moduli"};
  app.require_subcommand(1);
  Flags f;

  auto* realize = app.add_subcommand("realize", "Construct a witness for a sign pattern");
  realize->add_option("--pattern", f.pattern, "Sign pattern such as +--+");
  realize->add_option("--shape", f.shape, "Block lengths such as 1,2,1");
  realize->add_option("--ordering", f.ordering, "Target modulus ordering such as PNNP");
  realize->add_option("--seed", f.seed, "Search seed");
  realize->add_option("--budget", f.budget, "Search draws")->check(CLI::PositiveNumber);

  auto* classify = app.add_subcommand("classify", "Status of one (shape, ordering) cell");
  classify->add_option("--shape", f.shape, "Block lengths such as 3,2,1");
  classify->add_option("--pattern", f.pattern, "Sign pattern such as +++--+");
  classify->add_option("--ordering", f.ordering, "Modulus ordering such as PNNNP")->required();
  classify->add_option("--seed", f.seed, "Search seed");
  classify->add_option("--budget", f.budget, "Search draws")->check(CLI::PositiveNumber);

  auto* atlas = app.add_subcommand("atlas", "Classify every generic cell of a degree");
  atlas->add_option("--degree", f.degree, "Polynomial degree")->required();
  atlas->add_option("--changes", f.changes, "Sign-change counts, subset of {0,1,2}")->delimiter(',');
  atlas->add_option("--out", f.out_path, "Output file");
  atlas->add_option("--format", f.format, "json or csv");
  atlas->add_option("--seed", f.seed, "Search seed");
  atlas->add_option("--budget", f.budget, "Search draws per cell")->check(CLI::PositiveNumber);
  atlas->add_option("--threads", f.threads, "Worker threads (0 = all cores)");

  auto* corpus = app.add_subcommand("verify-corpus", "Check the published polynomials exactly");
  corpus->add_option("--corpus", f.corpus_path, "JSON fixture to verify instead of the built-in corpus");
  corpus->add_option("--export", f.export_path, "Write the built-in corpus as a JSON fixture");

  auto* stats = app.add_subcommand("stats", "Ordering statistics of roots, or n* summaries per shape");
  stats->add_option("--roots", f.roots, "Comma-separated roots, decimals allowed");
  stats->add_option("--degree", f.degree, "Degree for per-shape summaries");
  stats->add_option("--changes", f.changes, "Sign-change counts")->delimiter(',');
  stats->add_option("--seed", f.seed, "Search seed");
  stats->add_option("--budget", f.budget, "Search draws per cell")->check(CLI::PositiveNumber);
  stats->add_option("--threads", f.threads, "Worker threads (0 = all cores)");

  std::vector<const char*> argv{"moduli"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (realize->parsed()) return cmd_realize(f, out);
    if (classify->parsed()) return cmd_classify(f, out);
    if (atlas->parsed()) return cmd_atlas(f, out);
    if (corpus->parsed()) return cmd_verify_corpus(f, out);
    if (stats->parsed()) return cmd_stats(f, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const IoFailure& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const SoundnessViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kUnknown;
  }
  return kParseError;
}

}  // namespace moduli::cli
