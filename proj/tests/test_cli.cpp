#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "moduli/atlas_io.hpp"
#include "moduli/corpus.hpp"
#include "json.hpp"

using namespace moduli;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "moduli_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("realize") {
  auto r = run({"realize", "--pattern", "++--+"});
  CHECK(r.code == cli::kOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["pattern"] == "++--+");
  CHECK(j["ordering"] == "PNPN");

  r = run({"realize", "--shape", "2,2,1", "--ordering", "NPPN"});
  CHECK(r.code == cli::kOk);
  j = nlohmann::json::parse(r.out);
  CHECK(j["ordering"] == "NPPN");
  CHECK(j["roots"].size() == 4);

  CHECK(run({"realize", "--shape", "3,2,1", "--ordering", "PNNNP"}).code == cli::kForbidden);
  CHECK(run({"realize", "--pattern", "+0-"}).code == cli::kDegenerate);
  CHECK(run({"realize", "--pattern", "-+"}).code == cli::kParseError);
}

TEST_CASE("classify") {
  auto r = run({"classify", "--shape", "3,2,1", "--ordering", "PNNNP"});
  CHECK(r.code == cli::kForbidden);
  CHECK(r.out.find("P-321") != std::string::npos);
  CHECK(run({"classify", "--shape", "2,2,2", "--ordering", "NNPPN"}).code == cli::kOk);
  CHECK(run({"classify", "--shape", "2,1,2", "--ordering", "NPPN"}).code == cli::kOk);
  CHECK(run({"classify", "--pattern", "++--+", "--ordering", "PNNP"}).code == cli::kOk);
  CHECK(run({"classify", "--shape", "2,2,1", "--ordering", "P(PN)N"}).code == cli::kUnknown);
  CHECK(run({"classify", "--shape", "2,2,1", "--ordering", "PXX"}).code == cli::kParseError);
  CHECK(run({"classify", "--shape", "2,2,1"}).code == cli::kParseError);
  CHECK(run({"classify", "--shape", "2,2,1", "--ordering", "PNN"}).code == cli::kParseError);
  CHECK(run({"frobnicate"}).code == cli::kParseError);
  CHECK(run({}).code == cli::kParseError);
}

TEST_CASE("atlas files are deterministic and re-import") {
  const auto a = scratch("a.json"), b = scratch("b.json"), c = scratch("a.csv");
  auto r = run({"atlas", "--degree", "5", "--changes", "2", "--out", a.string(), "--threads", "1"});
  CHECK(r.code == cli::kOk);
  r = run({"atlas", "--degree", "5", "--changes", "2", "--out", b.string(), "--threads", "3"});
  CHECK(r.code == cli::kOk);
  CHECK(slurp(a) == slurp(b));
  const auto doc = parse_atlas_json(slurp(a));
  CHECK(doc.degree == 5);
  CHECK(doc.cells.size() == 100);
  for (const auto& cell : doc.cells) CHECK(cell.status != CellStatus::Unknown);

  r = run({"atlas", "--degree", "5", "--changes", "2", "--out", c.string(), "--format", "csv"});
  CHECK(r.code == cli::kOk);
  const auto cells = parse_atlas_csv(slurp(c));
  REQUIRE(cells.size() == doc.cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    CHECK(cells[i].status == doc.cells[i].status);
    CHECK(cells[i].witness == doc.cells[i].witness);
  }

  CHECK(run({"atlas", "--degree", "4", "--changes", "2", "--out", "/nonexistent/dir/x.json"}).code == cli::kIoError);
  CHECK(run({"atlas", "--degree", "4", "--format", "xml"}).code == cli::kParseError);
  CHECK(run({"atlas", "--degree", "9"}).code == cli::kParseError);
  CHECK(run({"atlas", "--degree", "4", "--changes", "3"}).code == cli::kParseError);
}

TEST_CASE("atlas summary for one sign change") {
  const auto r = run({"atlas", "--degree", "4", "--changes", "1"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("shape 2,3: 3/4 realizable, 1 forbidden, 0 unknown, n* in [1, 3]") != std::string::npos);
  CHECK(r.out.find("shape 4,1: 1/4 realizable, 3 forbidden, 0 unknown, n* in [0, 0]") != std::string::npos);
}

TEST_CASE("verify-corpus") {
  const auto first = run({"verify-corpus"});
  const auto second = run({"verify-corpus"});
  CHECK(first.out == second.out);
  CHECK(first.out.find("PASS (x+1)(x-1.5)(x-1.6)") != std::string::npos);

  // A fixture of entries that all pass exits 0; tampering one entry exits 1.
  std::vector<CorpusEntry> good;
  for (const auto& r : verify_corpus())
    if (r.passed)
      for (const auto& e : builtin_corpus())
        if (e.name == r.name) good.push_back(e);
  const auto fixture = scratch("corpus.json");
  std::ofstream(fixture) << serialize_corpus_json(good);
  CHECK(run({"verify-corpus", "--corpus", fixture.string()}).code == cli::kOk);

  good[3].coefficients[1] = "9.75";
  std::ofstream(fixture) << serialize_corpus_json(good);
  const auto bad = run({"verify-corpus", "--corpus", fixture.string()});
  CHECK(bad.code == cli::kForbidden);
  CHECK(bad.out.find("FAIL " + good[3].name) != std::string::npos);

  CHECK(run({"verify-corpus", "--corpus", scratch("missing.json").string()}).code == cli::kIoError);
  const auto exported = scratch("export.json");
  run({"verify-corpus", "--export", exported.string()});
  CHECK(parse_corpus_json(slurp(exported)).size() == builtin_corpus().size());
}

TEST_CASE("stats") {
  auto r = run({"stats", "--roots", "4,1,-2.1,-3"});
  CHECK(r.code == cli::kOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["ordering"] == "PNNP");
  CHECK(j["stats"]["n_star"] == 2);
  CHECK(j["coefficients"][4] == "126/5");
  CHECK(run({"stats", "--roots", "1,-1"}).code == cli::kDegenerate);
  CHECK(run({"stats", "--roots", "1,abc"}).code == cli::kParseError);
  r = run({"stats", "--degree", "4", "--changes", "2"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("shape 2,2,1") != std::string::npos);
}

TEST_CASE("budget from the environment") {
  ::setenv("MODULI_ATLAS_BUDGET", "1", 1);
  // A cell only search settles comes back unknown on a one-draw budget.
  CHECK(run({"classify", "--shape", "2,2,3", "--ordering", "NPPNNN"}).code == cli::kUnknown);
  CHECK(run({"classify", "--shape", "2,2,3", "--ordering", "NPPNNN", "--budget", "100000"}).code == cli::kOk);
  ::setenv("MODULI_ATLAS_BUDGET", "nonsense", 1);
  CHECK(run({"classify", "--shape", "2,2,1", "--ordering", "PNNP"}).code == cli::kParseError);
  ::unsetenv("MODULI_ATLAS_BUDGET");
  CHECK(run({"classify", "--shape", "2,2,3", "--ordering", "NPPNNN"}).code == cli::kOk);
}
