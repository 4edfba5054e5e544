#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "expected_atlas.hpp"
#include "moduli/atlas_io.hpp"
#include "moduli/classify.hpp"
#include "moduli/corpus.hpp"
#include "moduli/error.hpp"
#include "oracles.hpp"

using namespace moduli;

namespace {

SignedRootMultiset roots_of(std::initializer_list<const char*> text) {
  std::vector<Rational> out;
  for (const char* t : text) out.push_back(Rational::parse(t));
  return SignedRootMultiset::from_roots(out);
}

ModulusOrdering w(const char* s) { return ModulusOrdering::parse(s); }

std::optional<std::string_view> tag_for(const char* shape, const char* word) {
  const auto c = forbidden_by_theorem(SigmaShape::parse(shape), w(word));
  if (!c) return std::nullopt;
  return c->tag();
}

}  // namespace

TEST_CASE("theorem tags round-trip") {
  for (TheoremId id : {TheoremId::OneChangeBound, TheoremId::OneChangeBoundMirror, TheoremId::OneLongOne,
                       TheoremId::LastBlockOnePart1, TheoremId::LastBlockOnePart2, TheoremId::LastBlockOneBis,
                       TheoremId::MiddleBlockOne, TheoremId::Shape321, TheoremId::MiddleBlockOneNoTie}) {
    CHECK(parse_theorem_tag(theorem_tag(id)) == id);
    CHECK(!cite(id).note.empty());
  }
  CHECK(!parse_theorem_tag("T-nope"));
}

TEST_CASE("forbidden cells carry the right citation") {
  CHECK(tag_for("4,1", "NPNN") == std::optional<std::string_view>("T-c1-bound"));
  CHECK(!tag_for("4,1", "PNNN"));
  CHECK(tag_for("1,4", "NNPN") == std::optional<std::string_view>("C-c1-bound"));
  CHECK(tag_for("2,2,1", "NNPP") == std::optional<std::string_view>("T-mn1-part1"));
  CHECK(tag_for("3,2,1", "PNNNP") == std::optional<std::string_view>("P-321"));
  CHECK(tag_for("1,3,1", "PPNN") == std::optional<std::string_view>("T-1n1"));
  CHECK(tag_for("2,1,2", "PNNP") == std::optional<std::string_view>("T-m1q"));
  CHECK(tag_for("1,2,2", "PPNN") == std::optional<std::string_view>("T-mn1-part1"));
  CHECK(tag_for("2,4,1", "NPPNNN") == std::optional<std::string_view>("T-mn1-part2"));
  CHECK(!tag_for("2,2,1", "PNNP"));
  CHECK(!tag_for("2,3,1", "NPPNN"));
  CHECK(!tag_for("2,2,2", "NNNPP"));
  CHECK_THROWS_AS(forbidden_by_theorem(SigmaShape::parse("2,2,1"), w("PNNN")), Error);
  CHECK(!tag_for("1,2,1", "NPP"));
  CHECK(!tag_for("3", "NN"));
  CHECK_THROWS_AS(forbidden_by_theorem(SigmaShape::parse("3"), w("PN")), Error);
  CHECK_THROWS_AS(forbidden_by_theorem(SigmaShape::parse("2,2,1"), w("(PN)NP")), Error);
}

TEST_CASE("search finds witnesses and respects forbidden cells") {
  const auto sp = make_pattern(SigmaShape::parse("2,2,1"));
  const auto found = search_witness(sp, w("PNNP"), 10000, 5);
  REQUIRE(found);
  CHECK(realizes(*found, sp, w("PNNP")));
  CHECK(search_witness(sp, w("PNNP"), 10000, 5) == found);
  CHECK(search_witness(SigmaShape::parse("1,1"), w("P"), 100, 1));
  CHECK(!search_witness(SigmaShape::parse("3,2,1"), w("PNNNP"), 100000, 9));
}

TEST_CASE("inequality validators") {
  // roots 4, 1, -2.1, -3
  auto report = validate_inequalities(roots_of({"4", "1", "-2.1", "-3"}));
  CHECK(!report.checks.empty());
  CHECK(report.all_hold());

  const auto sp141 = SignPattern::parse("+----+");
  const auto r141 = construct_witness(sp141, w("PNNNP"));
  REQUIRE(r141);
  report = validate_inequalities(*r141);
  CHECK(report.checks.size() >= 2);
  CHECK(report.all_hold());

  report = validate_inequalities(realize_case_ii(5, 3));
  CHECK(report.all_hold());
  bool saw_expansion = false;
  for (const auto& c : report.checks) saw_expansion |= c.relation == Relation::Equal;
  CHECK(saw_expansion);

  // Sigma_{2,2,2} is neither Sigma_{1,n,1} nor Sigma_{m,n,1}
  const auto r222 = search_witness(SigmaShape::parse("2,2,2"), w("PNNNP"), 100000, 2);
  REQUIRE(r222);
  CHECK_THROWS_AS(validate_inequalities(*r222), Error);
}

TEST_CASE("inequalities hold on random Sigma_{m,n,1} realizers") {
  std::mt19937_64 rng(21);
  int seen = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const int neg = 2 + static_cast<int>(rng() % 4);
    const auto roots = SignedRootMultiset::from_roots(oracle::random_roots(rng, 2, neg));
    const auto sp = try_sign_pattern_of(expand_from_roots(roots));
    if (!sp) continue;
    const auto shape = try_shape_of(*sp);
    if (!shape || shape->kind != ShapeKind::TwoChanges) continue;
    if (shape->q != 1 && !(shape->m == 1 && shape->q == 1)) continue;
    ++seen;
    CHECK(validate_inequalities(roots).all_hold());
  }
  CHECK(seen > 100);
}

TEST_CASE("no tie between negative and positive moduli for Sigma_{m,1,q}") {
  CHECK(no_tie_check_m1q(realize_canonical(SignPattern::parse("++-++"))));
  CHECK_THROWS_AS(no_tie_check_m1q(roots_of({"4", "1", "-2.1", "-3"})), Error);
  // A negative root on a positive modulus never yields the shape.
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 2000; ++trial) {
    auto v = oracle::random_roots(rng, 2, 1 + static_cast<int>(rng() % 4));
    Rational pos;
    for (const auto& r : v)
      if (r.sign() > 0) pos = r;
    v.push_back(-pos);
    const auto sp = try_sign_pattern_of(expand_from_roots(v));
    if (!sp) continue;
    const auto shape = try_shape_of(*sp);
    CHECK(!(shape && shape->kind == ShapeKind::TwoChanges && shape->n == 1));
  }
}

TEST_CASE("condition A") {
  const std::vector<int> a{2, 1}, b{1, 2}, c{};
  CHECK(condition_a(a, 6, 2, 1, 1));
  CHECK(!condition_a(b, 6, 2, 1, 1));
  CHECK(condition_a(c, 4, 2, 2, 1));
}

TEST_CASE("atlas for d <= 5 matches the hand table") {
  const std::vector<int> cs{0, 1, 2};
  for (int d = 1; d <= 5; ++d) {
    const auto cells = build_atlas(d, cs, AtlasOptions{.seed = 1, .budget = 20000, .threads = 2});
    std::map<SigmaShape, std::set<std::string>> realized;
    std::set<SigmaShape> shapes;
    for (const auto& cell : cells) {
      CHECK(verify_cell(cell));
      CHECK(cell.status != CellStatus::Unknown);
      const auto shape = shape_of(cell.pattern);
      shapes.insert(shape);
      if (cell.status == CellStatus::Realizable) realized[shape].insert(cell.word.to_string());
    }
    for (const auto& shape : shapes) {
      CAPTURE(shape.to_string());
      CHECK(realized[shape] == oracle::expected_realizable(shape));
    }
  }
}

TEST_CASE("atlas is deterministic across thread counts") {
  const std::vector<int> cs{2};
  const auto a = build_atlas(5, cs, AtlasOptions{.seed = 3, .budget = 5000, .threads = 1});
  const auto b = build_atlas(5, cs, AtlasOptions{.seed = 3, .budget = 5000, .threads = 4});
  CHECK(a == b);
  CHECK(cell_seed(3, a[0].pattern, a[0].word) == cell_seed(3, a[0].pattern, a[0].word));
  CHECK(cell_seed(3, a[0].pattern, a[0].word) != cell_seed(4, a[0].pattern, a[0].word));
}

TEST_CASE("atlas duality") {
  const AtlasOptions opt{.seed = 1, .budget = 20000, .threads = 2};
  for (const auto& cell : build_atlas(5, std::vector<int>{1, 2}, opt)) {
    const auto rev = classify_cell(reverse_pattern(cell.pattern), reverse_ordering(cell.word), opt);
    CHECK(rev.status == cell.status);
    const auto neg = classify_cell(negate_pattern(cell.pattern), negate_ordering(cell.word), opt);
    CHECK(neg.status == cell.status);
    CHECK(verify_cell(neg));
  }
}

TEST_CASE("tie words") {
  const auto forbidden = classify_cell(SignPattern::parse("++-++"), w("N(PN)P"));
  CHECK(forbidden.status == CellStatus::Forbidden);
  REQUIRE(forbidden.citation);
  CHECK(forbidden.citation->tag() == "L-no-tie-m1q");
  const auto tied = classify_cell(make_pattern(SigmaShape::one_change(3, 2)), w("N(PN)N"));
  CHECK(tied.status == CellStatus::Realizable);
  CHECK(verify_cell(tied));
  const auto open = classify_cell(make_pattern(SigmaShape::parse("2,2,1")), w("P(PN)N"));
  CHECK(open.status == CellStatus::Unknown);
  CHECK(verify_cell(open));
}

TEST_CASE("corpus") {
  const auto results = verify_corpus();
  CHECK(results.size() == builtin_corpus().size());
  int passed = 0;
  for (const auto& r : results) passed += r.passed;
  CHECK(passed >= 25);
  CHECK(format_corpus_report(results) == format_corpus_report(verify_corpus()));

  auto entry = builtin_corpus().front();
  CHECK(verify_entry(entry).passed);
  entry.coefficients.back() = entry.coefficients.back() + "1";
  const auto bad = verify_entry(entry);
  CHECK(!bad.passed);
  REQUIRE(!bad.mismatches.empty());
  CHECK(bad.mismatches.front().power == 0);
  const std::vector<CorpusResult> one{bad};
  CHECK(format_corpus_report(one).rfind("FAIL ", 0) == 0);

  const auto witness = corpus_witness(SignPattern::parse("++--+"), w("PNNP"));
  REQUIRE(witness);
  CHECK(realizes(*witness, SignPattern::parse("++--+"), w("PNNP")));
}

TEST_CASE("atlas documents round-trip") {
  AtlasDocument doc;
  doc.degree = 4;
  doc.provenance = Provenance{7, 3000};
  doc.cells = build_atlas(4, std::vector<int>{1, 2}, AtlasOptions{.seed = 7, .budget = 3000, .threads = 1});
  doc.cells.push_back(classify_cell(SignPattern::parse("++-+"), w("(PN)P")));
  const std::string json = serialize_json(doc);
  CHECK(parse_atlas_json(json) == doc);
  CHECK(serialize_json(parse_atlas_json(json)) == json);

  auto csv_cells = parse_atlas_csv(serialize_csv(doc.cells));
  REQUIRE(csv_cells.size() == doc.cells.size());
  for (std::size_t i = 0; i < csv_cells.size(); ++i) {
    auto expected = doc.cells[i];
    expected.source.reset();
    CHECK(csv_cells[i] == expected);
  }
  CHECK_THROWS_AS(parse_atlas_json("{\"cells\": 3"), Error);
  CHECK_THROWS_AS(parse_atlas_csv("bad,header\n"), Error);

  const auto corpus = parse_corpus_json(serialize_corpus_json(builtin_corpus()));
  REQUIRE(corpus.size() == builtin_corpus().size());
  CHECK(corpus.front().name == builtin_corpus().front().name);
  CHECK(corpus.back().coefficients == builtin_corpus().back().coefficients);
}

TEST_CASE("witness roots print exactly") {
  const auto s = witness_strings(roots_of({"-2.1", "0.5"}));
  CHECK(s == std::vector<std::string>{"1/2", "-21/10"});
}

TEST_CASE("n* summary for one sign change") {
  for (const auto& summary : n_star_summary(6, 1, AtlasOptions{.budget = 1000, .threads = 1})) {
    const auto range = one_change_range(summary.shape);
    std::vector<int> expected;
    for (int k = range.low; k <= range.high; ++k) expected.push_back(k);
    CHECK(summary.realized == expected);
  }
}
