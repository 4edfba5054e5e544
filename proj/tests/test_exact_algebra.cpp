#include <random>

#include "doctest.h"
#include "moduli/error.hpp"
#include "moduli/polynomial.hpp"
#include "moduli/roots.hpp"
#include "oracles.hpp"

using namespace moduli;

namespace {

std::vector<Rational> rs(std::initializer_list<const char*> text) {
  std::vector<Rational> out;
  for (const char* t : text) out.push_back(Rational::parse(t));
  return out;
}

}  // namespace

TEST_CASE("rational parsing is exact") {
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-21/10") == Rational(-21, 10));
  CHECK(Rational::parse("2.1") == Rational(21, 10));
  CHECK(Rational::parse("-0.0292") == Rational(-292, 10000));
  CHECK(Rational::parse("2.4e5") == Rational(240000));
  CHECK(Rational::parse("-2.107676E+5") == Rational(-2107676, 10));
  CHECK(Rational::parse("1.5e-3") == Rational(15, 10000));
  CHECK(Rational::parse(" 4/6 ") == Rational(2, 3));
  CHECK(Rational::parse(".5") == Rational(1, 2));
}

TEST_CASE("leading zeros are decimal, not octal") {
  CHECK(Rational::parse("0.995") == Rational(995, 1000));
  CHECK(Rational::parse("09") == Rational(9));
  CHECK(Rational::parse("010/08") == Rational(10, 8));
}

TEST_CASE("bad numbers are rejected") {
  for (const char* bad : {"", "abc", "1/0", "1.2.3", "--1", "1e", "/3", "0x10"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rational::parse(bad), Error);
  }
}

TEST_CASE("rational arithmetic and printing") {
  const Rational a(3, 4), b(-5, 6);
  CHECK((a + b) == Rational(-1, 12));
  CHECK((a - b) == Rational(19, 12));
  CHECK((a * b) == Rational(-5, 8));
  CHECK((a / b) == Rational(-9, 10));
  CHECK((-a).to_string() == "-3/4");
  CHECK(Rational(10, 5).to_string() == "2");
  CHECK(a.reciprocal() == Rational(4, 3));
  CHECK(Rational(-2).pow(3) == Rational(-8));
  CHECK(Rational(2).pow(-2) == Rational(1, 4));
  CHECK(b.abs() == Rational(5, 6));
  CHECK(b < a);
  CHECK_THROWS_AS(Rational(0).reciprocal(), Error);
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("polynomial basics") {
  const Polynomial p(std::vector<Rational>{Rational(-2), Rational(0), Rational(1), Rational(0)});  // x^2 - 2
  CHECK(p.degree() == 2);
  CHECK(p.coefficient(5) == Rational(0));
  CHECK(p.evaluate(Rational(3, 2)) == Rational(1, 4));
  CHECK(derivative(p) == Polynomial(std::vector<Rational>{Rational(0), Rational(2)}));
  CHECK(Polynomial().degree() == -1);
  const MonicPolynomial q = expand_from_roots(rs({"-1", "1.5", "1.6"}));
  CHECK(q.to_string() == "x^3 - 21/10*x^2 - 7/10*x + 12/5");
  CHECK(q.coefficient(3) == Rational(1));
}

TEST_CASE("expansion agrees with the subset-sum oracle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int pos = static_cast<int>(rng() % 4), neg = 1 + static_cast<int>(rng() % 4);
    const auto roots = oracle::random_roots(rng, pos, neg);
    const auto expected = oracle::expand(roots);
    const MonicPolynomial got = expand_from_roots(roots);
    REQUIRE(got.degree() == pos + neg);
    for (int k = 0; k <= got.degree(); ++k) CHECK(got.coefficient(k) == expected[static_cast<std::size_t>(k)]);
    for (int k = 0; k <= got.degree(); ++k)
      CHECK(elementary_symmetric(roots, k) == oracle::elementary(roots, k));
  }
}

TEST_CASE("reversion and negation act on roots") {
  const auto roots = rs({"4", "1", "-2.1", "-3"});
  const MonicPolynomial p = expand_from_roots(roots);
  const SignedRootMultiset r = SignedRootMultiset::from_roots(roots);
  CHECK(revert(p).normalized() == expand_from_roots(r.reciprocal()));
  CHECK(negate_var(p) == expand_from_roots(r.negated()));
  CHECK(revert(revert(p)).normalized() == p);
  CHECK_THROWS_AS(revert(Polynomial(std::vector<Rational>{Rational(0), Rational(1)})), Error);
}

TEST_CASE("division and multiplicity") {
  const Polynomial p = expand_from_roots(rs({"1", "1", "-2.1", "-2.1", "-1"})).as_polynomial();
  Rational rem;
  const Polynomial q = divide_by_linear(p, Rational(1), &rem);
  CHECK(rem == Rational(0));
  CHECK(q == expand_from_roots(rs({"1", "-2.1", "-2.1", "-1"})).as_polynomial());
  CHECK(root_multiplicity(p, Rational(1)) == 2);
  CHECK(root_multiplicity(p, Rational(-21, 10)) == 2);
  CHECK(root_multiplicity(p, Rational(3)) == 0);
  divide_by_linear(p, Rational(2), &rem);
  CHECK(rem == p.evaluate(Rational(2)));
}

TEST_CASE("signed root multisets") {
  const auto r = SignedRootMultiset::from_roots(rs({"-1", "0.5", "-0.5", "2"}));
  CHECK(r.positive_count() == 2);
  CHECK(r.negative_count() == 2);
  CHECK(r.degree() == 4);
  const auto ordered = r.by_modulus();
  CHECK(ordered[0] == Rational(1, 2));  // positive first on a tie
  CHECK(ordered[1] == Rational(-1, 2));
  CHECK(r.negative_moduli() == rs({"0.5", "1"}));
  CHECK(r.scaled(Rational(2)).positive()[1] == Rational(4));
  CHECK(r.reciprocal().reciprocal() == r);
  CHECK(r.negated().positive_count() == 2);
  CHECK(r.with_root(Rational(-3), 2).negative_count() == 4);
  CHECK_THROWS_AS(SignedRootMultiset::from_roots(rs({"0", "1"})), Error);
  CHECK_THROWS_AS(expand_from_roots(SignedRootMultiset{}), Error);
}
