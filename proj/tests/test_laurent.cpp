#include "doctest.h"

#include <stdexcept>

#include "cgybe/expr.hpp"
#include "cgybe/laurent.hpp"
#include "cgybe/rational.hpp"
#include "test_support.hpp"

using namespace cgybe;
using cgybe::testing::random_laurent;
using cgybe::testing::random_nonzero_rational;

namespace {

const LaurentQP q = LaurentQP::q();
const LaurentQP p = LaurentQP::p();
const LaurentQP q_inv = LaurentQP::monomial(1, -1, 0);

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/2") == Rational(3) / 2);
  CHECK(parse_rational("-6/4") == Rational(-3) / 2);
  CHECK(parse_rational("7") == 7);
  CHECK(to_fraction_string(parse_rational("-6/4")) == "-3/2");
  CHECK(to_fraction_string(Rational(0)) == "0/1");
  CHECK(to_compact_string(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
  CHECK(pow(Rational(2), -3) == Rational(1) / 8);
  CHECK_THROWS_AS(pow(Rational(0), -1), std::domain_error);
}

TEST_CASE("laurent_add") {
  CHECK((q + (-q)).is_zero());
  CHECK((q + (-q)).terms().empty());

  const LaurentQP sum = q + q_inv;
  REQUIRE(sum.size() == 2);
  CHECK(sum.coeff(1, 0) == 1);
  CHECK(sum.coeff(-1, 0) == 1);

  CHECK((q - q_inv) + q_inv == q);
}

TEST_CASE("laurent_mul") {
  CHECK((q - q_inv) * (q + q_inv) == q.pow(2) - q.pow(-2));
  for (int trial = 0; trial < 20; ++trial) {
    const LaurentQP x = random_laurent();
    CHECK(LaurentQP(1) * x == x);
  }
  CHECK((q * p.inverse()) * (q_inv * p) == LaurentQP(1));
  CHECK((q * LaurentQP()).is_zero());
}

TEST_CASE("laurent_eval") {
  CHECK((q - q_inv).eval(2, 1) == Rational(3) / 2);
  CHECK(LaurentQP().eval(5, 7) == 0);
  CHECK((q * p.pow(-2)).eval(3, 2) == Rational(3) / 4);
  CHECK_THROWS_AS(q.eval(0, 1), std::domain_error);
  CHECK_THROWS_AS(LaurentQP().eval(1, 0), std::domain_error);
}

TEST_CASE("units, inverses and powers") {
  CHECK(q.is_unit());
  CHECK_FALSE((q + 1).is_unit());
  CHECK_FALSE(LaurentQP().is_unit());
  CHECK((LaurentQP::monomial(Rational(2) / 3, 2, -1).inverse() == LaurentQP::monomial(Rational(3) / 2, -2, 1)));
  CHECK_THROWS_AS((q + 1).inverse(), std::domain_error);
  CHECK((q + 1).pow(2) == q * q + 2 * q + 1);
  CHECK(q.pow(0) == LaurentQP(1));
  CHECK(q.pow(-3) * q.pow(3) == LaurentQP(1));
}

TEST_CASE("p = 1 substitution collapses p exponents") {
  const LaurentQP x = q * p + q * p.inverse() - 2 * q + p;
  CHECK(x.at_p_one() == LaurentQP(1));
}

TEST_CASE("ring axioms on random triples") {
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentQP a = random_laurent(), b = random_laurent(), c = random_laurent();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("eval is a ring homomorphism") {
  for (int trial = 0; trial < 100; ++trial) {
    const LaurentQP x = random_laurent(), y = random_laurent();
    const Rational qv = random_nonzero_rational(), pv = random_nonzero_rational();
    CHECK((x * y).eval(qv, pv) == x.eval(qv, pv) * y.eval(qv, pv));
    CHECK((x + y).eval(qv, pv) == x.eval(qv, pv) + y.eval(qv, pv));
  }
}

TEST_CASE("canonical form") {
  std::vector<LaurentQP::Term> raw = {{1, 0, 2}, {0, 0, 0}, {1, 0, -2}, {-1, 2, 5}, {-1, 2, 1}};
  const LaurentQP x = LaurentQP::from_terms(raw);
  REQUIRE(x.size() == 1);
  CHECK(x.coeff(-1, 2) == 6);

  for (int trial = 0; trial < 50; ++trial) {
    const LaurentQP y = random_laurent(6);
    const LaurentQP again = LaurentQP::from_terms({y.terms().begin(), y.terms().end()});
    CHECK(again == y);
    for (const auto& t : y.terms()) CHECK_FALSE(t.coeff.is_zero());
  }
}

TEST_CASE("printing") {
  CHECK(to_string(q - q_inv) == "q - q^-1");
  CHECK(to_string(LaurentQP()) == "0");
  CHECK(to_string(-q * p.pow(-1)) == "-q*p^-1");
  CHECK(to_string(LaurentQP::monomial(Rational(1) / 2, 0, 2) + 3) == "1/2*p^2 + 3");
  CHECK(to_latex(q - q_inv) == "q - q^{-1}");
  CHECK(to_latex(LaurentQP::monomial(Rational(-3) / 4, 1, 1)) == "-\\frac{3}{4} q p");
}

TEST_CASE("Laurent expression grammar") {
  CHECK(parse_laurent("q") == q);
  CHECK(parse_laurent("hecke") == q - q_inv);
  CHECK(parse_laurent("q - q^-1") == q - q_inv);
  CHECK(parse_laurent("-q^2 + 3*p*q^-1") == -q * q + 3 * p * q_inv);
  CHECK(parse_laurent("(q+1)^2") == q * q + 2 * q + 1);
  CHECK(parse_laurent(" 0 ") == LaurentQP());
  CHECK_THROWS_AS(parse_laurent(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_laurent("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_laurent("q^"), std::invalid_argument);
  CHECK_THROWS_AS(parse_laurent("(q+1)^-1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_laurent("q +"), std::invalid_argument);
  CHECK_THROWS_AS(parse_laurent("(q"), std::invalid_argument);
  CHECK_THROWS_AS(parse_laurent("q q"), std::invalid_argument);
}
