#include <doctest.h>

#include <stdexcept>

#include "bigm1/polynomial.hpp"
#include "bigm1/rational.hpp"

using bigm1::make_rational;
using bigm1::parse_rational;
using bigm1::Rational;
using P = bigm1::Polynomial<Rational>;

TEST_CASE("parse_rational accepts integers, fractions and exact decimals") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-3/6") == make_rational(-1, 2));
  CHECK(parse_rational("+2/4") == make_rational(1, 2));
  CHECK(parse_rational("0.1") == make_rational(1, 10));
  CHECK(parse_rational("-0.25") == make_rational(-1, 4));
  CHECK(parse_rational("010/03") == make_rational(10, 3));
  CHECK(parse_rational("0.075") == make_rational(3, 40));
  CHECK(parse_rational("1e-3") == make_rational(1, 1000));
  CHECK(parse_rational("2.5E2") == 250);
  CHECK(parse_rational(".5") == make_rational(1, 2));
}

TEST_CASE("parse_rational rejects malformed input") {
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("."), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1e"), std::invalid_argument);
}

TEST_CASE("polynomial arithmetic and trimming") {
  const P x = P::Monomial(1);
  const P p = x * x - P::Constant(1);
  CHECK(p.degree() == 2);
  CHECK(p.is_monic());
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);
  CHECK(bigm1::eval(p, Rational(3)) == 8);
  CHECK(bigm1::reflect(x) == -x);
  CHECK(bigm1::differentiate(p) == Rational(2) * x);
  CHECK(bigm1::substitute_square(x + P::Constant(1)) == p + P::Constant(2));
  CHECK(bigm1::compose(p, x + P::Constant(1)) == x * x + Rational(2) * x);
}

TEST_CASE("synthetic division by x - a") {
  const P p{Rational(-6), Rational(11), Rational(-6), Rational(1)};  // (x-1)(x-2)(x-3)
  auto d = bigm1::divide_linear(p, Rational(2));
  CHECK(d.remainder == 0);
  CHECK(d.quotient == P{Rational(3), Rational(-4), Rational(1)});
  auto e = bigm1::divide_linear(p, Rational(0));
  CHECK(e.remainder == -6);
  CHECK(e.quotient * P::Linear(Rational(0)) + P::Constant(e.remainder) == p);
}

TEST_CASE("to_string renders highest degree first") {
  const P p{make_rational(-9, 16), make_rational(-1, 4), Rational(1)};
  CHECK(bigm1::to_string(p) == "x^2 - 1/4*x - 9/16");
  CHECK(bigm1::to_string(P::Linear(make_rational(1, 4))) == "x - 1/4");
  CHECK(bigm1::to_string(P{}) == "0");
  CHECK(bigm1::to_string(-P::Monomial(3, Rational(2))) == "-2*x^3");
}

TEST_CASE("exact evaluation at a double abscissa rounds once") {
  // (x - 3)^2 near 3: double Horner loses everything, the exact path does not.
  const double x = 3.0 + 1e-9;
  const P p = P::Linear(Rational(3)) * P::Linear(Rational(3));
  const double exact = (x - 3.0) * (x - 3.0);
  CHECK(bigm1::eval_exact_at(p, x) == doctest::Approx(exact).epsilon(1e-12));
}
