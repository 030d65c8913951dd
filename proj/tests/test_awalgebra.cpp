#include <doctest.h>

#include <random>
#include <vector>

#include "bigm1/awalgebra.hpp"
#include "bigm1/dunkl.hpp"
#include "bigm1/polynomial.hpp"

using namespace bigm1;
using P = Polynomial<Rational>;

namespace {

P Apply(const OperatorMatrix& m, const P& f) {
  std::vector<Rational> out(m.dim(), Rational(0));
  for (std::size_t j = 0; j < f.coeffs().size(); ++j)
    for (std::size_t i = 0; i < m.dim(); ++i) out[i] += m.at(i, j) * f.coeffs()[j];
  return P(out);
}

// -(2/x)(c f(x) + (x-1)(x+c) f(-x)) at x0 != 0.
Rational PointZ(const FamilyParams& p, const P& f, const Rational& x0) {
  return -2 / x0 * (p.c * eval(f, x0) + (x0 - 1) * (x0 + p.c) * eval(f, Rational(-x0)));
}

const std::vector<FamilyParams> kGrid{{0, 0, make_rational(1, 2)},
                                      {make_rational(1, 2), make_rational(3, 2), make_rational(1, 4)},
                                      {2, 1, 3},
                                      {make_rational(-1, 3), make_rational(5, 2), make_rational(7, 4)}};

}  // namespace

TEST_CASE("Z monomial action matches the reflection formula") {
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
  for (const auto& p : kGrid) {
    const OperatorMatrix Z = op_Z(p, 10);
    for (int deg = 0; deg <= 9; ++deg) {
      std::vector<Rational> c;
      for (int i = 0; i <= deg; ++i) c.push_back(make_rational(num(rng), den(rng)));
      const P f(c);
      const P zf = Apply(Z, f);
      for (const Rational& x0 : {make_rational(1, 2), make_rational(-7, 3), Rational(3)}) CHECK(eval(zf, x0) == PointZ(p, f, x0));
    }
  }
}

TEST_CASE("generators on 1 and x^n") {
  const FamilyParams p{make_rational(1, 2), make_rational(3, 2), make_rational(1, 4)};
  const P one = P::Constant(1);
  CHECK(Apply(op_Z(p, 4), one) == P{Rational(-2 * (p.c - 1)), Rational(-2)});
  CHECK(Apply(op_X(p, 4), one) == P::Constant(p.alpha + p.beta + 1));
  CHECK(Apply(op_Y(4), P::Monomial(3)) == P::Monomial(4));
  CHECK(Apply(op_X(p, 6), P::Monomial(5)) == apply_L0(p, P::Monomial(5)) + Rational(p.alpha + p.beta + 1) * P::Monomial(5));
}

TEST_CASE("anticommutator constants on 1") {
  const FamilyParams p{make_rational(1, 2), make_rational(3, 2), make_rational(1, 4)};
  const std::size_t d = 4;
  const OperatorMatrix X = op_X(p, d), Y = op_Y(d), Z = op_Z(p, d);
  const P one = P::Constant(1);
  CHECK(Apply(Y * Z + Z * Y, one) == P::Constant(-4 * p.c));
  CHECK(Apply(X * Y + Y * X - Z, one) == P::Constant(2 * (p.beta - p.alpha * p.c)));
  CHECK(Apply(Z * X + X * Z - Rational(4) * Y, one) == P::Constant(4 * (p.alpha - p.beta * p.c)));
  CHECK(omega1(p) == -4 * p.c);
}

TEST_CASE("relations hold exactly, including c > 1") {
  for (const auto& p : kGrid) {
    const auto r = anticommutator_residuals(p, 14);
    CHECK(r[0] == 0);
    CHECK(r[1] == 0);
    CHECK(r[2] == 0);
    CHECK(verify_anticommutators(p, 14).pass);
    CHECK(verify_casimir(p, 14).pass);
  }
}

TEST_CASE("Casimir equals 5 at c = 1/2") {
  const FamilyParams p{0, 0, make_rational(1, 2)};
  const std::size_t d = 8;
  const OperatorMatrix Y = op_Y(d), Z = op_Z(p, d);
  const OperatorMatrix Q = Z * Z + Rational(4) * (Y * Y);
  for (std::size_t j = 0; j <= d - 2; ++j)
    for (std::size_t i = 0; i <= d; ++i) CHECK(Q.at(i, j) == (i == j ? Rational(5) : Rational(0)));
}

TEST_CASE("truncation: the top columns are excluded for a reason") {
  // Past degree d-2 the truncated Y manufactures residuals; the checks must not look there.
  const FamilyParams p{0, 0, make_rational(1, 2)};
  const std::size_t d = 6;
  const OperatorMatrix Y = op_Y(d), Z = op_Z(p, d);
  const OperatorMatrix r = Y * Z + Z * Y - OperatorMatrix::Identity(d + 1, omega1(p));
  CHECK(r.max_abs_on_columns(d - 2) == 0);
  CHECK(r.max_abs_on_columns(d) != 0);
}

TEST_CASE("dual realization") {
  for (const auto& p : kGrid) {
    const VerificationReport rep = dual_realization(p, 12);
    CHECK(rep.pass);
    CHECK(rep.n_hi == 9);
  }
  CHECK_THROWS_AS(dual_realization(kGrid[0], 3), InvalidParameters);
  CHECK_THROWS_AS(dual_realization({0, 0, 1}, 8), InvalidParameters);
}
