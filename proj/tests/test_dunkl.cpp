#include <doctest.h>

#include <random>
#include <vector>

#include "bigm1/dunkl.hpp"
#include "bigm1/family.hpp"

using namespace bigm1;
using P = Polynomial<Rational>;

namespace {

const std::vector<FamilyParams> kGrid{
    {0, 0, make_rational(1, 2)}, {make_rational(1, 2), make_rational(3, 2), make_rational(1, 4)}, {2, 1, 3}};

// L0 f(x0) from g0(x)(f(-x)-f(x)) - g1(x) f'(-x) with the rational
// coefficient functions evaluated at x0 != 0.
Rational PointL0(const FamilyParams& p, const P& f, const Rational& x0) {
  const Rational g0 = ((p.alpha + p.beta + 1) * x0 * x0 + (p.c * p.alpha - p.beta) * x0 + p.c) / (x0 * x0);
  const Rational g1 = 2 * (x0 - 1) * (x0 + p.c) / x0;
  return g0 * (eval(f, Rational(-x0)) - eval(f, x0)) - g1 * eval(differentiate(f), Rational(-x0));
}

P RandomPoly(std::mt19937& rng, int degree) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  std::vector<Rational> c;
  for (int i = 0; i <= degree; ++i) c.push_back(make_rational(num(rng), den(rng)));
  return P(c);
}

}  // namespace

TEST_CASE("apply_L0 matches pointwise evaluation of the operator") {
  std::mt19937 rng(11);
  const std::vector<Rational> points{make_rational(1, 3), make_rational(-5, 7), Rational(2), make_rational(-3, 2)};
  for (const auto& p : kGrid)
    for (int deg = 0; deg <= 9; ++deg) {
      const P f = RandomPoly(rng, deg);
      const P lf = apply_L0(p, f);
      CHECK(lf.degree() <= f.degree());
      for (const auto& x0 : points) CHECK(eval(lf, x0) == PointL0(p, f, x0));
    }
}

TEST_CASE("L0 on x^2 is 4(x-1)(x+c)") {
  const FamilyParams p{0, 0, make_rational(1, 2)};
  const P expected = Rational(4) * P::Linear(Rational(1)) * P::Linear(make_rational(-1, 2));
  CHECK(apply_L0(p, P::Monomial(2)) == expected);
  CHECK(apply_L0(p, P::Constant(1)).is_zero());
}

TEST_CASE("banded matrix reproduces apply_L0") {
  const FamilyParams p{make_rational(1, 2), make_rational(3, 2), make_rational(1, 4)};
  const TriangularAction a = l0_matrix(p, 12);
  CHECK(a.size() == 13);
  CHECK(a.eta[0] == 0);
  CHECK(a.zeta[1] == 0);
  std::mt19937 rng(5);
  for (int deg = 0; deg <= 12; ++deg) {
    const P f = RandomPoly(rng, deg);
    CHECK(apply(a, f) == apply_L0(p, f));
  }
  CHECK_THROWS_AS(apply(a, P::Monomial(13)), InvalidParameters);
  // Diagonal entries are the eigenvalues.
  for (std::size_t n = 0; n <= 12; ++n) CHECK(a.xi[n] == eigenvalue_lambda(n, p));
}

TEST_CASE("eigenvalues") {
  const FamilyParams p{make_rational(1, 2), make_rational(3, 2), make_rational(1, 4)};
  CHECK(eigenvalue_lambda(0, p) == 0);
  CHECK(eigenvalue_lambda(4, p) == 8);
  CHECK(eigenvalue_lambda(1, p) == -2 * (p.alpha + p.beta + 2));
}

TEST_CASE("L0 is two-diagonal in the phi basis") {
  for (const auto& p : kGrid)
    for (std::size_t n = 1; n <= 12; ++n) {
      const P lhs = apply_L0(p, phi_basis(n));
      const P rhs = eigenvalue_lambda(n, p) * phi_basis(n) + eta_phi(n, p) * phi_basis(n - 1);
      CHECK(lhs == rhs);
    }
  CHECK(phi_basis(0) == P::Constant(1));
  CHECK(phi_basis(3) == P::Linear(Rational(1)) * P{Rational(-1), Rational(0), Rational(1)});
  CHECK_THROWS_AS(eta_phi(0, kGrid[0]), InvalidParameters);
}

TEST_CASE("phi expansion gives the monic eigenpolynomials") {
  for (const auto& p : kGrid)
    for (std::size_t n = 0; n <= 14; ++n) {
      const P pn = pn_via_phi(p, n);
      CHECK(pn.degree() == static_cast<int>(n));
      CHECK(pn.is_monic());
      CHECK(apply_L0(p, pn) == eigenvalue_lambda(n, p) * pn);
    }
}

TEST_CASE("phi expansion reports a degenerate spectrum") {
  // alpha + beta = -2 makes lambda_1 = lambda_0 = 0.
  const FamilyParams p{make_rational(-3, 2), make_rational(-1, 2), make_rational(1, 2)};
  CHECK_THROWS_AS(phi_expansion(p, 1), DegenerateSpectrum);
}

TEST_CASE("P_1 = x - 1/4 at (0, 0, 1/2)") {
  CHECK(pn_via_phi({0, 0, make_rational(1, 2)}, 1) == P::Linear(make_rational(1, 4)));
}
