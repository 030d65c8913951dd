#include <doctest.h>

#include <cmath>
#include <vector>

#include "bigm1/dunkl.hpp"
#include "bigm1/family.hpp"
#include "bigm1/recurrence.hpp"

using namespace bigm1;
using P = Polynomial<Rational>;

namespace {
const FamilyParams kBase{0, 0, make_rational(1, 2)};
}

TEST_CASE("validation") {
  CHECK_NOTHROW(validate_family(kBase));
  CHECK_THROWS_AS(validate_family({0, 0, 1}), InvalidParameters);
  CHECK_THROWS_AS(validate_family({0, 0, 0}), InvalidParameters);
  CHECK_THROWS_AS(validate_family({-1, 0, make_rational(1, 2)}), InvalidParameters);
  CHECK_THROWS_AS(validate_family({0, make_rational(-3, 2), make_rational(1, 2)}), InvalidParameters);
  CHECK_THROWS_AS(make_family(0, 0, -2), InvalidParameters);
  CHECK_THROWS_AS(generate({0, 0, 1}, 3), InvalidParameters);
}

TEST_CASE("recurrence data at (0, 0, 1/2)") {
  const RecurrencePair r = recurrence_coeffs(kBase, 3);
  CHECK(r.u[0] == 0);
  CHECK(r.b[0] == make_rational(1, 4));
  CHECK(r.b[1] == 0);
  CHECK(r.u[1] == make_rational(9, 16));
  CHECK(r.u[2] == make_rational(1, 16));
  const auto polys = generate(kBase, 2);
  CHECK(polys[1] == P::Linear(make_rational(1, 4)));
  CHECK(polys[2] == P{make_rational(-9, 16), make_rational(-1, 4), Rational(1)});
}

TEST_CASE("limit coefficients") {
  const CoefficientPair ac0 = limit_AC(kBase, 0);
  CHECK(ac0.C == 0);
  CHECK(ac0.A == make_rational(3, 4));
  // alpha + beta = 0: C_0 stays defined.
  CHECK(limit_AC({make_rational(1, 2), make_rational(-1, 2), make_rational(1, 3)}, 0).C == 0);
  const FamilyParams p{make_rational(1, 2), make_rational(3, 2), make_rational(1, 4)};
  const RecurrencePair r = recurrence_coeffs(p, 10);
  for (std::size_t n = 1; n <= 10; ++n) {
    CHECK(r.u[n] == limit_AC(p, n - 1).A * limit_AC(p, n).C);
    CHECK(r.b[n] == 1 - limit_AC(p, n).A - limit_AC(p, n).C);
  }
}

TEST_CASE("positive definiteness on both branches") {
  for (const FamilyParams& p : {kBase, FamilyParams{2, 1, 3}, FamilyParams{make_rational(1, 2), make_rational(3, 2), make_rational(1, 4)}}) {
    const RecurrencePair r = recurrence_coeffs(p, 20);
    for (std::size_t n = 1; n <= 20; ++n) CHECK(r.u[n] > 0);
  }
}

TEST_CASE("degenerate corners") {
  const RecurrencePair c0 = recurrence_coeffs({1, 2, 0}, 12);
  for (std::size_t n = 1; n <= 12; ++n) CHECK(c0.u[n] > 0);
  const RecurrencePair c1 = recurrence_coeffs({1, 2, 1}, 12);
  for (std::size_t n = 2; n <= 12; n += 2) CHECK(c1.u[n] == 0);
  for (std::size_t n = 1; n <= 12; n += 2) CHECK(c1.u[n] > 0);
}

TEST_CASE("Pochhammer and terminating 2F1") {
  CHECK(pochhammer(make_rational(1, 2), 0) == 1);
  CHECK(pochhammer(make_rational(1, 2), 3) == make_rational(15, 8));
  CHECK(pochhammer(-2, 3) == 0);

  // Brute force sum_s (-m)_s (b)_s / ((c)_s s!) z^s.
  const Rational b = make_rational(7, 3), c = make_rational(5, 2), z = make_rational(-2, 5);
  for (std::size_t m = 0; m <= 7; ++m) {
    Rational sum = 0, fact = 1, zp = 1;
    for (std::size_t s = 0; s <= m; ++s) {
      if (s > 0) fact *= static_cast<long>(s);
      sum += pochhammer(-static_cast<long>(m), s) * pochhammer(b, s) / (pochhammer(c, s) * fact) * zp;
      zp *= z;
    }
    CHECK(hyp_2f1_terminating(m, b, c, z) == sum);
    const P zpoly{Rational(1), Rational(-2)};
    CHECK(eval(hyp_2f1_terminating(m, b, c, zpoly), make_rational(7, 10)) == sum);
  }
  // Chu-Vandermonde: 2F1(-m, b; c; 1) = (c-b)_m / (c)_m.
  for (std::size_t m = 0; m <= 6; ++m)
    CHECK(hyp_2f1_terminating(m, b, c, Rational(1)) == pochhammer(c - b, m) / pochhammer(c, m));
  CHECK_THROWS_AS(hyp_2f1_coefficients(3, 1, -1), PochhammerPole);
}

TEST_CASE("explicit form equals the recurrence family") {
  const std::vector<FamilyParams> grid{kBase, {make_rational(1, 2), make_rational(3, 2), make_rational(1, 4)}, {2, 1, 3}};
  for (const auto& p : grid) {
    const auto rec = generate(p, 16);
    for (std::size_t n = 0; n <= 16; ++n) CHECK(explicit_form(p, n) == rec[n]);
  }
}

TEST_CASE("recurrence extraction round trip") {
  const FamilyParams p{make_rational(1, 3), make_rational(2, 5), make_rational(5, 2)};
  const RecurrencePair r = recurrence_coeffs(p, 9);
  const auto polys = generate(p, 9);
  const auto data = extract_recurrence(polys);
  for (std::size_t n = 0; n < 9; ++n) {
    CHECK(data.b[n] == r.b[n]);
    CHECK(data.u[n] == r.u[n]);
  }
  auto broken = polys;
  broken[4] += P::Constant(1);
  broken[5] = broken[5] + P::Monomial(1);
  CHECK_THROWS_AS(extract_recurrence(broken), InconsistentIdentity);
}

TEST_CASE("weight: support, sign and the c = 0 form") {
  const WeightSpec inner = weight_spec(kBase);
  CHECK(inner.branch == WeightBranch::kInner);
  CHECK(inner.positive.lo == 0.5);
  CHECK(inner.in_open_support(0.7));
  CHECK_FALSE(inner.in_open_support(0.2));
  CHECK(weight(kBase, 0.7) > 0);
  CHECK(weight(kBase, -0.7) > 0);
  CHECK_THROWS_AS(weight(kBase, 0.2), OutsideSupport);
  CHECK_THROWS_AS(weight(kBase, 1.5), OutsideSupport);

  const FamilyParams outer{2, 1, 3};
  CHECK(weight_spec(outer).branch == WeightBranch::kOuter);
  CHECK(weight(outer, 2.0) > 0);
  CHECK(weight(outer, -2.0) > 0);
  CHECK_THROWS_AS(weight(outer, 0.5), OutsideSupport);

  CHECK_THROWS_AS(weight_spec({0, 0, 1}), InvalidParameters);

  // c = 0: theta(x)(1+x)(1-x^2)^{(a-1)/2}|x|^b.
  const FamilyParams little{make_rational(3, 2), make_rational(1, 2), 0};
  for (double x : {-0.9, -0.3, 0.2, 0.8}) {
    const double expected = (1 + x) * std::pow(1 - x * x, 0.25) * std::pow(std::fabs(x), 0.5);
    CHECK(weight(little, x) == doctest::Approx(expected).epsilon(1e-14));
  }
}
