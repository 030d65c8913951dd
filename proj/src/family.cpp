#include "bigm1/family.hpp"

#include <cmath>
#include <string>

#include "bigm1/recurrence.hpp"

namespace bigm1 {

namespace {

Rational Ratio(const Rational& num, const Rational& den, const char* what, std::size_t n) {
  if (den == 0) throw InvalidParameters(std::string("vanishing denominator in ") + what + " at n = " + std::to_string(n));
  return num / den;
}

Rational ClosedFormU(const FamilyParams& p, std::size_t n) {
  const Rational nn(static_cast<long>(n));
  const Rational s = p.alpha + p.beta + 2 * nn;
  if (n % 2 == 0) {
    Rational one_minus_c = 1 - p.c;
    return Ratio(one_minus_c * one_minus_c * nn * (p.alpha + p.beta + nn), s * s, "u_n", n);
  }
  Rational one_plus_c = 1 + p.c;
  return Ratio(one_plus_c * one_plus_c * (p.alpha + nn) * (p.beta + nn), s * s, "u_n", n);
}

Rational ClosedFormB(const FamilyParams& p, std::size_t n) {
  const Rational nn(static_cast<long>(n));
  const Rational s = p.alpha + p.beta + 2 * nn;
  if (n % 2 == 0) {
    Rational mid = (n == 0) ? Rational(0) : Ratio((p.c - 1) * nn, s, "b_n", n);
    return -p.c + mid + Ratio((1 + p.c) * (p.beta + nn + 1), s + 2, "b_n", n);
  }
  return p.c + Ratio((1 - p.c) * (nn + 1), s + 2, "b_n", n) - Ratio((p.c + 1) * (p.beta + nn), s, "b_n", n);
}

}  // namespace

CoefficientPair limit_AC(const FamilyParams& p, std::size_t n) {
  const Rational nn(static_cast<long>(n));
  const Rational s = p.alpha + p.beta + 2 * nn;
  CoefficientPair out;
  if (n % 2 == 0) {
    out.A = Ratio((p.c + 1) * (p.alpha + nn + 1), s + 2, "A_n", n);
    out.C = (n == 0) ? Rational(0) : Ratio((1 - p.c) * nn, s, "C_n", n);
  } else {
    out.A = Ratio((1 - p.c) * (p.alpha + p.beta + nn + 1), s + 2, "A_n", n);
    out.C = Ratio((1 + p.c) * (p.beta + nn), s, "C_n", n);
  }
  return out;
}

RecurrencePair recurrence_coeffs(const FamilyParams& params, std::size_t n_max) {
  RecurrencePair r;
  r.u.reserve(n_max + 1);
  r.b.reserve(n_max + 1);
  CoefficientPair prev{};
  for (std::size_t n = 0; n <= n_max; ++n) {
    CoefficientPair ac = limit_AC(params, n);
    Rational u = (n == 0) ? Rational(0) : ClosedFormU(params, n);
    Rational b = ClosedFormB(params, n);
    if (n >= 1 && u != prev.A * ac.C)
      throw InconsistentIdentity("u_" + std::to_string(n) + " != A_{n-1} C_n at " + describe(params));
    if (b != 1 - ac.A - ac.C)
      throw InconsistentIdentity("b_" + std::to_string(n) + " != 1 - A_n - C_n at " + describe(params));
    r.u.push_back(std::move(u));
    r.b.push_back(std::move(b));
    prev = std::move(ac);
  }
  return r;
}

std::vector<Polynomial<Rational>> generate(const FamilyParams& params, std::size_t n_max) {
  validate_family(params);
  RecurrencePair r = recurrence_coeffs(params, n_max);
  return monic_from_recurrence(r.b, r.u, n_max);
}

Rational pochhammer(const Rational& a, std::size_t k) {
  Rational out(1);
  for (std::size_t i = 0; i < k; ++i) out *= a + static_cast<long>(i);
  return out;
}

std::vector<Rational> hyp_2f1_coefficients(std::size_t m, const Rational& b, const Rational& c) {
  std::vector<Rational> t;
  t.reserve(m + 1);
  t.emplace_back(1);
  const Rational minus_m(-static_cast<long>(m));
  for (std::size_t s = 0; s < m; ++s) {
    const Rational ss(static_cast<long>(s));
    Rational den = (c + ss) * (ss + 1);
    if (den == 0)
      throw PochhammerPole("(c)_s vanishes in 2F1(-" + std::to_string(m) + ", " + to_string(b) + "; " + to_string(c) +
                           ") at s = " + std::to_string(s + 1));
    t.push_back(t.back() * (minus_m + ss) * (b + ss) / den);
  }
  return t;
}

Rational hyp_2f1_terminating(std::size_t m, const Rational& b, const Rational& c, const Rational& z) {
  return eval(Polynomial<Rational>(hyp_2f1_coefficients(m, b, c)), z);
}

Polynomial<Rational> hyp_2f1_terminating(std::size_t m, const Rational& b, const Rational& c,
                                         const Polynomial<Rational>& z) {
  return compose(Polynomial<Rational>(hyp_2f1_coefficients(m, b, c)), z);
}

Rational kappa(const FamilyParams& p, std::size_t n) {
  const Rational nn(static_cast<long>(n));
  const Rational one_minus_c2 = 1 - p.c * p.c;
  if (n % 2 == 0) {
    const std::size_t k = n / 2;
    Rational den = pochhammer((nn + p.alpha + p.beta + 2) / 2, k);
    if (den == 0) throw PochhammerPole("kappa_n denominator vanishes at n = " + std::to_string(n));
    Rational pw(1);
    for (std::size_t i = 0; i < k; ++i) pw *= one_minus_c2;
    return pw * pochhammer((p.alpha + 1) / 2, k) / den;
  }
  const std::size_t k = (n + 1) / 2;
  Rational den = pochhammer((nn + p.alpha + p.beta + 1) / 2, k);
  if (den == 0) throw PochhammerPole("kappa_n denominator vanishes at n = " + std::to_string(n));
  Rational pw(1);
  for (std::size_t i = 0; i + 1 < k; ++i) pw *= one_minus_c2;
  return (1 + p.c) * pw * pochhammer((p.alpha + 1) / 2, k) / den;
}

Polynomial<Rational> explicit_form(const FamilyParams& p, std::size_t n) {
  validate_family(p);
  const Rational nn(static_cast<long>(n));
  const Rational inv = 1 / (1 - p.c * p.c);
  const Polynomial<Rational> z{inv, Rational(0), Rational(-inv)};
  const Polynomial<Rational> one_minus_x{Rational(1), Rational(-1)};
  const Rational prefactor_den = (1 + p.c) * (p.alpha + 1);
  if (prefactor_den == 0) throw PochhammerPole("(1 + c)(alpha + 1) vanishes");

  Polynomial<Rational> series;
  if (n % 2 == 0) {
    const Rational upper = (nn + p.alpha + p.beta + 2) / 2;
    series = hyp_2f1_terminating(n / 2, upper, (p.alpha + 1) / 2, z);
    if (n >= 2) {
      Rational scale = nn / prefactor_den;
      series += scale * (one_minus_x * hyp_2f1_terminating(n / 2 - 1, upper, (p.alpha + 3) / 2, z));
    }
  } else {
    const std::size_t m = (n - 1) / 2;
    series = hyp_2f1_terminating(m, (nn + p.alpha + p.beta + 1) / 2, (p.alpha + 1) / 2, z);
    Rational scale = (p.alpha + p.beta + nn + 1) / prefactor_den;
    series -= scale * (one_minus_x * hyp_2f1_terminating(m, (nn + p.alpha + p.beta + 3) / 2, (p.alpha + 3) / 2, z));
  }
  return kappa(p, n) * series;
}

bool WeightSpec::in_open_support(double x) const {
  return (x > negative.lo && x < negative.hi) || (x > positive.lo && x < positive.hi);
}

WeightSpec weight_spec(const FamilyParams& params) {
  if (!(params.alpha > -1) || !(params.beta > -1))
    throw InvalidParameters("weight requires alpha, beta > -1 (" + describe(params) + ")");
  if (params.c < 0) throw InvalidParameters("weight requires c >= 0 (" + describe(params) + ")");
  if (params.c == 1) throw InvalidParameters("c = 1 is degenerate: the support collapses to {-1, 1}");
  const double c = to_double(params.c);
  if (params.c < 1) return {params, {-1.0, -c}, {c, 1.0}, WeightBranch::kInner};
  return {params, {-c, -1.0}, {1.0, c}, WeightBranch::kOuter};
}

double weight(const FamilyParams& params, double x) {
  const WeightSpec spec = weight_spec(params);
  if (!spec.in_open_support(x))
    throw OutsideSupport("x = " + std::to_string(x) + " is outside the open support for " + describe(params));
  const double a = to_double(params.alpha);
  const double b = to_double(params.beta);
  const double c = to_double(params.c);
  const double theta = x > 0 ? 1.0 : -1.0;
  const double x2 = x * x;
  if (spec.branch == WeightBranch::kInner)
    return theta * (x + 1) * (x - c) * std::pow(1 - x2, (a - 1) / 2) * std::pow(x2 - c * c, (b - 1) / 2);
  return theta * (x + 1) * (c - x) * std::pow(x2 - 1, (a - 1) / 2) * std::pow(c * c - x2, (b - 1) / 2);
}

}  // namespace bigm1
