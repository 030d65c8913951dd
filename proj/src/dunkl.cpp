#include "bigm1/dunkl.hpp"

#include <string>

namespace bigm1 {

namespace {

struct MonomialImage {
  Rational diag;
  Rational sub1;
  Rational sub2;
};

// Expansion of g0(x)(f(-x)-f(x)) - g1(x) f'(-x) at f = x^n.
//   n even: 2n(x-1)(x+c) x^{n-2}
//   n odd : -2(a+b+n+1) x^n + 2(b - c a + n(1-c)) x^{n-1} + 2(n-1)c x^{n-2}
MonomialImage L0OnMonomial(const FamilyParams& p, std::size_t n) {
  const Rational nn(static_cast<long>(n));
  if (n % 2 == 0) {
    if (n == 0) return {0, 0, 0};
    return {2 * nn, 2 * nn * (p.c - 1), -2 * nn * p.c};
  }
  Rational diag = -2 * (p.alpha + p.beta + nn + 1);
  Rational sub1 = 2 * (p.beta - p.c * p.alpha + nn * (1 - p.c));
  Rational sub2 = 2 * (nn - 1) * p.c;
  return {diag, sub1, sub2};
}

}  // namespace

Rational eigenvalue_lambda(std::size_t n, const FamilyParams& params) {
  const Rational nn(static_cast<long>(n));
  if (n % 2 == 0) return 2 * nn;
  return -2 * (params.alpha + params.beta + nn + 1);
}

TriangularAction l0_matrix(const FamilyParams& params, std::size_t degree_bound) {
  TriangularAction a;
  a.xi.reserve(degree_bound + 1);
  a.eta.reserve(degree_bound + 1);
  a.zeta.reserve(degree_bound + 1);
  for (std::size_t n = 0; n <= degree_bound; ++n) {
    MonomialImage m = L0OnMonomial(params, n);
    a.xi.push_back(m.diag);
    a.eta.push_back(n >= 1 ? m.sub1 : Rational(0));
    a.zeta.push_back(n >= 2 ? m.sub2 : Rational(0));
  }
  return a;
}

Polynomial<Rational> apply(const TriangularAction& action, const Polynomial<Rational>& p) {
  const auto& c = p.coeffs();
  if (c.size() > action.size())
    throw InvalidParameters("polynomial of degree " + std::to_string(p.degree()) + " exceeds operator size " +
                            std::to_string(action.size()));
  std::vector<Rational> out(c.size(), Rational(0));
  for (std::size_t n = 0; n < c.size(); ++n) {
    if (c[n] == 0) continue;
    out[n] += action.xi[n] * c[n];
    if (n >= 1) out[n - 1] += action.eta[n] * c[n];
    if (n >= 2) out[n - 2] += action.zeta[n] * c[n];
  }
  return Polynomial<Rational>(std::move(out));
}

Polynomial<Rational> apply_L0(const FamilyParams& params, const Polynomial<Rational>& p) {
  const auto& c = p.coeffs();
  std::vector<Rational> out(c.size(), Rational(0));
  for (std::size_t n = 0; n < c.size(); ++n) {
    if (c[n] == 0) continue;
    MonomialImage m = L0OnMonomial(params, n);
    out[n] += m.diag * c[n];
    if (n >= 1) out[n - 1] += m.sub1 * c[n];
    if (n >= 2) out[n - 2] += m.sub2 * c[n];
  }
  return Polynomial<Rational>(std::move(out));
}

Polynomial<Rational> phi_basis(std::size_t n) {
  const Polynomial<Rational> x2m1{Rational(-1), Rational(0), Rational(1)};
  Polynomial<Rational> out = Polynomial<Rational>::Constant(1);
  for (std::size_t k = 0; k < n / 2; ++k) out *= x2m1;
  if (n % 2 == 1) out *= Polynomial<Rational>::Linear(1);
  return out;
}

Rational eta_phi(std::size_t n, const FamilyParams& params) {
  if (n == 0) throw InvalidParameters("eta_phi is defined for n >= 1");
  const Rational nn(static_cast<long>(n));
  if (n % 2 == 0) return 2 * nn * (params.c - 1);
  return -2 * (params.c + 1) * (params.alpha + nn);
}

std::vector<Rational> phi_expansion(const FamilyParams& params, std::size_t n) {
  std::vector<Rational> a(n + 1, Rational(0));
  a[n] = 1;
  const Rational lambda_n = eigenvalue_lambda(n, params);
  for (std::size_t s = n; s-- > 0;) {
    Rational gap = lambda_n - eigenvalue_lambda(s, params);
    if (gap == 0)
      throw DegenerateSpectrum("lambda_" + std::to_string(n) + " == lambda_" + std::to_string(s) + " at " +
                               describe(params));
    a[s] = a[s + 1] * eta_phi(s + 1, params) / gap;
  }
  return a;
}

Polynomial<Rational> pn_via_phi(const FamilyParams& params, std::size_t n) {
  const std::vector<Rational> a = phi_expansion(params, n);
  Polynomial<Rational> out;
  // phi_s built incrementally: phi_{s+1} = phi_s * (x - 1) for even s, phi_s * (x + 1) for odd s.
  Polynomial<Rational> phi = Polynomial<Rational>::Constant(1);
  const Polynomial<Rational> xm1 = Polynomial<Rational>::Linear(1);
  const Polynomial<Rational> xp1 = Polynomial<Rational>::Linear(-1);
  for (std::size_t s = 0; s <= n; ++s) {
    if (a[s] != 0) out += a[s] * phi;
    phi *= (s % 2 == 0) ? xm1 : xp1;
  }
  return out;
}

}  // namespace bigm1
