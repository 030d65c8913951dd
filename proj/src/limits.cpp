#include "bigm1/limits.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bigm1/dunkl.hpp"
#include "bigm1/family.hpp"
#include "bigm1/recurrence.hpp"

namespace bigm1 {

namespace {

// 1 - coef * e^t, with expm1 when coef == 1.
double OneMinus(double coef, double t) {
  if (coef == 1) return -std::expm1(t);
  return 1 - coef * std::exp(t);
}

double Sign(std::size_t k) { return k % 2 == 0 ? 1.0 : -1.0; }

// 1 - a q^k, 1 - ab q^k, 1 - b q^k, 1 - c q^k, 1 - q^k, 1 - ab q^k / c
double OneMinusAQ(const QParams& p, std::size_t k) { return OneMinus(-Sign(k), p.eps * (p.alpha + k)); }
double OneMinusABQ(const QParams& p, std::size_t k) { return OneMinus(Sign(k), p.eps * (p.alpha + p.beta + k)); }
double OneMinusBQ(const QParams& p, std::size_t k) { return OneMinus(-Sign(k), p.eps * (p.beta + k)); }
double OneMinusCQ(const QParams& p, std::size_t k) { return OneMinus(p.c * Sign(k), p.eps * k); }
double OneMinusQ(const QParams& p, std::size_t k) { return OneMinus(Sign(k), p.eps * k); }
double OneMinusABOverCQ(const QParams& p, std::size_t k) {
  return OneMinus(Sign(k) / p.c, p.eps * (p.alpha + p.beta + k));
}

double NonZero(double d, const char* what, std::size_t n) {
  if (d == 0) throw InvalidParameters(std::string("vanishing denominator in ") + what + " at n = " + std::to_string(n));
  return d;
}

Rational Abs(const Rational& q) { return abs(q); }

Rational Floor(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(f);
}

Rational DistanceToSupport(const Rational& x, const Rational& c) {
  const Rational ax = Abs(x);
  if (ax >= c && ax <= 1) return 0;
  if (ax > 1) return ax - 1;
  return c - ax;
}

}  // namespace

QParams make_qparams(const FamilyParams& params, double eps) {
  if (!(eps > 0)) throw InvalidParameters("eps must be positive");
  if (params.c == 0) throw InvalidParameters("big q-Jacobi coefficients need c != 0");
  QParams qp;
  qp.alpha = to_double(params.alpha);
  qp.beta = to_double(params.beta);
  qp.c = to_double(params.c);
  qp.eps = eps;
  qp.q = -std::exp(eps);
  qp.a = -std::exp(eps * qp.alpha);
  qp.b = -std::exp(eps * qp.beta);
  return qp;
}

std::pair<double, double> q_jacobi_AC(const QParams& qp, std::size_t n) {
  const double A = OneMinusAQ(qp, n + 1) * OneMinusABQ(qp, n + 1) * OneMinusCQ(qp, n + 1) /
                   NonZero(OneMinusABQ(qp, 2 * n + 1) * OneMinusABQ(qp, 2 * n + 2), "A_n", n);
  if (n == 0) return {A, 0.0};
  // a c q^{n+1} = (-1)^n c e^{eps(alpha + n + 1)}
  const double acq = Sign(n) * qp.c * std::exp(qp.eps * (qp.alpha + n + 1));
  const double C = -acq * OneMinusQ(qp, n) * OneMinusABOverCQ(qp, n) * OneMinusBQ(qp, n) /
                   NonZero(OneMinusABQ(qp, 2 * n + 1) * OneMinusABQ(qp, 2 * n), "C_n", n);
  return {A, C};
}

QRecurrence q_recurrence(const QParams& qp, std::size_t n_max) {
  QRecurrence r;
  double prev_A = 0;
  for (std::size_t n = 0; n <= n_max; ++n) {
    const auto [A, C] = q_jacobi_AC(qp, n);
    r.u.push_back(n == 0 ? 0.0 : prev_A * C);
    r.b.push_back(1 - A - C);
    prev_A = A;
  }
  return r;
}

Polynomial<double> apply_Lq(const QParams& qp, const Polynomial<double>& p) {
  const double e = qp.eps;
  const double q = qp.q, a = qp.a, b = qp.b, c = qp.c;
  const double inv = 1 / -std::expm1(e);  // 1/(q+1)

  // Numerators of B and D in ascending powers of x.
  const double B[3] = {a * q * c, -a * q * (b + c), a * q * b};
  const double D[3] = {a * c * q * q, -(a + c) * q, 1};
  // B_k + D_k in O(eps)-accurate form.
  const double ea1 = std::exp(e * (qp.alpha + 1));
  const double S[3] = {c * ea1 * -std::expm1(e), ea1 * std::expm1(e * qp.beta) - c * std::exp(e) * std::expm1(e * qp.alpha),
                       -std::expm1(e * (qp.alpha + qp.beta + 1))};

  const auto& coeffs = p.coeffs();
  std::vector<double> out(coeffs.size(), 0.0);
  for (std::size_t n = 1; n < coeffs.size(); ++n) {
    const double pn = coeffs[n];
    if (pn == 0) continue;
    const double ne = e * static_cast<double>(n);
    for (std::size_t k = 0; k < 3; ++k) {
      if (n + k < 2) continue;  // the x^{-1} term cancels identically
      double v;
      if (n % 2 == 0) {
        // B (q^n - 1) + D (q^{-n} - 1)
        v = B[k] * std::expm1(ne) + D[k] * std::expm1(-ne);
      } else {
        // -(B (e^{ne} + 1) + D (e^{-ne} + 1))
        v = -(S[k] * (1 + std::cosh(ne)) + (B[k] - D[k]) * std::sinh(ne));
      }
      out[n + k - 2] += pn * v * inv;
    }
  }
  return Polynomial<double>(std::move(out));
}

double q_eigenvalue_scaled(const QParams& qp, std::size_t n) {
  // q^{-n} - 1 = -(1 - (-1)^n e^{-n eps})
  const double first = -OneMinus(Sign(n), -qp.eps * static_cast<double>(n));
  return first * OneMinusABQ(qp, n + 1) / -std::expm1(qp.eps);
}

double q_eigen_residual(const QParams& qp, std::size_t n) {
  const QRecurrence rec = q_recurrence(qp, n);
  const auto polys = monic_from_recurrence(rec.b, rec.u, n);
  const Polynomial<double>& pn = polys[n];
  return max_abs_coeff(apply_Lq(qp, pn) - q_eigenvalue_scaled(qp, n) * pn);
}

QConvergence q_convergence(const FamilyParams& params, const std::vector<double>& eps, std::size_t n_max,
                           std::size_t op_n_max) {
  validate_family(params);
  const RecurrencePair limit = recurrence_coeffs(params, n_max);
  QConvergence out;
  out.eps = eps;
  for (double e : eps) {
    const QParams qp = make_qparams(params, e);
    const QRecurrence rec = q_recurrence(qp, n_max);
    std::vector<double> err;
    for (std::size_t n = 1; n <= n_max; ++n) err.push_back(std::fabs(rec.u[n] - to_double(limit.u[n])));
    out.sup_err.push_back(err.empty() ? 0.0 : *std::max_element(err.begin(), err.end()));
    out.err.push_back(std::move(err));

    double op = 0;
    for (std::size_t n = 0; n <= op_n_max; ++n) {
      const Polynomial<double> lq = apply_Lq(qp, Polynomial<double>::Monomial(n));
      const Polynomial<double> l0 = to_double(apply_L0(params, Polynomial<Rational>::Monomial(n)));
      op = std::max(op, max_abs_coeff(lq - l0));
    }
    out.op_err.push_back(op);
  }
  return out;
}

std::pair<Rational, Rational> bannai_ito_AC(const BIParams& bp, std::size_t n) {
  if (static_cast<long>(n) > bp.N) throw InvalidParameters("Bannai-Ito index exceeds N");
  const Rational nn(static_cast<long>(n));
  const Rational two_h = 2 * bp.h;
  const Rational den_A = 2 * nn + 2 - bp.s_star;
  if (den_A == 0) throw InvalidParameters("vanishing denominator in Bannai-Ito A_n at n = " + std::to_string(n));
  Rational A, C;
  if (n % 2 == 0) {
    A = two_h * (nn + 1 + bp.r1) * (nn + 1 + bp.r2) / den_A;
  } else {
    A = two_h * (nn + 1 - bp.s_star) * (nn + 1 - bp.r3) / den_A;
  }
  if (n == 0) return {A, Rational(0)};
  const Rational den_C = 2 * nn - bp.s_star;
  if (den_C == 0) throw InvalidParameters("vanishing denominator in Bannai-Ito C_n at n = " + std::to_string(n));
  if (n % 2 == 0) {
    C = -two_h * nn * (nn - bp.s_star + bp.r3) / den_C;
  } else {
    C = -two_h * (nn - bp.r1 - bp.s_star) * (nn - bp.r2 - bp.s_star) / den_C;
  }
  return {A, C};
}

BIRecurrence bi_recurrence(const BIParams& bp, std::size_t n_max) {
  BIRecurrence r;
  Rational prev_A = 0;
  for (std::size_t n = 0; n <= n_max; ++n) {
    auto [A, C] = bannai_ito_AC(bp, n);
    r.u.push_back(n == 0 ? Rational(0) : Rational(prev_A * C));
    r.b.push_back(bp.theta0 - A - C);
    prev_A = A;
  }
  return r;
}

Rational bi_grid(const BIParams& bp, long i) {
  if (i < 0 || i > bp.N) throw InvalidParameters("grid index outside 0..N");
  const Rational ii(i);
  if (i % 2 == 0) return bp.theta0 + 2 * bp.h * ii;
  return bp.theta0 - 2 * bp.h * (ii + 1 - bp.s);
}

BIParams bi_limit_params(const FamilyParams& params, long N) {
  validate_family(params);
  if (N <= 0 || N % 2 != 0) throw InvalidParameters("the limit study uses even N > 0");
  if (!(params.c < 1)) throw InvalidParameters("the Bannai-Ito limit needs 0 < c < 1");
  BIParams bp;
  bp.N = N;
  bp.theta0 = 1;
  bp.r1 = params.alpha;
  bp.s_star = -params.alpha - params.beta;
  bp.r2 = Rational(-N - 1);
  bp.h = (params.c + 1) / (2 * bp.r2);
  bp.r3 = (params.c - 1) / (2 * bp.h);
  bp.s = bp.r3 - bp.r1 - bp.r2 - bp.s_star;
  return bp;
}

BIConvergence bi_convergence(const FamilyParams& params, std::size_t n_max, const std::vector<long>& N_list) {
  BIConvergence out;
  for (long N : N_list) {
    if (N <= static_cast<long>(2 * n_max)) throw InvalidParameters("each N must exceed 2 n_max");
    const BIParams bp = bi_limit_params(params, N);
    Rational ea = 0, ec = 0;
    for (std::size_t n = 0; n <= n_max; ++n) {
      const auto [A, C] = bannai_ito_AC(bp, n);
      const CoefficientPair lim = limit_AC(params, n);
      ea = std::max(ea, Abs(A - lim.A));
      ec = std::max(ec, Abs(C - lim.C));
    }
    const long i_max = std::min<long>(N, Floor(bp.r3).get_num().get_si());
    Rational dist = 0;
    for (long i = 0; i <= i_max; ++i) dist = std::max(dist, DistanceToSupport(bi_grid(bp, i), params.c));
    out.N.push_back(N);
    out.err_A.push_back(ea);
    out.err_C.push_back(ec);
    out.grid_dist.push_back(dist);
    out.grid_points.push_back(i_max + 1);
  }
  return out;
}

}  // namespace bigm1
