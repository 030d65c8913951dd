#ifndef BIGM1_LIMITS_HPP_
#define BIGM1_LIMITS_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "bigm1/params.hpp"
#include "bigm1/polynomial.hpp"

namespace bigm1 {

// ---- q -> -1 ---------------------------------------------------------------
//
// Big q-Jacobi parameters on the curve q = -e^eps, a = -e^{eps alpha},
// b = -e^{eps beta}, c_q = c. Every factor 1 - (...)q^k is evaluated from
// its exponential form so that the O(eps) differences keep full precision.

struct QParams {
  double alpha = 0;
  double beta = 0;
  double c = 0;
  double eps = 0;
  double q = 0;
  double a = 0;
  double b = 0;
};

/// Requires eps > 0 and c != 0.
QParams make_qparams(const FamilyParams& params, double eps);

/// (A_n, C_n) of big q-Jacobi; C_0 = 0.
std::pair<double, double> q_jacobi_AC(const QParams& qp, std::size_t n);

/// u_n = A_{n-1} C_n (u_0 = 0) and b_n = 1 - A_n - C_n for n <= n_max.
struct QRecurrence {
  std::vector<double> u;
  std::vector<double> b;
};
QRecurrence q_recurrence(const QParams& qp, std::size_t n_max);

/// (q+1)^{-1} L p with L f = B(x)(f(qx) - f(x)) + D(x)(f(x/q) - f(x)),
///   B = aq(x-1)(bx-c)/x^2,  D = (x-aq)(x-cq)/x^2,
/// assembled from the monomial action. deg result <= deg p.
Polynomial<double> apply_Lq(const QParams& qp, const Polynomial<double>& p);

/// (q+1)^{-1} lambda_n with lambda_n = (q^{-n} - 1)(1 - ab q^{n+1}).
double q_eigenvalue_scaled(const QParams& qp, std::size_t n);

/// max |coeff| of (q+1)^{-1}(L P_n - lambda_n P_n), P_n from q_recurrence.
double q_eigen_residual(const QParams& qp, std::size_t n);

struct QConvergence {
  std::vector<double> eps;               // ascending sequence of decreasing eps
  std::vector<std::vector<double>> err;  // err[k][n] = |u_n(eps_k) - u_n^{(-1)}|, n = 1..n_max at index n-1
  std::vector<double> sup_err;           // max over n
  std::vector<double> op_err;            // max_n<=op_n_max, coeff |apply_Lq(x^n) - apply_L0(x^n)|
};

/// Errors of the recurrence coefficients and of the operator against their
/// q = -1 limits at each eps.
QConvergence q_convergence(const FamilyParams& params, const std::vector<double>& eps, std::size_t n_max,
                           std::size_t op_n_max);

// ---- Bannai-Ito, N -> infinity ---------------------------------------------

struct BIParams {
  Rational theta0;
  Rational h;
  Rational r1, r2, r3;
  Rational s_star;
  Rational s;  // from s + s* = r3 - r1 - r2
  long N = 0;
};

/// (A_n, C_n) of the Bannai-Ito recurrence. C_0 = 0. Requires 0 <= n <= N.
std::pair<Rational, Rational> bannai_ito_AC(const BIParams& bp, std::size_t n);

/// Monic data: b_n = theta0 - A_n - C_n, u_n = A_{n-1} C_n.
struct BIRecurrence {
  std::vector<Rational> u;
  std::vector<Rational> b;
};
BIRecurrence bi_recurrence(const BIParams& bp, std::size_t n_max);

/// x_i = theta0 + 2hi (i even), theta0 - 2h(i + 1 - s) (i odd).
Rational bi_grid(const BIParams& bp, long i);

/// r1 = alpha, s* = -alpha - beta, r2 = -N-1, h = (c+1)/(2 r2),
/// r3 = (c-1)/(2h), theta0 = 1. Requires N even and 0 < c < 1.
BIParams bi_limit_params(const FamilyParams& params, long N);

struct BIConvergence {
  std::vector<long> N;
  std::vector<Rational> err_A;  // max_{n <= n_max} |A_n(N) - A_n^{(-1)}|
  std::vector<Rational> err_C;
  std::vector<Rational> grid_dist;  // max distance of x_i, i <= r3, from the support
  std::vector<long> grid_points;    // number of grid points checked
};

/// Requires every N even and > 2 n_max.
BIConvergence bi_convergence(const FamilyParams& params, std::size_t n_max, const std::vector<long>& N_list);

}  // namespace bigm1

#endif  // BIGM1_LIMITS_HPP_
