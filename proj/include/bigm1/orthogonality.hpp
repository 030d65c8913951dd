#ifndef BIGM1_ORTHOGONALITY_HPP_
#define BIGM1_ORTHOGONALITY_HPP_

#include <cstddef>
#include <vector>

#include "bigm1/params.hpp"
#include "bigm1/polynomial.hpp"
#include "bigm1/quadrature.hpp"

namespace bigm1 {

// Integrals over the two-interval support are folded onto the positive
// interval with x -> -x, then u = x^2 moves the endpoint singularities into
// a Gauss-Jacobi weight on [0,1]. The result is a rule of the form
//   int_Gamma f(x) w(x) dx = sum_j plus[j] f(x[j]) + minus[j] f(-x[j]),
// exact whenever f is a polynomial of degree < 2 * size().
struct FoldedRule {
  std::vector<double> x;  // positive abscissae sqrt(u_j)
  std::vector<double> plus;
  std::vector<double> minus;

  std::size_t size() const { return x.size(); }
};

/// Folded rule for the big -1 Jacobi weight, either branch.
FoldedRule folded_rule(const FamilyParams& params, std::size_t count);

/// Folded rule for W(x)/(x - mu) with
///   W(x) = theta(x)(1+x)(1-x^2)^xi (x^2-c^2)^eta,  xi = (a-1)/2, eta = (b+1)/2.
/// mu = -c reproduces the big -1 Jacobi measure; mu = +c is the wrong
/// Geronimus partner and serves as a negative control. Requires 0 < c < 1 and
/// mu = -c or mu = +c (the only choices for which the rule stays exact).
FoldedRule geronimus_rule(const FamilyParams& params, const Rational& mu, std::size_t count);

double integrate(const FoldedRule& rule, const Polynomial<Rational>& f);

enum class MomentMethod { kAnalytic, kQuadrature };

/// m_k = int_Gamma x^k w(x) dx.
///
/// kAnalytic expands the folded integrand in the mapped variable t with exact
/// rational coefficients and sums Beta integrals; kQuadrature applies the
/// folded Gauss-Jacobi rule to x^k. The two paths share no code beyond the
/// exponent bookkeeping.
double moment(const FamilyParams& params, std::size_t k, MomentMethod method = MomentMethod::kAnalytic);

/// <p, q> = int_Gamma p q w dx with a rule large enough to be exact.
double inner_product(const FamilyParams& params, const Polynomial<Rational>& p, const Polynomial<Rational>& q);

struct GramReport {
  std::size_t n_max = 0;
  double offdiag_max = 0;     // max |G_nm| / sqrt(G_nn G_mm), n != m
  double diag_ratio_err = 0;  // max |G_nn / G_{n-1,n-1} - u_n| / u_n
  double tol_off = 0;
  double tol_diag = 0;
  bool pass = false;
  std::vector<double> diag;  // G_nn, n = 0..n_max
};

inline constexpr double kDefaultTolOff = 1e-10;
inline constexpr double kDefaultTolDiag = 1e-9;

/// Gram matrix of generate(params, n_max) under the weight.
/// pass <=> offdiag_max < tol_off && diag_ratio_err < tol_diag.
GramReport gram_check(const FamilyParams& params, std::size_t n_max, double tol_off = kDefaultTolOff,
                      double tol_diag = kDefaultTolDiag);

/// |int_Gamma P_1 W(x)/(x - mu) dx| / sqrt(<1,1> <P_1,P_1>).
double point_mass_residual(const FamilyParams& params, const Rational& mu);

/// point_mass_residual at mu = -c. A vanishing residual means no point mass
/// is needed at x = -c.
double point_mass_test(const FamilyParams& params);

}  // namespace bigm1

#endif  // BIGM1_ORTHOGONALITY_HPP_
