#ifndef BIGM1_DUNKL_HPP_
#define BIGM1_DUNKL_HPP_

#include <cstddef>
#include <vector>

#include "bigm1/params.hpp"
#include "bigm1/polynomial.hpp"

namespace bigm1 {

/// Banded form of L0 in the monomial basis:
///   L0 x^n = xi[n] x^n + eta[n] x^{n-1} + zeta[n] x^{n-2},  n = 0..degree_bound.
/// Entries that would multiply negative powers are stored as zero.
struct TriangularAction {
  std::vector<Rational> xi;
  std::vector<Rational> eta;
  std::vector<Rational> zeta;

  std::size_t size() const { return xi.size(); }
};

/// Eigenvalue of L0 on the degree-n eigenpolynomial:
/// 2n for even n, -2(alpha + beta + n + 1) for odd n.
Rational eigenvalue_lambda(std::size_t n, const FamilyParams& params);

/// L0 on monomials up to degree_bound inclusive.
TriangularAction l0_matrix(const FamilyParams& params, std::size_t degree_bound);

/// Applies a banded action to p. Requires deg p < action.size().
Polynomial<Rational> apply(const TriangularAction& action, const Polynomial<Rational>& p);

/// The Dunkl-type operator
///   L0 f(x) = g0(x) (f(-x) - f(x)) - g1(x) f'(-x),
///   g0 = ((a+b+1)x^2 + (c a - b)x + c)/x^2,   g1 = 2(x-1)(x+c)/x,
/// evaluated term by term through its monomial action. The rational
/// functions g0, g1 are never formed, so the result stays exact and no
/// division by x occurs. deg(L0 p) <= deg p.
Polynomial<Rational> apply_L0(const FamilyParams& params, const Polynomial<Rational>& p);

/// phi_{2k} = (x^2 - 1)^k, phi_{2k+1} = (x - 1)(x^2 - 1)^k. Monic of degree n.
Polynomial<Rational> phi_basis(std::size_t n);

/// Subdiagonal of L0 in the phi basis: L0 phi_n = lambda_n phi_n + eta_n phi_{n-1}.
/// eta_n = 2n(c-1) for even n, -2(c+1)(alpha+n) for odd n. Requires n >= 1.
Rational eta_phi(std::size_t n, const FamilyParams& params);

/// Coefficients A_{n,s}, s = 0..n, of the monic eigenpolynomial in the phi
/// basis, normalized by A_{n,n} = 1 and filled downward with
///   A_{n,s} = A_{n,s+1} eta_{s+1} / (lambda_n - lambda_s).
/// Throws DegenerateSpectrum if lambda_n == lambda_s for some s < n.
std::vector<Rational> phi_expansion(const FamilyParams& params, std::size_t n);

/// Sum_s A_{n,s} phi_s: the monic eigenpolynomial of L0 of degree n.
Polynomial<Rational> pn_via_phi(const FamilyParams& params, std::size_t n);

}  // namespace bigm1

#endif  // BIGM1_DUNKL_HPP_
