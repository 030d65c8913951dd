#ifndef BIGM1_TRANSFORMS_HPP_
#define BIGM1_TRANSFORMS_HPP_

#include <cstddef>
#include <vector>

#include "bigm1/params.hpp"
#include "bigm1/polynomial.hpp"

namespace bigm1 {

// Spectral transforms of a generic monic family
//   P_{n+1} + b_n P_n + u_n P_{n-1} = x P_n.
// Everything here is exact; identities that fail throw InconsistentIdentity.

struct MonicOPS {
  std::vector<Polynomial<Rational>> polys;  // P_0 .. P_N
  std::vector<Rational> u;                  // u_0 (= 0) .. u_{N-1}
  std::vector<Rational> b;                  // b_0 .. b_{N-1}

  std::size_t size() const { return polys.size(); }
};

/// Builds P_0..P_n_max from recurrence data. Throws InvalidParameters if some
/// u_n (1 <= n < n_max) vanishes.
MonicOPS make_monic_ops(const std::vector<Rational>& b, const std::vector<Rational>& u, std::size_t n_max);

/// Recovers the recurrence data of a stored monic family, checking it.
MonicOPS monic_ops_from_polys(std::vector<Polynomial<Rational>> polys);

struct ChristoffelResult {
  MonicOPS Q;              // Q_0 .. Q_{N-1}
  std::vector<Rational> A;  // A_0 .. A_{N-1}
};

/// Q_n = (P_{n+1} - A_n P_n)/(x - nu2), A_n = P_{n+1}(nu2)/P_n(nu2).
/// Throws InvalidParameters if P_n(nu2) = 0 for some n < N, and
/// InconsistentIdentity if a division leaves a remainder.
ChristoffelResult christoffel(const MonicOPS& P, const Rational& nu2);

/// B_n = u_n / A_{n-1} for n >= 1, B_0 = 0.
std::vector<Rational> geronimus_coefficients(const MonicOPS& P, const std::vector<Rational>& A);

/// P_n = Q_n - B_n Q_{n-1}, n = 0..Q.size()-1, then checks
///   u_n = B_n A_{n-1},  b_n = -A_n - B_n + nu2
/// against the recurrence of the rebuilt family.
MonicOPS geronimus_reconstruct(const MonicOPS& Q, const std::vector<Rational>& B, const std::vector<Rational>& A,
                               const Rational& nu2);

struct InterleavedOPS {
  std::vector<Polynomial<Rational>> R;  // R_0 .. R_{2N}
  Rational nu;
  std::vector<Rational> v;  // v_0 (= 0) .. v_{2N-1}
};

/// R_{2n} = P_n(x^2), R_{2n+1} = (x - nu) Q_n(x^2), v_{2n} = -B_n,
/// v_{2n+1} = -A_n, where Q is the Christoffel transform of P at nu^2.
/// Verifies R_{n+1} + (-1)^n nu R_n + v_n R_{n-1} = x R_n and the two derived
/// recurrences of P and Q written in terms of v.
InterleavedOPS interleave(const MonicOPS& P, const ChristoffelResult& ct, const Rational& nu);

struct InterleavedMoments {
  std::vector<Rational> r;   // r_0 .. r_{2K-1}
  std::vector<Rational> tc;  // moments of Q: tc_0 .. tc_{K-2}
};

/// r_{2n} = c_n, r_{2n+1} = nu c_n, tc_n = (c_{n+1} - nu^2 c_n)/(c_1 - nu^2).
/// Requires c_0 = 1. Throws InvalidParameters if c_1 = nu^2.
InterleavedMoments moments_interleaved(const Rational& nu, const std::vector<Rational>& c_moments);

struct JacobiInstance {
  Rational xi, eta, c;
  MonicOPS P;  // from the 2F1 form on [c^2, 1]
  MonicOPS Q;  // companion family with xi -> xi + 1
};

/// Monic shifted Jacobi polynomials
///   P_n(x) = (1-c^2)^n (xi+1)_n/(n+xi+eta+1)_n 2F1(-n, n+xi+eta+1; xi+1; (1-x)/(1-c^2))
/// and the companion Q_n (xi -> xi+1). Requires xi, eta > -1 and c > 0, c != 1;
/// the orthogonality interval [c^2, 1] needs c < 1.
JacobiInstance jacobi_shifted_family(const Rational& xi, const Rational& eta, const Rational& c, std::size_t n_max);

/// Closed forms of the Christoffel/Geronimus coefficients at nu = 1.
Rational jacobi_A(const Rational& xi, const Rational& eta, const Rational& c, std::size_t n);
Rational jacobi_B(const Rational& xi, const Rational& eta, const Rational& c, std::size_t n);

struct GeronimusLink {
  std::vector<Rational> G;   // G_0 (= 0) .. G_{n_max}
  std::vector<Rational> mu;  // mu from each n = 1 .. n_max - 1
  Rational mu_value;
  InterleavedOPS R;
};

/// G_n = (1-c)n/(2n+a+b) (n even), -(1+c)(n+a)/(2n+a+b) (n odd).
Rational geronimus_G(const FamilyParams& params, std::size_t n);

/// Builds R_n from the Jacobi instance with xi = (a-1)/2, eta = (b+1)/2,
/// checks P_n = R_n - G_n R_{n-1} exactly for n <= n_max against generate(),
/// and evaluates mu = G_{n+1} + (-1)^n + v_n/G_n. Throws InconsistentIdentity
/// if mu depends on n. Requires n_max >= 2.
GeronimusLink geronimus_link(const FamilyParams& params, std::size_t n_max);

}  // namespace bigm1

#endif  // BIGM1_TRANSFORMS_HPP_
