#ifndef BIGM1_FAMILY_HPP_
#define BIGM1_FAMILY_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "bigm1/params.hpp"
#include "bigm1/polynomial.hpp"

namespace bigm1 {

/// Monic recurrence data of the big -1 Jacobi family; u[0] is unused and zero.
struct RecurrencePair {
  std::vector<Rational> u;  // u_0 .. u_{n_max}
  std::vector<Rational> b;  // b_0 .. b_{n_max}
};

struct CoefficientPair {
  Rational A;
  Rational C;
};

/// Parity-dependent pair (A_n, C_n) whose products give the recurrence:
///   A_n = (c+1)(a+n+1)/(a+b+2n+2)   (n even),  (1-c)(a+b+n+1)/(a+b+2n+2)   (n odd)
///   C_n = (1-c)n/(a+b+2n)            (n even),  (1+c)(b+n)/(a+b+2n)         (n odd)
/// C_0 = 0 for every parameter choice. Evaluated for any (a, b, c); throws
/// InvalidParameters only on a vanishing denominator.
CoefficientPair limit_AC(const FamilyParams& params, std::size_t n);

/// u_n and b_n from their closed forms for n <= n_max, each cross-checked
/// against u_n = A_{n-1} C_n and b_n = 1 - A_n - C_n (throws
/// InconsistentIdentity on mismatch). Not validated, so the degenerate corners
/// c = 0 and c = 1 can be inspected.
RecurrencePair recurrence_coeffs(const FamilyParams& params, std::size_t n_max);

/// Monic P_0 .. P_{n_max} from P_{n+1} = (x - b_n) P_n - u_n P_{n-1}.
std::vector<Polynomial<Rational>> generate(const FamilyParams& params, std::size_t n_max);

/// Coefficients t_s of 2F1(-m, b; c; z) = sum_{s=0}^m t_s z^s.
/// Throws PochhammerPole if (c)_s vanishes for some s <= m.
std::vector<Rational> hyp_2f1_coefficients(std::size_t m, const Rational& b, const Rational& c);

/// Terminating Gauss series at a scalar argument.
Rational hyp_2f1_terminating(std::size_t m, const Rational& b, const Rational& c, const Rational& z);

/// Same series with a polynomial argument, expanded symbolically.
Polynomial<Rational> hyp_2f1_terminating(std::size_t m, const Rational& b, const Rational& c,
                                         const Polynomial<Rational>& z);

/// (a)_k
Rational pochhammer(const Rational& a, std::size_t k);

/// Normalization making explicit_form monic.
Rational kappa(const FamilyParams& params, std::size_t n);

/// Two-series representation in the variable z = (1 - x^2)/(1 - c^2): an even
/// part p(x^2) plus (1 - x) q(x^2), scaled by kappa(n).
Polynomial<Rational> explicit_form(const FamilyParams& params, std::size_t n);

struct Interval {
  double lo;
  double hi;
};

enum class WeightBranch { kInner, kOuter };

/// Orthogonality support and branch. kInner (0 <= c < 1): [-1,-c] u [c,1].
/// kOuter (c > 1): [-c,-1] u [1,c].
struct WeightSpec {
  FamilyParams params;
  Interval negative;
  Interval positive;
  WeightBranch branch;

  bool in_open_support(double x) const;
};

/// Accepts c = 0 (little -1 Jacobi limit) in addition to the admissible range.
WeightSpec weight_spec(const FamilyParams& params);

/// Positive weight on the open support.
///   0 <= c < 1: theta(x)(x+1)(x-c)(1-x^2)^{(a-1)/2}(x^2-c^2)^{(b-1)/2}
///   c > 1     : theta(x)(x+1)(c-x)(x^2-1)^{(a-1)/2}(c^2-x^2)^{(b-1)/2}
/// Throws OutsideSupport for x outside the open support.
double weight(const FamilyParams& params, double x);

}  // namespace bigm1

#endif  // BIGM1_FAMILY_HPP_
