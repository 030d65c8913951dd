#ifndef BIGM1_AWALGEBRA_HPP_
#define BIGM1_AWALGEBRA_HPP_

#include <array>
#include <cstddef>
#include <vector>

#include "bigm1/params.hpp"
#include "bigm1/report.hpp"

namespace bigm1 {

/// Square exact matrix on span{x^0..x^d} (or e_0..e_{M-1}); column j is the
/// image of the j-th basis vector.
class OperatorMatrix {
 public:
  explicit OperatorMatrix(std::size_t dim) : dim_(dim), a_(dim * dim, Rational(0)) {}

  static OperatorMatrix Identity(std::size_t dim, const Rational& s = 1);

  std::size_t dim() const { return dim_; }
  Rational& at(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

  friend OperatorMatrix operator*(const OperatorMatrix& lhs, const OperatorMatrix& rhs);
  friend OperatorMatrix operator+(OperatorMatrix lhs, const OperatorMatrix& rhs);
  friend OperatorMatrix operator-(OperatorMatrix lhs, const OperatorMatrix& rhs);
  friend OperatorMatrix operator*(const Rational& s, OperatorMatrix m);

  /// max |entry| over columns 0..last_col, all rows.
  Rational max_abs_on_columns(std::size_t last_col) const;

 private:
  std::size_t dim_;
  std::vector<Rational> a_;
};

Rational omega1(const FamilyParams& p);  // -4c
Rational omega2(const FamilyParams& p);  // 4(a - b c)
Rational omega3(const FamilyParams& p);  // 2(b - a c)

// Realization on polynomials of degree <= d. Y = x drops x^{d+1}, so a
// product of operators raising degree by r is exact on columns j <= d - r.
OperatorMatrix op_X(const FamilyParams& params, std::size_t d);  // L0 + a + b + 1
OperatorMatrix op_Y(std::size_t d);                              // multiplication by x
OperatorMatrix op_Z(const FamilyParams& params, std::size_t d);  // -(2/x)(c + (x-1)(x+c)R)

/// Residuals of XY+YX-Z-w3, YZ+ZY-w1, ZX+XZ-4Y-w2 on degree <= d-2.
std::array<Rational, 3> anticommutator_residuals(const FamilyParams& params, std::size_t d);

/// Exact check of the three anticommutator relations on degree <= d-2.
/// Requires d >= 2.
VerificationReport verify_anticommutators(const FamilyParams& params, std::size_t d);

/// Z^2 + 4Y^2 = 4(c^2+1) on degree <= d-2, plus [Q,X] = 0 on degree <= d-2
/// and [Q,Y] = 0 on degree <= d-3. Requires d >= 3.
VerificationReport verify_casimir(const FamilyParams& params, std::size_t d);

/// X = diag(lambda_n + a + b + 1), Y e_n = u_{n+1} e_{n+1} + b_n e_n + e_{n-1},
/// Z = XY + YX - w3 on e_0..e_{M-1}. Checks the other two relations on the
/// interior block (columns 0..M-3) and that the formal eigenvector of Y
/// reproduces P_0..P_{M-1}. Requires M >= 4.
VerificationReport dual_realization(const FamilyParams& params, std::size_t M);

}  // namespace bigm1

#endif  // BIGM1_AWALGEBRA_HPP_
