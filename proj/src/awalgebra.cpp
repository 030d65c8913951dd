#include "bigm1/awalgebra.hpp"

#include <algorithm>
#include <string>

#include "bigm1/dunkl.hpp"
#include "bigm1/family.hpp"

namespace bigm1 {

OperatorMatrix OperatorMatrix::Identity(std::size_t dim, const Rational& s) {
  OperatorMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = s;
  return m;
}

OperatorMatrix operator*(const OperatorMatrix& lhs, const OperatorMatrix& rhs) {
  const std::size_t n = lhs.dim_;
  OperatorMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Rational& l = lhs.at(i, k);
      if (l == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (rhs.at(k, j) != 0) out.at(i, j) += l * rhs.at(k, j);
    }
  return out;
}

OperatorMatrix operator+(OperatorMatrix lhs, const OperatorMatrix& rhs) {
  for (std::size_t i = 0; i < lhs.a_.size(); ++i) lhs.a_[i] += rhs.a_[i];
  return lhs;
}

OperatorMatrix operator-(OperatorMatrix lhs, const OperatorMatrix& rhs) {
  for (std::size_t i = 0; i < lhs.a_.size(); ++i) lhs.a_[i] -= rhs.a_[i];
  return lhs;
}

OperatorMatrix operator*(const Rational& s, OperatorMatrix m) {
  for (auto& v : m.a_) v *= s;
  return m;
}

Rational OperatorMatrix::max_abs_on_columns(std::size_t last_col) const {
  Rational m = 0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j <= last_col && j < dim_; ++j) {
      Rational v = abs(at(i, j));
      if (v > m) m = v;
    }
  return m;
}

Rational omega1(const FamilyParams& p) { return -4 * p.c; }
Rational omega2(const FamilyParams& p) { return 4 * (p.alpha - p.beta * p.c); }
Rational omega3(const FamilyParams& p) { return 2 * (p.beta - p.alpha * p.c); }

OperatorMatrix op_X(const FamilyParams& params, std::size_t d) {
  const TriangularAction l0 = l0_matrix(params, d);
  OperatorMatrix m = OperatorMatrix::Identity(d + 1, params.alpha + params.beta + 1);
  for (std::size_t n = 0; n <= d; ++n) {
    m.at(n, n) += l0.xi[n];
    if (n >= 1) m.at(n - 1, n) += l0.eta[n];
    if (n >= 2) m.at(n - 2, n) += l0.zeta[n];
  }
  return m;
}

OperatorMatrix op_Y(std::size_t d) {
  OperatorMatrix m(d + 1);
  for (std::size_t n = 0; n < d; ++n) m.at(n + 1, n) = 1;
  return m;
}

OperatorMatrix op_Z(const FamilyParams& params, std::size_t d) {
  // n even: -2x^{n+1} - 2(c-1)x^n
  // n odd :  2x^{n+1} + 2(c-1)x^n - 4c x^{n-1}
  OperatorMatrix m(d + 1);
  for (std::size_t n = 0; n <= d; ++n) {
    const Rational s = (n % 2 == 0) ? -1 : 1;
    if (n < d) m.at(n + 1, n) = 2 * s;
    m.at(n, n) = 2 * s * (params.c - 1);
    if (n % 2 == 1) m.at(n - 1, n) = -4 * params.c;
  }
  return m;
}

std::array<Rational, 3> anticommutator_residuals(const FamilyParams& params, std::size_t d) {
  if (d < 2) throw InvalidParameters("anticommutator check needs d >= 2");
  const OperatorMatrix X = op_X(params, d), Y = op_Y(d), Z = op_Z(params, d);
  const std::size_t dim = d + 1;
  const OperatorMatrix r1 = X * Y + Y * X - Z - OperatorMatrix::Identity(dim, omega3(params));
  const OperatorMatrix r2 = Y * Z + Z * Y - OperatorMatrix::Identity(dim, omega1(params));
  const OperatorMatrix r3 = Z * X + X * Z - Rational(4) * Y - OperatorMatrix::Identity(dim, omega2(params));
  return {r1.max_abs_on_columns(d - 2), r2.max_abs_on_columns(d - 2), r3.max_abs_on_columns(d - 2)};
}

VerificationReport verify_anticommutators(const FamilyParams& params, std::size_t d) {
  const auto r = anticommutator_residuals(params, d);
  VerificationReport rep;
  rep.check = "anticommutators";
  rep.params = params;
  rep.n_lo = 0;
  rep.n_hi = static_cast<long>(d - 2);
  const Rational worst = std::max({r[0], r[1], r[2]});
  rep.max_abs_error = worst;
  rep.tolerance = Rational(0);
  rep.pass = worst == 0;
  rep.note = "XY+YX-Z-w3: " + to_string(r[0]) + ", YZ+ZY-w1: " + to_string(r[1]) + ", ZX+XZ-4Y-w2: " + to_string(r[2]);
  return rep;
}

VerificationReport verify_casimir(const FamilyParams& params, std::size_t d) {
  if (d < 3) throw InvalidParameters("Casimir check needs d >= 3");
  const OperatorMatrix X = op_X(params, d), Y = op_Y(d), Z = op_Z(params, d);
  const std::size_t dim = d + 1;
  const OperatorMatrix Q = Z * Z + Rational(4) * (Y * Y);
  const Rational value = 4 * (params.c * params.c + 1);
  const Rational cas = (Q - OperatorMatrix::Identity(dim, value)).max_abs_on_columns(d - 2);
  const Rational qx = (Q * X - X * Q).max_abs_on_columns(d - 2);
  const Rational qy = (Q * Y - Y * Q).max_abs_on_columns(d - 3);

  VerificationReport rep;
  rep.check = "casimir";
  rep.params = params;
  rep.n_lo = 0;
  rep.n_hi = static_cast<long>(d - 2);
  const Rational worst = std::max({cas, qx, qy});
  rep.max_abs_error = worst;
  rep.tolerance = Rational(0);
  rep.pass = worst == 0;
  rep.note = "Q - 4(c^2+1): " + to_string(cas) + ", [Q,X]: " + to_string(qx) + ", [Q,Y] (degree <= " +
             std::to_string(d - 3) + "): " + to_string(qy);
  return rep;
}

VerificationReport dual_realization(const FamilyParams& params, std::size_t M) {
  if (M < 4) throw InvalidParameters("dual realization needs M >= 4");
  validate_family(params);
  const RecurrencePair rec = recurrence_coeffs(params, M);
  OperatorMatrix X(M), Y(M);
  for (std::size_t n = 0; n < M; ++n) {
    X.at(n, n) = eigenvalue_lambda(n, params) + params.alpha + params.beta + 1;
    Y.at(n, n) = rec.b[n];
    if (n + 1 < M) Y.at(n + 1, n) = rec.u[n + 1];
    if (n >= 1) Y.at(n - 1, n) = 1;
  }
  const OperatorMatrix Z = X * Y + Y * X - OperatorMatrix::Identity(M, omega3(params));
  const std::size_t last = M - 3;
  const Rational yz = (Y * Z + Z * Y - OperatorMatrix::Identity(M, omega1(params))).max_abs_on_columns(last);
  const Rational zx =
      (Z * X + X * Z - Rational(4) * Y - OperatorMatrix::Identity(M, omega2(params))).max_abs_on_columns(last);

  // Components C_n of a formal eigenvector sum C_n e_n of Y with eigenvalue x.
  const auto P = generate(params, M - 1);
  const Polynomial<Rational> x = Polynomial<Rational>::Monomial(1);
  std::vector<Polynomial<Rational>> C{Polynomial<Rational>::Constant(1)};
  Rational eig = 0;
  for (std::size_t m = 0; m + 1 < M; ++m) {
    Polynomial<Rational> next = x * C[m] - Y.at(m, m) * C[m];
    if (m >= 1) next -= Y.at(m, m - 1) * C[m - 1];
    next *= Rational(1 / Y.at(m, m + 1));
    C.push_back(std::move(next));
  }
  for (std::size_t n = 0; n < M; ++n) eig = std::max(eig, max_abs_coeff(C[n] - P[n]));

  VerificationReport rep;
  rep.check = "dual-realization";
  rep.params = params;
  rep.n_lo = 0;
  rep.n_hi = static_cast<long>(last);
  const Rational worst = std::max({yz, zx, eig});
  rep.max_abs_error = worst;
  rep.tolerance = Rational(0);
  rep.pass = worst == 0;
  rep.note = "interior block e_0..e_" + std::to_string(last) + " of size " + std::to_string(M) +
             "; YZ+ZY-w1: " + to_string(yz) + ", ZX+XZ-4Y-w2: " + to_string(zx) +
             ", eigenvector vs P_n: " + to_string(eig);
  return rep;
}

}  // namespace bigm1
