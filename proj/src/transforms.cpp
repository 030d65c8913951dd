#include "bigm1/transforms.hpp"

#include <string>
#include <utility>

#include "bigm1/family.hpp"
#include "bigm1/recurrence.hpp"

namespace bigm1 {

namespace {

const Polynomial<Rational>& X() {
  static const Polynomial<Rational> x = Polynomial<Rational>::Monomial(1);
  return x;
}

void CheckZero(const Polynomial<Rational>& residual, const std::string& what, std::size_t n) {
  if (!residual.is_zero()) throw InconsistentIdentity(what + " fails at n = " + std::to_string(n));
}

// x P_n - P_{n+1} - b P_n - u P_{n-1}
Polynomial<Rational> ThreeTermResidual(const std::vector<Polynomial<Rational>>& p, std::size_t n, const Rational& b,
                                       const Rational& u) {
  Polynomial<Rational> r = X() * p[n] - p[n + 1] - b * p[n];
  if (n >= 1) r -= u * p[n - 1];
  return r;
}

}  // namespace

MonicOPS make_monic_ops(const std::vector<Rational>& b, const std::vector<Rational>& u, std::size_t n_max) {
  for (std::size_t n = 1; n < n_max; ++n)
    if (u.at(n) == 0) throw InvalidParameters("u_" + std::to_string(n) + " vanishes; family is degenerate");
  MonicOPS ops;
  ops.polys = monic_from_recurrence(b, u, n_max);
  ops.b.assign(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(n_max));
  ops.u.assign(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(n_max));
  return ops;
}

MonicOPS monic_ops_from_polys(std::vector<Polynomial<Rational>> polys) {
  RecurrenceData<Rational> rec = extract_recurrence(polys);
  MonicOPS ops;
  ops.polys = std::move(polys);
  ops.b = std::move(rec.b);
  ops.u = std::move(rec.u);
  return ops;
}

ChristoffelResult christoffel(const MonicOPS& P, const Rational& nu2) {
  if (P.size() < 2) throw InvalidParameters("Christoffel transform needs at least P_0 and P_1");
  ChristoffelResult out;
  std::vector<Polynomial<Rational>> q;
  Rational prev = eval(P.polys[0], nu2);
  for (std::size_t n = 0; n + 1 < P.size(); ++n) {
    const Rational next = eval(P.polys[n + 1], nu2);
    if (prev == 0)
      throw InvalidParameters("P_" + std::to_string(n) + " vanishes at nu^2 = " + to_string(nu2));
    const Rational a = next / prev;
    LinearDivision<Rational> d = divide_linear(P.polys[n + 1] - a * P.polys[n], nu2);
    if (d.remainder != 0) throw InconsistentIdentity("Christoffel kernel leaves a remainder at n = " + std::to_string(n));
    q.push_back(std::move(d.quotient));
    out.A.push_back(a);
    prev = next;
  }
  out.Q = monic_ops_from_polys(std::move(q));
  return out;
}

std::vector<Rational> geronimus_coefficients(const MonicOPS& P, const std::vector<Rational>& A) {
  std::vector<Rational> B(A.size(), Rational(0));
  for (std::size_t n = 1; n < A.size() && n < P.u.size(); ++n) {
    if (A[n - 1] == 0) throw InvalidParameters("A_" + std::to_string(n - 1) + " vanishes");
    B[n] = P.u[n] / A[n - 1];
  }
  return B;
}

MonicOPS geronimus_reconstruct(const MonicOPS& Q, const std::vector<Rational>& B, const std::vector<Rational>& A,
                               const Rational& nu2) {
  std::vector<Polynomial<Rational>> p;
  for (std::size_t n = 0; n < Q.size(); ++n) {
    Polynomial<Rational> pn = Q.polys[n];
    if (n >= 1) pn -= B.at(n) * Q.polys[n - 1];
    p.push_back(std::move(pn));
  }
  MonicOPS P = monic_ops_from_polys(std::move(p));
  for (std::size_t n = 0; n < P.b.size(); ++n) {
    if (P.b[n] != -A.at(n) - B.at(n) + nu2) throw InconsistentIdentity("b_n != -A_n - B_n + nu^2 at n = " + std::to_string(n));
    if (n >= 1 && P.u[n] != B[n] * A[n - 1])
      throw InconsistentIdentity("u_n != B_n A_{n-1} at n = " + std::to_string(n));
  }
  return P;
}

InterleavedOPS interleave(const MonicOPS& P, const ChristoffelResult& ct, const Rational& nu) {
  const std::size_t N = ct.Q.size();  // Q_0 .. Q_{N-1}, P_0 .. P_N
  if (P.size() < N + 1) throw InvalidParameters("interleave needs P_0 .. P_N for Q_0 .. Q_{N-1}");
  const std::vector<Rational> B = geronimus_coefficients(P, ct.A);

  InterleavedOPS out;
  out.nu = nu;
  const Polynomial<Rational> x_minus_nu = Polynomial<Rational>::Linear(nu);
  for (std::size_t n = 0; n < N; ++n) {
    out.R.push_back(substitute_square(P.polys[n]));
    out.R.push_back(x_minus_nu * substitute_square(ct.Q.polys[n]));
  }
  out.R.push_back(substitute_square(P.polys[N]));

  out.v.assign(2 * N, Rational(0));
  for (std::size_t n = 0; n < N; ++n) {
    if (n >= 1) out.v[2 * n] = -B[n];
    out.v[2 * n + 1] = -ct.A[n];
  }

  for (std::size_t n = 0; n + 1 < out.R.size(); ++n) {
    const Rational sign_nu = (n % 2 == 0) ? nu : Rational(-nu);
    CheckZero(ThreeTermResidual(out.R, n, sign_nu, out.v[n]), "R_{n+1} + (-1)^n nu R_n + v_n R_{n-1} = x R_n", n);
  }

  // P and Q recurrences expressed through v.
  const Rational nu2 = nu * nu;
  const auto& v = out.v;
  for (std::size_t n = 0; n + 1 < P.size() && n < N; ++n) {
    const Rational b = v[2 * n] + v[2 * n + 1] + nu2;
    const Rational u = n >= 1 ? Rational(v[2 * n] * v[2 * n - 1]) : Rational(0);
    CheckZero(ThreeTermResidual(P.polys, n, b, u), "P recurrence through v", n);
  }
  for (std::size_t n = 0; n + 1 < N; ++n) {
    const Rational b = v[2 * n + 2] + v[2 * n + 1] + nu2;
    const Rational u = v[2 * n] * v[2 * n + 1];
    CheckZero(ThreeTermResidual(ct.Q.polys, n, b, u), "Q recurrence through v", n);
  }
  return out;
}

InterleavedMoments moments_interleaved(const Rational& nu, const std::vector<Rational>& c_moments) {
  if (c_moments.empty() || c_moments[0] != 1) throw InvalidParameters("moments must start with c_0 = 1");
  InterleavedMoments out;
  for (const Rational& cn : c_moments) {
    out.r.push_back(cn);
    out.r.push_back(nu * cn);
  }
  if (c_moments.size() >= 2) {
    const Rational nu2 = nu * nu;
    const Rational den = c_moments[1] - nu2;
    if (den == 0) throw InvalidParameters("c_1 = nu^2: Christoffel transform is degenerate");
    for (std::size_t n = 0; n + 1 < c_moments.size(); ++n) out.tc.push_back((c_moments[n + 1] - nu2 * c_moments[n]) / den);
  }
  return out;
}

JacobiInstance jacobi_shifted_family(const Rational& xi, const Rational& eta, const Rational& c, std::size_t n_max) {
  if (!(xi > -1) || !(eta > -1)) throw InvalidParameters("Jacobi exponents must exceed -1");
  if (!(c > 0) || c == 1) throw InvalidParameters("Jacobi instance needs c > 0, c != 1");
  const Rational len = 1 - c * c;
  const Polynomial<Rational> z{Rational(1 / len), Rational(-1 / len)};  // (1 - x)/(1 - c^2)

  auto build = [&](const Rational& shift, std::size_t count) {
    std::vector<Polynomial<Rational>> polys;
    Rational len_pow = 1;
    for (std::size_t n = 0; n <= count; ++n) {
      const Rational nn(static_cast<long>(n));
      const Rational top = nn + xi + eta + 1 + shift;
      const Rational scale = len_pow * pochhammer(xi + 1 + shift, n) / pochhammer(top, n);
      polys.push_back(scale * hyp_2f1_terminating(n, top, xi + 1 + shift, z));
      len_pow *= len;
    }
    return monic_ops_from_polys(std::move(polys));
  };

  JacobiInstance out{xi, eta, c, build(0, n_max), {}};
  out.Q = build(1, n_max == 0 ? 0 : n_max - 1);
  return out;
}

Rational jacobi_A(const Rational& xi, const Rational& eta, const Rational& c, std::size_t n) {
  const Rational nn(static_cast<long>(n));
  return (1 - c * c) * (xi + nn + 1) * (xi + eta + nn + 1) / ((2 * nn + xi + eta + 1) * (2 * nn + xi + eta + 2));
}

Rational jacobi_B(const Rational& xi, const Rational& eta, const Rational& c, std::size_t n) {
  if (n == 0) return 0;
  const Rational nn(static_cast<long>(n));
  return (1 - c * c) * nn * (eta + nn) / ((2 * nn + xi + eta) * (2 * nn + xi + eta + 1));
}

Rational geronimus_G(const FamilyParams& params, std::size_t n) {
  if (n == 0) return 0;
  const Rational nn(static_cast<long>(n));
  const Rational den = 2 * nn + params.alpha + params.beta;
  if (n % 2 == 0) return (1 - params.c) * nn / den;
  return -(1 + params.c) * (nn + params.alpha) / den;
}

GeronimusLink geronimus_link(const FamilyParams& params, std::size_t n_max) {
  validate_family(params);
  if (n_max < 2) throw InvalidParameters("geronimus_link needs n_max >= 2");
  const Rational xi = (params.alpha - 1) / 2;
  const Rational eta = (params.beta + 1) / 2;
  const std::size_t half = n_max / 2 + 1;  // R_0 .. R_{2 half} covers n_max

  const JacobiInstance jac = jacobi_shifted_family(xi, eta, params.c, half);
  const ChristoffelResult ct = christoffel(jac.P, 1);
  for (std::size_t n = 0; n < ct.Q.size(); ++n)
    if (ct.Q.polys[n] != jac.Q.polys[n]) throw InconsistentIdentity("Christoffel transform differs from the xi+1 family");

  GeronimusLink out;
  out.R = interleave(jac.P, ct, 1);
  const auto P = generate(params, n_max);
  for (std::size_t n = 0; n <= n_max; ++n) out.G.push_back(geronimus_G(params, n));
  for (std::size_t n = 1; n <= n_max; ++n)
    CheckZero(P[n] - (out.R.R[n] - out.G[n] * out.R.R[n - 1]), "P_n = R_n - G_n R_{n-1}", n);

  for (std::size_t n = 1; n + 1 <= n_max; ++n) {
    const Rational sign = (n % 2 == 0) ? 1 : -1;
    out.mu.push_back(out.G[n + 1] + sign + out.R.v[n] / out.G[n]);
  }
  out.mu_value = out.mu.front();
  for (std::size_t k = 1; k < out.mu.size(); ++k)
    if (out.mu[k] != out.mu_value)
      throw InconsistentIdentity("mu from G_{n+1} + (-1)^n + v_n/G_n depends on n (n = " + std::to_string(k + 1) + ")");
  return out;
}

}  // namespace bigm1
