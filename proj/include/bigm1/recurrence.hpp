#ifndef BIGM1_RECURRENCE_HPP_
#define BIGM1_RECURRENCE_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "bigm1/params.hpp"
#include "bigm1/polynomial.hpp"

namespace bigm1 {

// Monic three-term recurrence in the form
//   P_{n+1}(x) + b_n P_n(x) + u_n P_{n-1}(x) = x P_n(x),  P_{-1} = 0, P_0 = 1.
// Sequences are indexed by n; u[0] is unused and kept at zero.

template <class S>
std::vector<Polynomial<S>> monic_from_recurrence(const std::vector<S>& b, const std::vector<S>& u,
                                                 std::size_t n_max) {
  if (n_max > 0 && (b.size() < n_max || u.size() < n_max))
    throw InvalidParameters("recurrence data too short for degree " + std::to_string(n_max));
  std::vector<Polynomial<S>> p;
  p.reserve(n_max + 1);
  p.push_back(Polynomial<S>::Constant(S(1)));
  const Polynomial<S> x = Polynomial<S>::Monomial(1);
  for (std::size_t n = 0; n < n_max; ++n) {
    Polynomial<S> next = x * p[n] - b[n] * p[n];
    if (n >= 1) next -= u[n] * p[n - 1];
    p.push_back(std::move(next));
  }
  return p;
}

template <class S>
struct RecurrenceData {
  std::vector<S> b;  // b_0 .. b_{N-1}
  std::vector<S> u;  // u_0 (= 0) .. u_{N-1}
};

/// Recovers (b_n, u_n) from a stored monic sequence P_0..P_N and checks that
/// x P_n - P_{n+1} - b_n P_n - u_n P_{n-1} vanishes identically for
/// n = 0..N-1. Throws InconsistentIdentity if the sequence is not monic or
/// not three-term.
template <class S>
RecurrenceData<S> extract_recurrence(const std::vector<Polynomial<S>>& p) {
  RecurrenceData<S> out;
  for (std::size_t n = 0; n < p.size(); ++n)
    if (p[n].degree() != static_cast<int>(n) || !p[n].is_monic())
      throw InconsistentIdentity("sequence member " + std::to_string(n) + " is not monic of degree n");
  const Polynomial<S> x = Polynomial<S>::Monomial(1);
  for (std::size_t n = 0; n + 1 < p.size(); ++n) {
    Polynomial<S> rest = x * p[n] - p[n + 1];  // degree <= n
    S bn = rest.coeff(n);
    rest -= bn * p[n];
    S un(0);
    if (n >= 1) {
      un = rest.coeff(n - 1);
      rest -= un * p[n - 1];
    }
    if (!rest.is_zero())
      throw InconsistentIdentity("sequence is not three-term at n = " + std::to_string(n));
    out.b.push_back(bn);
    out.u.push_back(un);
  }
  return out;
}

/// Moments L(x^k), k = 0..count-1, of the functional with L(P_0) = 1 and
/// L(P_n) = 0 for n >= 1, computed by repeatedly multiplying the coordinate
/// vector of x^k in the P-basis by x.
template <class S>
std::vector<S> moments_from_recurrence(const std::vector<S>& b, const std::vector<S>& u, std::size_t count) {
  std::vector<S> moments;
  if (count == 0) return moments;
  if (b.size() + 1 < count || u.size() + 1 < count)
    throw InvalidParameters("recurrence data too short for " + std::to_string(count) + " moments");
  std::vector<S> coord{S(1)};  // x^0 = P_0
  moments.push_back(S(1));
  for (std::size_t k = 1; k < count; ++k) {
    // x P_m = P_{m+1} + b_m P_m + u_m P_{m-1}
    std::vector<S> next(coord.size() + 1, S(0));
    for (std::size_t m = 0; m < coord.size(); ++m) {
      next[m + 1] += coord[m];
      next[m] += b[m] * coord[m];
      if (m >= 1) next[m - 1] += u[m] * coord[m];
    }
    coord = std::move(next);
    moments.push_back(coord[0]);
  }
  return moments;
}

}  // namespace bigm1

#endif  // BIGM1_RECURRENCE_HPP_
