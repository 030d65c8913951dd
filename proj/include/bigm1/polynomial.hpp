#ifndef BIGM1_POLYNOMIAL_HPP_
#define BIGM1_POLYNOMIAL_HPP_

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bigm1/rational.hpp"

namespace bigm1 {

/// Dense univariate polynomial in the monomial basis; coeffs()[i] multiplies
/// x^i. The stored sequence never ends in a zero, so the zero polynomial is
/// the empty sequence and degree() == -1 for it.
///
/// S is either Rational (exact path) or double (quadrature and q-limit path).
template <class S>
class Polynomial {
 public:
  using Scalar = S;

  Polynomial() = default;
  explicit Polynomial(std::vector<S> coeffs) : coeffs_(std::move(coeffs)) { Trim(); }
  Polynomial(std::initializer_list<S> coeffs) : coeffs_(coeffs) { Trim(); }

  static Polynomial Constant(const S& value) { return Polynomial(std::vector<S>{value}); }

  static Polynomial Monomial(std::size_t n, const S& value = S(1)) {
    std::vector<S> c(n + 1, S(0));
    c[n] = value;
    return Polynomial(std::move(c));
  }

  // x - a
  static Polynomial Linear(const S& a) { return Polynomial({S(-a), S(1)}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == S(1); }
  const std::vector<S>& coeffs() const { return coeffs_; }

  S coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : S(0); }
  S leading() const { return coeffs_.empty() ? S(0) : coeffs_.back(); }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), S(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    Trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), S(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    Trim();
    return *this;
  }

  Polynomial& operator*=(const S& s) {
    for (auto& c : coeffs_) c *= s;
    Trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial p, const S& s) { return p *= s; }
  friend Polynomial operator*(const S& s, Polynomial p) { return p *= s; }

  friend Polynomial operator-(Polynomial p) {
    for (auto& c : p.coeffs_) c = -c;
    return p;
  }

  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<S> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, S(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
      if (lhs.coeffs_[i] == S(0)) continue;
      for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }

  Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

 private:
  void Trim() {
    while (!coeffs_.empty() && coeffs_.back() == S(0)) coeffs_.pop_back();
  }

  std::vector<S> coeffs_;
};

/// Horner evaluation; exact for Rational.
template <class S>
S eval(const Polynomial<S>& p, const S& x) {
  S acc(0);
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// (Rp)(x) = p(-x): coefficient i picks up (-1)^i.
template <class S>
Polynomial<S> reflect(const Polynomial<S>& p) {
  std::vector<S> c = p.coeffs();
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return Polynomial<S>(std::move(c));
}

template <class S>
Polynomial<S> differentiate(const Polynomial<S>& p) {
  const auto& c = p.coeffs();
  if (c.size() <= 1) return {};
  std::vector<S> d(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * S(static_cast<long>(i));
  return Polynomial<S>(std::move(d));
}

/// p(x^2).
template <class S>
Polynomial<S> substitute_square(const Polynomial<S>& p) {
  const auto& c = p.coeffs();
  if (c.empty()) return {};
  std::vector<S> out(2 * c.size() - 1, S(0));
  for (std::size_t i = 0; i < c.size(); ++i) out[2 * i] = c[i];
  return Polynomial<S>(std::move(out));
}

/// Compose p(q(x)) by Horner in the polynomial ring.
template <class S>
Polynomial<S> compose(const Polynomial<S>& p, const Polynomial<S>& q) {
  Polynomial<S> acc;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * q + Polynomial<S>::Constant(*it);
  return acc;
}

template <class S>
struct LinearDivision {
  Polynomial<S> quotient;
  S remainder;
};

/// Synthetic division by the monic factor (x - a): p = quotient * (x - a) + remainder.
template <class S>
LinearDivision<S> divide_linear(const Polynomial<S>& p, const S& a) {
  const auto& c = p.coeffs();
  if (c.empty()) return {Polynomial<S>{}, S(0)};
  std::vector<S> q(c.size() - 1, S(0));
  S carry = c.back();
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    q[i] = carry;
    carry = c[i] + carry * a;
  }
  return {Polynomial<S>(std::move(q)), carry};
}

inline Polynomial<double> to_double(const Polynomial<Rational>& p) {
  std::vector<double> c;
  c.reserve(p.coeffs().size());
  for (const auto& q : p.coeffs()) c.push_back(q.get_d());
  return Polynomial<double>(std::move(c));
}

/// Largest |coefficient|; zero for the zero polynomial.
template <class S>
S max_abs_coeff(const Polynomial<S>& p) {
  S m(0);
  for (const auto& c : p.coeffs()) {
    S a = abs_value(c);
    if (a > m) m = a;
  }
  return m;
}

/// Exact value of a Rational polynomial at a double abscissa, rounded once at
/// the end. Avoids the cancellation of double Horner on wide supports.
inline double eval_exact_at(const Polynomial<Rational>& p, double x) {
  return eval(p, exact_rational(x)).get_d();
}

/// Human-readable form, highest degree first: "x^2 - 1/4*x - 9/16".
template <class S>
std::string to_string(const Polynomial<S>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  const auto& c = p.coeffs();
  bool first = true;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == S(0)) continue;
    S mag = c[k] < S(0) ? S(-c[k]) : c[k];
    if (first) {
      if (c[k] < S(0)) os << "-";
    } else {
      os << (c[k] < S(0) ? " - " : " + ");
    }
    first = false;
    const bool unit = (mag == S(1));
    if (k == 0) {
      os << mag;
      continue;
    }
    if (!unit) os << mag << "*";
    os << "x";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

}  // namespace bigm1

#endif  // BIGM1_POLYNOMIAL_HPP_
