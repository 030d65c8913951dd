#ifndef BIGM1_RATIONAL_HPP_
#define BIGM1_RATIONAL_HPP_

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <string_view>

namespace bigm1 {

// Arbitrary-precision rational in lowest terms with positive denominator.
// GMP keeps every arithmetic result canonical; values built from a raw
// numerator/denominator pair go through make_rational().
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  return q;
}

// Truncates toward zero (GMP semantics); at most one ulp off.
inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(double x) { return x; }

// Exact: every finite double is a dyadic rational.
inline Rational exact_rational(double x) { return Rational(x); }

// "p/q", or "p" for integers.
inline std::string to_string(const Rational& q) { return q.get_str(); }

// Accepts "p", "p/q", or a finite decimal literal such as "-0.25" or "1e-3";
// decimals are converted exactly (0.1 -> 1/10, not the nearest double).
// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

template <class S>
bool is_zero(const S& s) {
  return s == 0;
}

inline Rational abs_value(const Rational& q) { return abs(q); }
inline double abs_value(double x) { return std::fabs(x); }

// (-1)^n
inline int parity_sign(long n) { return (n % 2 == 0) ? 1 : -1; }

}  // namespace bigm1

#endif  // BIGM1_RATIONAL_HPP_
