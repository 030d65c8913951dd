#ifndef BIGM1_REPORT_HPP_
#define BIGM1_REPORT_HPP_

#include <string>
#include <variant>

#include "bigm1/params.hpp"

namespace bigm1 {

/// Exact residuals stay Rational so that a true zero is distinguishable from
/// a small float.
using Residual = std::variant<Rational, double>;

struct VerificationReport {
  std::string check;
  FamilyParams params;
  long n_lo = 0;
  long n_hi = 0;
  Residual max_abs_error = Rational(0);
  Residual tolerance = Rational(0);
  bool pass = false;
  std::string note;
};

inline std::string residual_string(const Residual& r) {
  if (const auto* q = std::get_if<Rational>(&r)) return to_string(*q);
  return std::to_string(std::get<double>(r));
}

}  // namespace bigm1

#endif  // BIGM1_REPORT_HPP_
