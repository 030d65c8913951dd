#ifndef BIGM1_PARAMS_HPP_
#define BIGM1_PARAMS_HPP_

#include <stdexcept>
#include <string>

#include "bigm1/rational.hpp"

namespace bigm1 {

/// Rejected (alpha, beta, c) or an out-of-range index/argument.
class InvalidParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// lambda_n == lambda_s for some s < n; the phi-basis expansion would divide by zero.
class DegenerateSpectrum : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A Pochhammer symbol in a denominator vanished before the series terminated.
class PochhammerPole : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Abscissa outside the open orthogonality support.
class OutsideSupport : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An identity that must hold exactly came out nonzero.
class InconsistentIdentity : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Parameters (alpha, beta, c) of the big -1 Jacobi family.
///
/// The aggregate itself is unconstrained so that coefficient formulas can be
/// evaluated at the degenerate corners c = 0 and c = 1; anything that builds
/// the family goes through validate_family() first.
struct FamilyParams {
  Rational alpha;
  Rational beta;
  Rational c;

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// alpha > -1, beta > -1, c > 0, c != 1. Throws InvalidParameters.
void validate_family(const FamilyParams& p);

/// Checked constructor.
FamilyParams make_family(Rational alpha, Rational beta, Rational c);

/// True for 0 < c < 1 (support [-1,-c] u [c,1]); false for c > 1.
inline bool is_inner_branch(const FamilyParams& p) { return p.c < 1; }

std::string describe(const FamilyParams& p);

}  // namespace bigm1

#endif  // BIGM1_PARAMS_HPP_
