#include "bigm1/params.hpp"

#include <string>

namespace bigm1 {

void validate_family(const FamilyParams& p) {
  if (!(p.alpha > -1)) throw InvalidParameters("alpha must exceed -1, got " + to_string(p.alpha));
  if (!(p.beta > -1)) throw InvalidParameters("beta must exceed -1, got " + to_string(p.beta));
  if (!(p.c > 0)) throw InvalidParameters("c must be positive, got " + to_string(p.c));
  if (p.c == 1) throw InvalidParameters("c = 1 is degenerate: u_{2n} = 0 and the support collapses to {-1, 1}");
}

FamilyParams make_family(Rational alpha, Rational beta, Rational c) {
  FamilyParams p{std::move(alpha), std::move(beta), std::move(c)};
  validate_family(p);
  return p;
}

std::string describe(const FamilyParams& p) {
  return "alpha=" + to_string(p.alpha) + " beta=" + to_string(p.beta) + " c=" + to_string(p.c);
}

}  // namespace bigm1
