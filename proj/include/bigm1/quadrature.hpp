#ifndef BIGM1_QUADRATURE_HPP_
#define BIGM1_QUADRATURE_HPP_

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace bigm1 {

/// Gauss rule for int_0^1 t^delta (1-t)^gamma f(t) dt, exact for polynomial f
/// of degree <= 2 * nodes.size() - 1. Nodes ascend strictly inside (0, 1).
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  double gamma = 0;
  double delta = 0;

  std::size_t size() const { return nodes.size(); }
};

class QuadratureFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// B(p, q) via lgamma.
double beta_function(double p, double q);

/// Golub-Welsch: eigen-decomposition of the symmetric Jacobi matrix of the
/// weight t^delta (1-t)^gamma on [0,1]. Weights are the squared first
/// eigenvector components times B(delta+1, gamma+1). Throws
/// QuadratureFailure if the eigensolver does not converge; never returns a
/// partial rule.
QuadratureRule gauss_jacobi_rule(double gamma, double delta, std::size_t count);

}  // namespace bigm1

#endif  // BIGM1_QUADRATURE_HPP_
