#include "bigm1/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <string>

#include "bigm1/params.hpp"

namespace bigm1 {

double beta_function(double p, double q) { return std::exp(std::lgamma(p) + std::lgamma(q) - std::lgamma(p + q)); }

QuadratureRule gauss_jacobi_rule(double gamma, double delta, std::size_t count) {
  if (!(gamma > -1) || !(delta > -1))
    throw InvalidParameters("Gauss-Jacobi exponents must exceed -1, got gamma=" + std::to_string(gamma) +
                            " delta=" + std::to_string(delta));
  if (count == 0) throw InvalidParameters("Gauss-Jacobi rule needs at least one node");

  // Monic Jacobi recurrence on [-1,1] for (1-y)^a (1+y)^b, a = gamma, b = delta,
  // then t = (1 + y)/2.
  const double a = gamma;
  const double b = delta;
  const double ab = a + b;
  Eigen::VectorXd diag(count);
  Eigen::VectorXd sub(count > 1 ? count - 1 : 0);
  for (std::size_t k = 0; k < count; ++k) {
    const double n = static_cast<double>(k);
    double alpha_n;
    if (k == 0) {
      alpha_n = (b - a) / (ab + 2);
    } else {
      alpha_n = (b * b - a * a) / ((2 * n + ab) * (2 * n + ab + 2));
    }
    diag[static_cast<Eigen::Index>(k)] = (1 + alpha_n) / 2;
  }
  for (std::size_t k = 1; k < count; ++k) {
    const double n = static_cast<double>(k);
    double beta_n;
    if (k == 1) {
      beta_n = 4 * (1 + a) * (1 + b) / ((2 + ab) * (2 + ab) * (3 + ab));
    } else {
      const double s = 2 * n + ab;
      beta_n = 4 * n * (n + a) * (n + b) * (n + ab) / (s * s * (s + 1) * (s - 1));
    }
    sub[static_cast<Eigen::Index>(k - 1)] = std::sqrt(beta_n) / 2;
  }

  const double mass = beta_function(delta + 1, gamma + 1);
  QuadratureRule rule;
  rule.gamma = gamma;
  rule.delta = delta;
  if (count == 1) {
    rule.nodes = {diag[0]};
    rule.weights = {mass};
    return rule;
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success)
    throw QuadratureFailure("tridiagonal eigensolver did not converge for " + std::to_string(count) + " nodes");

  rule.nodes.resize(count);
  rule.weights.resize(count);
  for (std::size_t j = 0; j < count; ++j) {
    const auto jj = static_cast<Eigen::Index>(j);
    const double v0 = solver.eigenvectors()(0, jj);
    rule.nodes[j] = solver.eigenvalues()[jj];
    rule.weights[j] = mass * v0 * v0;
  }
  for (std::size_t j = 0; j < count; ++j) {
    const bool inside = rule.nodes[j] > 0 && rule.nodes[j] < 1;
    const bool ascending = j == 0 || rule.nodes[j] > rule.nodes[j - 1];
    if (!inside || !ascending || !(rule.weights[j] > 0))
      throw QuadratureFailure("eigensolver returned an invalid node set for " + std::to_string(count) + " nodes");
  }
  return rule;
}

}  // namespace bigm1
