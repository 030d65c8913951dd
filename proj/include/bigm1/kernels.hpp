#ifndef BIGM1_KERNELS_HPP_
#define BIGM1_KERNELS_HPP_

#include <cstddef>
#include <vector>

#include "bigm1/params.hpp"
#include "bigm1/polynomial.hpp"

namespace bigm1::kernels {

// Hot loops of the verification suite. Each kernel has a serial reference and
// an OpenMP version; both produce bit-identical results because every output
// element is computed by exactly one thread in a fixed order.

/// Values of P_n at +x_j and -x_j, row-major [n][j], each rounded once from
/// the exact rational value.
struct NodeValues {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> pos;
  std::vector<double> neg;
};

namespace serial {

NodeValues evaluate_on_nodes(const std::vector<Polynomial<Rational>>& polys, const std::vector<double>& nodes);

/// G_nm = sum_j plus[j] P_n(x_j) P_m(x_j) + minus[j] P_n(-x_j) P_m(-x_j),
/// row-major (rows x rows), symmetric.
std::vector<double> gram_matrix(const NodeValues& v, const std::vector<double>& plus, const std::vector<double>& minus);

/// max |coeff| of L0 P_n - lambda_n P_n for each n.
std::vector<Rational> eigen_residuals(const FamilyParams& params, const std::vector<Polynomial<Rational>>& polys);

}  // namespace serial

namespace parallel {

NodeValues evaluate_on_nodes(const std::vector<Polynomial<Rational>>& polys, const std::vector<double>& nodes);
std::vector<double> gram_matrix(const NodeValues& v, const std::vector<double>& plus, const std::vector<double>& minus);
std::vector<Rational> eigen_residuals(const FamilyParams& params, const std::vector<Polynomial<Rational>>& polys);

}  // namespace parallel

}  // namespace bigm1::kernels

#endif  // BIGM1_KERNELS_HPP_
