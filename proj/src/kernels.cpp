#include "bigm1/kernels.hpp"

#include "bigm1/dunkl.hpp"

namespace bigm1::kernels {

namespace {

NodeValues Allocate(std::size_t rows, std::size_t cols) {
  NodeValues v;
  v.rows = rows;
  v.cols = cols;
  v.pos.assign(rows * cols, 0.0);
  v.neg.assign(rows * cols, 0.0);
  return v;
}

void EvaluateCell(const std::vector<Polynomial<Rational>>& polys, const std::vector<double>& nodes, NodeValues& v,
                  std::size_t n, std::size_t j) {
  const Rational x = exact_rational(nodes[j]);
  v.pos[n * v.cols + j] = eval(polys[n], x).get_d();
  v.neg[n * v.cols + j] = eval(polys[n], Rational(-x)).get_d();
}

double GramEntry(const NodeValues& v, const std::vector<double>& plus, const std::vector<double>& minus,
                 std::size_t n, std::size_t m) {
  double s = 0;
  const double* pn = &v.pos[n * v.cols];
  const double* pm = &v.pos[m * v.cols];
  const double* qn = &v.neg[n * v.cols];
  const double* qm = &v.neg[m * v.cols];
  for (std::size_t j = 0; j < v.cols; ++j) s += plus[j] * pn[j] * pm[j] + minus[j] * qn[j] * qm[j];
  return s;
}

Rational EigenResidual(const FamilyParams& params, const Polynomial<Rational>& p, std::size_t n) {
  return max_abs_coeff(apply_L0(params, p) - eigenvalue_lambda(n, params) * p);
}

}  // namespace

namespace serial {

NodeValues evaluate_on_nodes(const std::vector<Polynomial<Rational>>& polys, const std::vector<double>& nodes) {
  NodeValues v = Allocate(polys.size(), nodes.size());
  for (std::size_t n = 0; n < v.rows; ++n)
    for (std::size_t j = 0; j < v.cols; ++j) EvaluateCell(polys, nodes, v, n, j);
  return v;
}

std::vector<double> gram_matrix(const NodeValues& v, const std::vector<double>& plus, const std::vector<double>& minus) {
  const std::size_t d = v.rows;
  std::vector<double> g(d * d, 0.0);
  for (std::size_t n = 0; n < d; ++n)
    for (std::size_t m = 0; m <= n; ++m) g[n * d + m] = g[m * d + n] = GramEntry(v, plus, minus, n, m);
  return g;
}

std::vector<Rational> eigen_residuals(const FamilyParams& params, const std::vector<Polynomial<Rational>>& polys) {
  std::vector<Rational> r(polys.size());
  for (std::size_t n = 0; n < polys.size(); ++n) r[n] = EigenResidual(params, polys[n], n);
  return r;
}

}  // namespace serial

namespace parallel {

NodeValues evaluate_on_nodes(const std::vector<Polynomial<Rational>>& polys, const std::vector<double>& nodes) {
  NodeValues v = Allocate(polys.size(), nodes.size());
  const long total = static_cast<long>(v.rows * v.cols);
#pragma omp parallel for schedule(dynamic, 4)
  for (long k = 0; k < total; ++k) {
    const std::size_t n = static_cast<std::size_t>(k) / v.cols;
    const std::size_t j = static_cast<std::size_t>(k) % v.cols;
    EvaluateCell(polys, nodes, v, n, j);
  }
  return v;
}

std::vector<double> gram_matrix(const NodeValues& v, const std::vector<double>& plus, const std::vector<double>& minus) {
  const std::size_t d = v.rows;
  std::vector<double> g(d * d, 0.0);
  const long rows = static_cast<long>(d);
#pragma omp parallel for schedule(dynamic)
  for (long nl = 0; nl < rows; ++nl) {
    const std::size_t n = static_cast<std::size_t>(nl);
    for (std::size_t m = 0; m <= n; ++m) g[n * d + m] = g[m * d + n] = GramEntry(v, plus, minus, n, m);
  }
  return g;
}

std::vector<Rational> eigen_residuals(const FamilyParams& params, const std::vector<Polynomial<Rational>>& polys) {
  std::vector<Rational> r(polys.size());
  const long count = static_cast<long>(polys.size());
#pragma omp parallel for schedule(dynamic)
  for (long nl = 0; nl < count; ++nl) {
    const std::size_t n = static_cast<std::size_t>(nl);
    r[n] = EigenResidual(params, polys[n], n);
  }
  return r;
}

}  // namespace parallel

}  // namespace bigm1::kernels
