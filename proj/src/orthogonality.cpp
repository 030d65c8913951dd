#include "bigm1/orthogonality.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bigm1/family.hpp"
#include "bigm1/kernels.hpp"

namespace bigm1 {

namespace {

// Exponents of the folded weight on the positive interval, in x^2:
// inner branch (1 - x^2)^first (x^2 - c^2)^second, outer branch
// (x^2 - 1)^first (c^2 - x^2)^second.
struct FoldExponents {
  double first;
  double second;
};

struct MappedRule {
  std::vector<double> x;     // sqrt(u_j)
  std::vector<double> base;  // L^{first+second+1} W_j / (2 x_j)
};

// int over the positive interval of phi(x) * (folded weight) dx
//   = sum_j base[j] * phi(x[j]).
MappedRule MapRule(WeightBranch branch, double c, FoldExponents e, std::size_t count) {
  MappedRule m;
  m.x.resize(count);
  m.base.resize(count);
  if (branch == WeightBranch::kInner) {
    const double len = 1 - c * c;
    QuadratureRule q = gauss_jacobi_rule(e.first, e.second, count);  // (1-t)^first t^second
    const double scale = std::pow(len, e.first + e.second + 1);
    for (std::size_t j = 0; j < count; ++j) {
      const double u = c * c + len * q.nodes[j];
      m.x[j] = std::sqrt(u);
      m.base[j] = scale * q.weights[j] / (2 * m.x[j]);
    }
  } else {
    const double len = c * c - 1;
    QuadratureRule q = gauss_jacobi_rule(e.second, e.first, count);  // t^first (1-t)^second
    const double scale = std::pow(len, e.first + e.second + 1);
    for (std::size_t j = 0; j < count; ++j) {
      const double u = 1 + len * q.nodes[j];
      m.x[j] = std::sqrt(u);
      m.base[j] = scale * q.weights[j] / (2 * m.x[j]);
    }
  }
  return m;
}

std::size_t ExactCount(std::size_t degree) { return degree / 2 + 2; }

double AnalyticMoment(const FamilyParams& params, std::size_t k) {
  const WeightSpec spec = weight_spec(params);
  if (params.c == 0) throw InvalidParameters("analytic moments need c > 0");
  const bool inner = spec.branch == WeightBranch::kInner;
  const double first = (to_double(params.alpha) - 1) / 2;
  const double second = (to_double(params.beta) - 1) / 2;
  const Rational& c = params.c;
  const Rational sign = inner ? 1 : -1;

  // Folded integrand in u = x^2 (after dx = du / (2x)):
  //   k = 2m    : sign (1 - c) u^m
  //   k = 2m + 1: sign (u - c) u^m
  const std::size_t m = k / 2;
  Polynomial<Rational> f = Polynomial<Rational>::Monomial(m, sign);
  if (k % 2 == 0) {
    f *= Rational(1 - c);
  } else {
    f = f * Polynomial<Rational>::Linear(c);
  }
  // u = u0 + L t
  const Rational u0 = inner ? Rational(c * c) : Rational(1);
  const Rational len = inner ? Rational(1 - c * c) : Rational(c * c - 1);
  const Polynomial<Rational> g = compose(f, Polynomial<Rational>{u0, len});

  // inner: t^second (1-t)^first ; outer: t^first (1-t)^second
  const double p = inner ? second + 1 : first + 1;
  const double q = inner ? first + 1 : second + 1;
  double beta_j = beta_function(p, q);
  double sum = 0;
  for (std::size_t j = 0; j < g.coeffs().size(); ++j) {
    sum += to_double(g.coeffs()[j]) * beta_j;
    beta_j *= (p + static_cast<double>(j)) / (p + q + static_cast<double>(j));
  }
  return std::pow(to_double(len), first + second + 1) * sum;
}

double QuadratureMoment(const FamilyParams& params, std::size_t k) {
  const FoldedRule rule = folded_rule(params, ExactCount(k + 2));
  double sum = 0;
  for (std::size_t j = 0; j < rule.size(); ++j) {
    const double xk = std::pow(rule.x[j], static_cast<double>(k));
    sum += rule.plus[j] * xk + rule.minus[j] * (k % 2 == 0 ? xk : -xk);
  }
  return sum;
}

}  // namespace

FoldedRule folded_rule(const FamilyParams& params, std::size_t count) {
  const WeightSpec spec = weight_spec(params);
  if (params.c == 0) throw InvalidParameters("folded rule needs c > 0");
  const double c = to_double(params.c);
  const FoldExponents e{(to_double(params.alpha) - 1) / 2, (to_double(params.beta) - 1) / 2};
  const MappedRule m = MapRule(spec.branch, c, e, count);
  FoldedRule r;
  r.x = m.x;
  r.plus.resize(count);
  r.minus.resize(count);
  for (std::size_t j = 0; j < count; ++j) {
    const double x = m.x[j];
    if (spec.branch == WeightBranch::kInner) {
      // w(x) = (x+1)(x-c) g, w(-x) = (1-x)(x+c) g
      r.plus[j] = m.base[j] * (x + 1) * (x - c);
      r.minus[j] = m.base[j] * (1 - x) * (x + c);
    } else {
      // w(x) = (x+1)(c-x) g, w(-x) = (x-1)(x+c) g
      r.plus[j] = m.base[j] * (x + 1) * (c - x);
      r.minus[j] = m.base[j] * (x - 1) * (x + c);
    }
  }
  return r;
}

FoldedRule geronimus_rule(const FamilyParams& params, const Rational& mu, std::size_t count) {
  validate_family(params);
  if (!(params.c < 1)) throw InvalidParameters("the interleaved weight W is defined for 0 < c < 1");
  if (mu != params.c && mu != -params.c) throw InvalidParameters("mu must be +c or -c");
  const double c = to_double(params.c);
  const double m = to_double(mu);
  // W(x)/(x-mu) on (c,1): (1+x)(1-u)^xi (u-c^2)^eta / (x - mu)
  // W(-x)/(-x-mu):        (1-x)(1-u)^xi (u-c^2)^eta / (x + mu)
  // with (u-c^2)^eta = (u-c^2)^{eta-1} (x-c)(x+c).
  const FoldExponents e{(to_double(params.alpha) - 1) / 2, (to_double(params.beta) + 1) / 2 - 1};
  const MappedRule mr = MapRule(WeightBranch::kInner, c, e, count);
  FoldedRule r;
  r.x = mr.x;
  r.plus.resize(count);
  r.minus.resize(count);
  for (std::size_t j = 0; j < count; ++j) {
    const double x = mr.x[j];
    r.plus[j] = mr.base[j] * (1 + x) * ((x - c) / (x - m)) * (x + c);
    r.minus[j] = mr.base[j] * (1 - x) * (x - c) * ((x + c) / (x + m));
  }
  return r;
}

double integrate(const FoldedRule& rule, const Polynomial<Rational>& f) {
  double sum = 0;
  for (std::size_t j = 0; j < rule.size(); ++j)
    sum += rule.plus[j] * eval_exact_at(f, rule.x[j]) + rule.minus[j] * eval_exact_at(f, -rule.x[j]);
  return sum;
}

double moment(const FamilyParams& params, std::size_t k, MomentMethod method) {
  return method == MomentMethod::kAnalytic ? AnalyticMoment(params, k) : QuadratureMoment(params, k);
}

double inner_product(const FamilyParams& params, const Polynomial<Rational>& p, const Polynomial<Rational>& q) {
  const std::size_t degree = static_cast<std::size_t>(std::max(0, p.degree()) + std::max(0, q.degree()));
  return integrate(folded_rule(params, ExactCount(degree + 2)), p * q);
}

GramReport gram_check(const FamilyParams& params, std::size_t n_max, double tol_off, double tol_diag) {
  if (n_max < 1) throw InvalidParameters("gram_check needs n_max >= 1");
  validate_family(params);
  const auto polys = generate(params, n_max);
  const RecurrencePair rec = recurrence_coeffs(params, n_max);
  const FoldedRule rule = folded_rule(params, ExactCount(2 * n_max + 2) + 2);

  const kernels::NodeValues values = kernels::parallel::evaluate_on_nodes(polys, rule.x);
  const std::vector<double> gram = kernels::parallel::gram_matrix(values, rule.plus, rule.minus);

  GramReport rep;
  rep.n_max = n_max;
  rep.tol_off = tol_off;
  rep.tol_diag = tol_diag;
  const std::size_t dim = n_max + 1;
  for (std::size_t n = 0; n < dim; ++n) rep.diag.push_back(gram[n * dim + n]);
  for (std::size_t n = 0; n < dim; ++n)
    for (std::size_t m = 0; m < n; ++m)
      rep.offdiag_max =
          std::max(rep.offdiag_max, std::fabs(gram[n * dim + m]) / std::sqrt(std::fabs(rep.diag[n] * rep.diag[m])));
  for (std::size_t n = 1; n < dim; ++n) {
    const double u = to_double(rec.u[n]);
    rep.diag_ratio_err = std::max(rep.diag_ratio_err, std::fabs(rep.diag[n] / rep.diag[n - 1] - u) / u);
  }
  rep.pass = rep.offdiag_max < tol_off && rep.diag_ratio_err < tol_diag;
  return rep;
}

double point_mass_residual(const FamilyParams& params, const Rational& mu) {
  const auto polys = generate(params, 1);
  const Polynomial<Rational>& p1 = polys[1];
  const FoldedRule true_rule = folded_rule(params, 4);
  const double norm = std::sqrt(integrate(true_rule, Polynomial<Rational>::Constant(1)) * integrate(true_rule, p1 * p1));
  return std::fabs(integrate(geronimus_rule(params, mu, 4), p1)) / norm;
}

double point_mass_test(const FamilyParams& params) { return point_mass_residual(params, -params.c); }

}  // namespace bigm1
