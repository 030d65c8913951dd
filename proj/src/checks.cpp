#include "bigm1/checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "bigm1/awalgebra.hpp"
#include "bigm1/dunkl.hpp"
#include "bigm1/family.hpp"
#include "bigm1/kernels.hpp"
#include "bigm1/limits.hpp"
#include "bigm1/orthogonality.hpp"
#include "bigm1/transforms.hpp"

namespace bigm1 {

using nlohmann::ordered_json;

namespace {

constexpr double kPointMassTol = 1e-10;
constexpr double kPointMassControl = 1e-2;
constexpr double kRateBand = 0.25;

VerificationReport Base(CheckId id, const FamilyParams& params, long lo, long hi) {
  VerificationReport r;
  r.check = std::string(check_name(id));
  r.params = params;
  r.n_lo = lo;
  r.n_hi = hi;
  return r;
}

bool WithinBand(double ratio, double target, double band) { return std::fabs(ratio - target) <= band * target; }

CheckOutcome Eigen(const CheckRequest& req) {
  const auto polys = generate(req.params, req.n_max);
  const auto res = kernels::parallel::eigen_residuals(req.params, polys);
  CheckOutcome out{Base(CheckId::kEigen, req.params, 0, static_cast<long>(req.n_max)), ordered_json::object()};
  Rational worst = 0;
  for (const auto& r : res) worst = std::max(worst, r);
  out.report.max_abs_error = worst;
  out.report.tolerance = Rational(0);
  out.report.pass = worst == 0;
  return out;
}

CheckOutcome TripleEquality(const CheckRequest& req) {
  const auto rec = generate(req.params, req.n_max);
  Rational explicit_diff = 0, phi_diff = 0;
  for (std::size_t n = 0; n <= req.n_max; ++n) {
    explicit_diff = std::max(explicit_diff, max_abs_coeff(rec[n] - explicit_form(req.params, n)));
    phi_diff = std::max(phi_diff, max_abs_coeff(rec[n] - pn_via_phi(req.params, n)));
  }
  CheckOutcome out{Base(CheckId::kTripleEquality, req.params, 0, static_cast<long>(req.n_max)), ordered_json::object()};
  out.report.max_abs_error = std::max(explicit_diff, phi_diff);
  out.report.tolerance = Rational(0);
  out.report.pass = explicit_diff == 0 && phi_diff == 0;
  out.detail["recurrence_vs_explicit"] = to_string(explicit_diff);
  out.detail["recurrence_vs_phi"] = to_string(phi_diff);
  return out;
}

CheckOutcome Ortho(const CheckRequest& req) {
  const double tol_off = req.tol.off.value_or(kDefaultTolOff);
  const double tol_diag = req.tol.diag.value_or(kDefaultTolDiag);
  const GramReport g = gram_check(req.params, std::max<std::size_t>(req.n_max, 1), tol_off, tol_diag);
  CheckOutcome out{Base(CheckId::kOrtho, req.params, 0, static_cast<long>(g.n_max)), ordered_json::object()};
  out.report.max_abs_error = g.offdiag_max;
  out.report.tolerance = tol_off;
  out.report.pass = g.pass;
  out.detail["norm_ratio_rel_error"] = g.diag_ratio_err;
  out.detail["norm_ratio_tolerance"] = tol_diag;
  out.detail["branch"] = is_inner_branch(req.params) ? "0<c<1" : "c>1";
  return out;
}

CheckOutcome PointMass(const CheckRequest& req) {
  const double tol = req.tol.point_mass.value_or(kPointMassTol);
  const double r = point_mass_test(req.params);
  const double control = point_mass_residual(req.params, req.params.c);
  CheckOutcome out{Base(CheckId::kPointMass, req.params, 1, 1), ordered_json::object()};
  out.report.max_abs_error = r;
  out.report.tolerance = tol;
  out.report.pass = r < tol && control > kPointMassControl;
  out.detail["mu"] = to_string(Rational(-req.params.c));
  out.detail["control_mu"] = to_string(req.params.c);
  out.detail["control_residual"] = control;
  out.detail["control_threshold"] = kPointMassControl;
  return out;
}

CheckOutcome Transforms(const CheckRequest& req) {
  const std::size_t n_max = std::max<std::size_t>(req.n_max, 2);
  CheckOutcome out{Base(CheckId::kTransforms, req.params, 0, static_cast<long>(n_max)), ordered_json::object()};
  out.report.tolerance = Rational(0);
  try {
    // Christoffel/Geronimus round trip on the family itself at nu^2 = 1.
    const RecurrencePair rec = recurrence_coeffs(req.params, n_max);
    const MonicOPS P = make_monic_ops(rec.b, rec.u, n_max);
    const ChristoffelResult ct = christoffel(P, 1);
    const MonicOPS back = geronimus_reconstruct(ct.Q, geronimus_coefficients(P, ct.A), ct.A, 1);
    Rational round_trip = 0;
    for (std::size_t n = 0; n < back.size(); ++n) round_trip = std::max(round_trip, max_abs_coeff(back.polys[n] - P.polys[n]));

    const GeronimusLink link = geronimus_link(req.params, n_max);
    const Rational mu_err = abs(link.mu_value + req.params.c);

    // Christoffel coefficients of the Jacobi instance against their closed forms.
    const Rational xi = (req.params.alpha - 1) / 2, eta = (req.params.beta + 1) / 2;
    Rational closed = 0;
    const std::size_t half = link.R.v.size() / 2;
    for (std::size_t n = 0; n < half; ++n) {
      closed = std::max(closed, abs_value(link.R.v[2 * n + 1] + jacobi_A(xi, eta, req.params.c, n)));
      if (n >= 1) closed = std::max(closed, abs_value(link.R.v[2 * n] + jacobi_B(xi, eta, req.params.c, n)));
    }

    bool signs_ok = true;
    if (is_inner_branch(req.params))
      for (std::size_t n = 1; n < link.R.v.size(); ++n) signs_ok = signs_ok && link.R.v[n] < 0;

    const Rational worst = std::max({round_trip, mu_err, closed});
    out.report.max_abs_error = worst;
    out.report.pass = worst == 0 && signs_ok;
    out.detail["round_trip"] = to_string(round_trip);
    out.detail["mu"] = to_string(link.mu_value);
    out.detail["mu_plus_c"] = to_string(mu_err);
    out.detail["jacobi_closed_forms"] = to_string(closed);
    out.detail["v_negative"] = is_inner_branch(req.params) ? ordered_json(signs_ok) : ordered_json("not checked for c>1");
  } catch (const InconsistentIdentity& e) {
    out.report.max_abs_error = std::nan("");
    out.report.pass = false;
    out.report.note = e.what();
    out.detail["error"] = e.what();
  }
  return out;
}

CheckOutcome LimitQ(const CheckRequest& req) {
  const double band = req.tol.rate_band.value_or(kRateBand);
  const std::size_t n_max = std::max<std::size_t>(req.n_max, 1);
  const QConvergence qc = q_convergence(req.params, {1e-2, 1e-3, 1e-4}, n_max, n_max);
  const double u_ratio = qc.sup_err[1] / qc.sup_err[2];
  const double op_ratio = qc.op_err[1] / qc.op_err[2];
  CheckOutcome out{Base(CheckId::kLimitQ, req.params, 1, static_cast<long>(n_max)), ordered_json::object()};
  out.report.max_abs_error = qc.sup_err[2];
  out.report.tolerance = band;
  out.report.pass = WithinBand(u_ratio, 10, band) && WithinBand(op_ratio, 10, band);
  out.detail["eps"] = qc.eps;
  out.detail["sup_u_error"] = qc.sup_err;
  out.detail["operator_error"] = qc.op_err;
  out.detail["u_ratio_1e-3_over_1e-4"] = u_ratio;
  out.detail["operator_ratio_1e-3_over_1e-4"] = op_ratio;
  std::vector<double> per_n;
  for (std::size_t n = 0; n < qc.err[1].size(); ++n) per_n.push_back(qc.err[1][n] / qc.err[2][n]);
  out.detail["per_n_u_ratio"] = per_n;
  return out;
}

CheckOutcome LimitBI(const CheckRequest& req) {
  const double band = req.tol.rate_band.value_or(kRateBand);
  long N0 = 64;
  while (N0 <= static_cast<long>(2 * req.n_max)) N0 *= 2;
  const BIConvergence bc = bi_convergence(req.params, req.n_max, {N0, 2 * N0, 4 * N0});
  std::vector<double> err, ratios, dist;
  bool rate_ok = true, grid_ok = true;
  const double beta = to_double(req.params.beta), c = to_double(req.params.c);
  for (std::size_t k = 0; k < bc.N.size(); ++k) {
    err.push_back(to_double(bc.err_A[k]));
    dist.push_back(to_double(bc.grid_dist[k]));
    const double bound = (1 + c) * (std::fabs(beta) + 1) / static_cast<double>(bc.N[k] + 1);
    grid_ok = grid_ok && dist.back() <= bound;
    if (k >= 1) {
      const double ratio = to_double(Rational(bc.err_A[k] / bc.err_A[k - 1]));
      ratios.push_back(ratio);
      rate_ok = rate_ok && WithinBand(ratio, 0.5, band);
    }
  }
  CheckOutcome out{Base(CheckId::kLimitBI, req.params, 0, static_cast<long>(req.n_max)), ordered_json::object()};
  out.report.max_abs_error = err.back();
  out.report.tolerance = band;
  out.report.pass = rate_ok && grid_ok;
  out.detail["N"] = bc.N;
  out.detail["max_A_error"] = err;
  std::vector<double> errc;
  for (const auto& e : bc.err_C) errc.push_back(to_double(e));
  out.detail["max_C_error"] = errc;
  out.detail["A_error_ratio"] = ratios;
  out.detail["grid_max_distance"] = dist;
  out.detail["grid_points_checked"] = bc.grid_points;
  return out;
}

CheckOutcome Algebra(const CheckRequest& req) {
  const std::size_t deg = std::max<std::size_t>(req.n_max, 1);
  const VerificationReport anti = verify_anticommutators(req.params, deg + 2);
  const VerificationReport cas = verify_casimir(req.params, deg + 3);
  const VerificationReport dual = dual_realization(req.params, std::max<std::size_t>(req.n_max, 4));
  CheckOutcome out{Base(CheckId::kAlgebra, req.params, 0, static_cast<long>(deg)), ordered_json::object()};
  const Rational worst = std::max({std::get<Rational>(anti.max_abs_error), std::get<Rational>(cas.max_abs_error),
                                   std::get<Rational>(dual.max_abs_error)});
  out.report.max_abs_error = worst;
  out.report.tolerance = Rational(0);
  out.report.pass = anti.pass && cas.pass && dual.pass;
  out.detail["anticommutators"] = anti.note;
  out.detail["casimir"] = cas.note;
  out.detail["dual"] = dual.note;
  return out;
}

CheckOutcome RunOne(CheckId id, const CheckRequest& req) {
  switch (id) {
    case CheckId::kEigen: return Eigen(req);
    case CheckId::kTripleEquality: return TripleEquality(req);
    case CheckId::kOrtho: return Ortho(req);
    case CheckId::kPointMass: return PointMass(req);
    case CheckId::kTransforms: return Transforms(req);
    case CheckId::kLimitQ: return LimitQ(req);
    case CheckId::kLimitBI: return LimitBI(req);
    case CheckId::kAlgebra: return Algebra(req);
  }
  throw InvalidParameters("unknown check");
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

}  // namespace

std::string_view check_name(CheckId id) {
  switch (id) {
    case CheckId::kEigen: return "eigen";
    case CheckId::kTripleEquality: return "triple-equality";
    case CheckId::kOrtho: return "ortho";
    case CheckId::kPointMass: return "point-mass";
    case CheckId::kTransforms: return "transforms";
    case CheckId::kLimitQ: return "limit-q";
    case CheckId::kLimitBI: return "limit-bi";
    case CheckId::kAlgebra: return "algebra";
  }
  return "?";
}

std::optional<std::vector<CheckId>> parse_check_id(std::string_view name) {
  if (name == "all") return std::vector<CheckId>(kAllChecks.begin(), kAllChecks.end());
  for (CheckId id : kAllChecks)
    if (check_name(id) == name) return std::vector<CheckId>{id};
  return std::nullopt;
}

std::string not_applicable_reason(CheckId id, const FamilyParams& params) {
  if ((id == CheckId::kPointMass || id == CheckId::kLimitBI) && !is_inner_branch(params))
    return std::string(check_name(id)) + " is defined for 0 < c < 1 only";
  return {};
}

std::vector<CheckOutcome> run_checks(const CheckRequest& request) {
  validate_family(request.params);
  std::vector<CheckOutcome> out;
  for (CheckId id : request.checks) {
    if (std::string why = not_applicable_reason(id, request.params); !why.empty()) {
      if (request.skip_inapplicable) continue;
      throw InvalidParameters(why);
    }
    out.push_back(RunOne(id, request));
  }
  return out;
}

std::vector<FamilyParams> random_params(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::uint64_t lo, std::uint64_t span) { return static_cast<long>(lo + rng() % span); };
  std::vector<FamilyParams> out;
  while (out.size() < count) {
    const long qa = pick(1, 6), qb = pick(1, 6), qc = pick(2, 7);
    const long pa = pick(0, 5 * static_cast<std::uint64_t>(qa)) - qa + 1;  // > -1
    const long pb = pick(0, 5 * static_cast<std::uint64_t>(qb)) - qb + 1;
    const long pc = pick(1, 4 * static_cast<std::uint64_t>(qc) - 1);       // (0, 4)
    FamilyParams p{make_rational(pa, qa), make_rational(pb, qb), make_rational(pc, qc)};
    if (p.c == 1) continue;
    out.push_back(p);
  }
  return out;
}

ordered_json params_json(const FamilyParams& params) {
  return ordered_json{{"alpha", to_string(params.alpha)}, {"beta", to_string(params.beta)}, {"c", to_string(params.c)}};
}

ordered_json residual_json(const Residual& r) {
  if (const auto* q = std::get_if<Rational>(&r)) return to_string(*q);
  const double d = std::get<double>(r);
  if (!std::isfinite(d)) return nullptr;
  return d;
}

ordered_json to_json(const CheckOutcome& o) {
  ordered_json j;
  j["check"] = o.report.check;
  j["params"] = params_json(o.report.params);
  j["n_range"] = {o.report.n_lo, o.report.n_hi};
  j["max_abs_error"] = residual_json(o.report.max_abs_error);
  j["tolerance"] = residual_json(o.report.tolerance);
  j["pass"] = o.report.pass;
  if (!o.detail.empty()) j["detail"] = o.detail;
  return j;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string to_csv(const std::vector<CheckOutcome>& outcomes) {
  auto cell = [](const Residual& r) {
    if (const auto* q = std::get_if<Rational>(&r)) return to_string(*q);
    const double d = std::get<double>(r);
    return std::isfinite(d) ? format_double(d) : std::string();
  };
  std::ostringstream os;
  os << "check,alpha,beta,c,n_lo,n_hi,max_abs_error,tolerance,pass\n";
  for (const auto& o : outcomes) {
    const auto& r = o.report;
    os << CsvField(r.check) << ',' << to_string(r.params.alpha) << ',' << to_string(r.params.beta) << ','
       << to_string(r.params.c) << ',' << r.n_lo << ',' << r.n_hi << ',' << cell(r.max_abs_error) << ','
       << cell(r.tolerance) << ',' << (r.pass ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace bigm1
