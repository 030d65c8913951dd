// Command-line front end: verification suites and data tables.
//
//   bigm1 check <id> --alpha A --beta B --c C --n-max N [--format json|csv]
//   bigm1 check all --seed S --sweep K
//   bigm1 table <kind> --alpha A --beta B --c C [--n-min L] --n-max N
//
// Exit status: 0 if every executed check passes, 1 if some check fails,
// 2 for rejected input (reported as a JSON error object on stdout).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigm1/checks.hpp"
#include "bigm1/tables.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitFail = 1;
constexpr int kExitError = 2;

int ReportError(const std::string& type, const std::string& message) {
  ordered_json err{{"error", {{"type", type}, {"message", message}}}};
  std::cout << err.dump(2) << '\n';
  return kExitError;
}

struct ParamArgs {
  std::string alpha = "0";
  std::string beta = "0";
  std::string c = "1/2";

  bigm1::FamilyParams Parse() const {
    return {bigm1::parse_rational(alpha), bigm1::parse_rational(beta), bigm1::parse_rational(c)};
  }
};

void AddParamOptions(CLI::App* cmd, ParamArgs& p) {
  cmd->add_option("--alpha", p.alpha, "alpha (p, p/q or decimal)")->capture_default_str();
  cmd->add_option("--beta", p.beta, "beta")->capture_default_str();
  cmd->add_option("--c", p.c, "c")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Big -1 Jacobi verification toolkit"};
  app.require_subcommand(1);

  ParamArgs params;
  std::string format = "json";
  std::size_t n_max = 12;

  std::string check_id;
  std::optional<double> tol_off, tol_diag, tol_pm, rate_band;
  std::optional<std::uint64_t> seed;
  std::size_t sweep = 0;

  auto* check = app.add_subcommand("check", "Run a verification suite");
  check->add_option("id", check_id, "eigen | triple-equality | ortho | point-mass | transforms | limit-q | limit-bi | "
                                    "algebra | all")
      ->required();
  AddParamOptions(check, params);
  check->add_option("--n-max", n_max, "highest degree")->capture_default_str();
  check->add_option("--tol-off", tol_off, "ortho: off-diagonal tolerance");
  check->add_option("--tol-diag", tol_diag, "ortho: norm-ratio tolerance");
  check->add_option("--tol-point-mass", tol_pm, "point-mass residual tolerance");
  check->add_option("--rate-band", rate_band, "relative band on convergence ratios");
  check->add_option("--seed", seed, "seed for a randomized parameter sweep");
  check->add_option("--sweep", sweep, "number of random parameter sets (with --seed)");
  check->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

  std::string table_kind;
  std::size_t n_min = 0;
  long big_n = 64;
  std::vector<double> eps{1e-2, 1e-3, 1e-4};
  std::size_t samples = 8;
  std::vector<double> xs;
  auto* table = app.add_subcommand("table", "Emit a data table");
  table->add_option("kind", table_kind, "coeffs | polys | weight-samples | bi-coeffs | q-sweep")->required();
  AddParamOptions(table, params);
  table->add_option("--n-min", n_min, "lowest index")->capture_default_str();
  table->add_option("--n-max", n_max, "highest index")->capture_default_str();
  table->add_option("--N", big_n, "bi-coeffs: grid size (even)")->capture_default_str();
  table->add_option("--eps", eps, "q-sweep: eps values");
  table->add_option("--samples", samples, "weight-samples: points per interval")->capture_default_str();
  table->add_option("--x", xs, "weight-samples: explicit abscissae");
  table->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return ReportError("UsageError", e.what());
  }

  try {
    if (check->parsed()) {
      const auto ids = bigm1::parse_check_id(check_id);
      if (!ids) return ReportError("UnknownCheck", "unknown check id '" + check_id + "'");

      std::vector<bigm1::FamilyParams> sets;
      if (seed) {
        if (sweep == 0) return ReportError("UsageError", "--seed needs --sweep K with K > 0");
        sets = bigm1::random_params(*seed, sweep);
      } else {
        sets.push_back(params.Parse());
      }

      std::vector<bigm1::CheckOutcome> all;
      for (const auto& p : sets) {
        bigm1::CheckRequest req;
        req.checks = *ids;
        req.params = p;
        req.n_max = n_max;
        req.tol = {tol_off, tol_diag, tol_pm, rate_band};
        req.skip_inapplicable = ids->size() > 1 || seed.has_value();
        auto out = bigm1::run_checks(req);
        all.insert(all.end(), out.begin(), out.end());
      }

      if (format == "csv") {
        std::cout << bigm1::to_csv(all);
      } else {
        ordered_json arr = ordered_json::array();
        for (const auto& o : all) arr.push_back(bigm1::to_json(o));
        std::cout << arr.dump(2) << '\n';
      }
      for (const auto& o : all)
        if (!o.report.pass) return kExitFail;
      return 0;
    }

    const auto kind = bigm1::parse_table_kind(table_kind);
    if (!kind) return ReportError("UnknownTable", "unknown table kind '" + table_kind + "'");
    bigm1::TableRequest req;
    req.kind = *kind;
    req.params = params.Parse();
    req.n_lo = n_min;
    req.n_hi = n_max;
    req.N = big_n;
    req.eps = eps;
    req.samples = samples;
    req.x = xs;
    const bigm1::Table t = bigm1::emit_table(req);
    if (format == "csv") {
      std::cout << bigm1::table_csv(t);
    } else {
      std::cout << bigm1::table_json(t).dump(2) << '\n';
    }
    return 0;
  } catch (const bigm1::InvalidParameters& e) {
    return ReportError("InvalidParameters", e.what());
  } catch (const bigm1::OutsideSupport& e) {
    return ReportError("OutsideSupport", e.what());
  } catch (const bigm1::DegenerateSpectrum& e) {
    return ReportError("DegenerateSpectrum", e.what());
  } catch (const bigm1::PochhammerPole& e) {
    return ReportError("PochhammerPole", e.what());
  } catch (const std::invalid_argument& e) {
    return ReportError("InvalidArgument", e.what());
  } catch (const std::exception& e) {
    return ReportError("InternalError", e.what());
  }
}
