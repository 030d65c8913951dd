#ifndef BIGM1_CHECKS_HPP_
#define BIGM1_CHECKS_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bigm1/params.hpp"
#include "bigm1/report.hpp"

namespace bigm1 {

enum class CheckId { kEigen, kTripleEquality, kOrtho, kPointMass, kTransforms, kLimitQ, kLimitBI, kAlgebra };

// Declaration order is report order.
inline constexpr std::array<CheckId, 8> kAllChecks{CheckId::kEigen,      CheckId::kTripleEquality, CheckId::kOrtho,
                                                   CheckId::kPointMass,  CheckId::kTransforms,     CheckId::kLimitQ,
                                                   CheckId::kLimitBI,    CheckId::kAlgebra};

std::string_view check_name(CheckId id);

/// "all" expands to kAllChecks; unknown names give nullopt.
std::optional<std::vector<CheckId>> parse_check_id(std::string_view name);

/// Empty if the check applies to params, otherwise the reason it does not.
std::string not_applicable_reason(CheckId id, const FamilyParams& params);

struct Tolerances {
  std::optional<double> off;         // ortho: normalized off-diagonal
  std::optional<double> diag;        // ortho: norm ratio vs u_n
  std::optional<double> point_mass;  // point-mass residual
  std::optional<double> rate_band;   // limit-q / limit-bi: relative band on the convergence ratio
};

struct CheckRequest {
  std::vector<CheckId> checks;
  FamilyParams params;
  std::size_t n_max = 12;
  Tolerances tol;
  bool skip_inapplicable = false;  // drop checks that do not apply instead of failing
};

struct CheckOutcome {
  VerificationReport report;
  nlohmann::ordered_json detail;
};

/// Validates params, then runs each requested check in order. Throws
/// InvalidParameters for rejected params or an inapplicable check when
/// skip_inapplicable is false.
std::vector<CheckOutcome> run_checks(const CheckRequest& request);

/// Random admissible rational params: alpha, beta = p/q > -1 with q <= 6,
/// c = p/q in (0, 4) \ {1}. Reproducible for a given seed.
std::vector<FamilyParams> random_params(std::uint64_t seed, std::size_t count);

nlohmann::ordered_json params_json(const FamilyParams& params);
nlohmann::ordered_json residual_json(const Residual& r);
nlohmann::ordered_json to_json(const CheckOutcome& outcome);

/// CSV with header check,alpha,beta,c,n_lo,n_hi,max_abs_error,tolerance,pass.
std::string to_csv(const std::vector<CheckOutcome>& outcomes);

/// %.17g
std::string format_double(double x);

}  // namespace bigm1

#endif  // BIGM1_CHECKS_HPP_
