#ifndef BIGM1_TABLES_HPP_
#define BIGM1_TABLES_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bigm1/params.hpp"

namespace bigm1 {

enum class TableKind { kCoeffs, kPolys, kWeightSamples, kBICoeffs, kQSweep };

std::optional<TableKind> parse_table_kind(std::string_view name);

struct TableRequest {
  TableKind kind = TableKind::kCoeffs;
  FamilyParams params;
  std::size_t n_lo = 0;
  std::size_t n_hi = 10;
  long N = 64;                             // bi-coeffs
  std::vector<double> eps{1e-2, 1e-3, 1e-4};  // q-sweep
  std::size_t samples = 8;                 // weight-samples, per interval
  std::vector<double> x;                   // weight-samples at explicit abscissae
};

// Columns per kind (exact values are "p/q" strings, *_float columns numbers):
//   coeffs         n, u_n, b_n, u_n_float, b_n_float        (u_0 is null)
//   polys          n, poly, coeffs (ascending, exact)
//   weight-samples x, w
//   bi-coeffs      n, A_n, C_n, A_n_float, C_n_float, A_lim_float, C_lim_float
//   q-sweep        eps, n, u_n, u_n_limit, abs_err, b_n, b_n_limit
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::ordered_json>> rows;
};

/// Throws InvalidParameters on a bad range or params and OutsideSupport for a
/// weight sample outside the open support.
Table emit_table(const TableRequest& request);

nlohmann::ordered_json table_json(const Table& t);
std::string table_csv(const Table& t);

}  // namespace bigm1

#endif  // BIGM1_TABLES_HPP_
