#include "bigm1/tables.hpp"

#include <cmath>
#include <sstream>

#include "bigm1/checks.hpp"
#include "bigm1/family.hpp"
#include "bigm1/limits.hpp"

namespace bigm1 {

using nlohmann::ordered_json;

namespace {

void CheckRange(const TableRequest& r) {
  if (r.n_lo > r.n_hi) throw InvalidParameters("empty range: n_lo > n_hi");
}

Table Coeffs(const TableRequest& r) {
  validate_family(r.params);
  const RecurrencePair rec = recurrence_coeffs(r.params, r.n_hi);
  Table t{{"n", "u_n", "b_n", "u_n_float", "b_n_float"}, {}};
  for (std::size_t n = r.n_lo; n <= r.n_hi; ++n) {
    ordered_json u = n == 0 ? ordered_json(nullptr) : ordered_json(to_string(rec.u[n]));
    ordered_json uf = n == 0 ? ordered_json(nullptr) : ordered_json(to_double(rec.u[n]));
    t.rows.push_back({n, u, to_string(rec.b[n]), uf, to_double(rec.b[n])});
  }
  return t;
}

Table Polys(const TableRequest& r) {
  const auto polys = generate(r.params, r.n_hi);
  Table t{{"n", "poly", "coeffs"}, {}};
  for (std::size_t n = r.n_lo; n <= r.n_hi; ++n) {
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : polys[n].coeffs()) coeffs.push_back(to_string(c));
    t.rows.push_back({n, to_string(polys[n]), coeffs});
  }
  return t;
}

Table WeightSamples(const TableRequest& r) {
  const WeightSpec spec = weight_spec(r.params);
  Table t{{"x", "w"}, {}};
  std::vector<double> xs = r.x;
  if (xs.empty()) {
    if (r.samples == 0) throw InvalidParameters("samples must be positive");
    for (const Interval& iv : {spec.negative, spec.positive})
      for (std::size_t k = 0; k < r.samples; ++k)
        xs.push_back(iv.lo + (iv.hi - iv.lo) * (static_cast<double>(k) + 0.5) / static_cast<double>(r.samples));
  }
  for (double x : xs) t.rows.push_back({x, weight(r.params, x)});
  return t;
}

Table BICoeffs(const TableRequest& r) {
  const BIParams bp = bi_limit_params(r.params, r.N);
  if (static_cast<long>(r.n_hi) > r.N) throw InvalidParameters("n_hi exceeds N");
  Table t{{"n", "A_n", "C_n", "A_n_float", "C_n_float", "A_lim_float", "C_lim_float"}, {}};
  for (std::size_t n = r.n_lo; n <= r.n_hi; ++n) {
    const auto [A, C] = bannai_ito_AC(bp, n);
    const CoefficientPair lim = limit_AC(r.params, n);
    t.rows.push_back({n, to_string(A), to_string(C), to_double(A), to_double(C), to_double(lim.A), to_double(lim.C)});
  }
  return t;
}

Table QSweep(const TableRequest& r) {
  validate_family(r.params);
  const RecurrencePair lim = recurrence_coeffs(r.params, r.n_hi);
  Table t{{"eps", "n", "u_n", "u_n_limit", "abs_err", "b_n", "b_n_limit"}, {}};
  for (double e : r.eps) {
    const QRecurrence rec = q_recurrence(make_qparams(r.params, e), r.n_hi);
    for (std::size_t n = std::max<std::size_t>(r.n_lo, 1); n <= r.n_hi; ++n) {
      const double ul = to_double(lim.u[n]);
      t.rows.push_back({e, n, rec.u[n], ul, std::fabs(rec.u[n] - ul), rec.b[n], to_double(lim.b[n])});
    }
  }
  return t;
}

std::string CsvCell(const ordered_json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return format_double(v.get<double>());
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + CsvCell(v[i]);
    return s;
  }
  return v.dump();
}

}  // namespace

std::optional<TableKind> parse_table_kind(std::string_view name) {
  if (name == "coeffs") return TableKind::kCoeffs;
  if (name == "polys") return TableKind::kPolys;
  if (name == "weight-samples") return TableKind::kWeightSamples;
  if (name == "bi-coeffs") return TableKind::kBICoeffs;
  if (name == "q-sweep") return TableKind::kQSweep;
  return std::nullopt;
}

Table emit_table(const TableRequest& r) {
  CheckRange(r);
  switch (r.kind) {
    case TableKind::kCoeffs: return Coeffs(r);
    case TableKind::kPolys: return Polys(r);
    case TableKind::kWeightSamples: return WeightSamples(r);
    case TableKind::kBICoeffs: return BICoeffs(r);
    case TableKind::kQSweep: return QSweep(r);
  }
  throw InvalidParameters("unknown table kind");
}

ordered_json table_json(const Table& t) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : t.rows) {
    ordered_json obj;
    for (std::size_t k = 0; k < t.columns.size(); ++k) obj[t.columns[k]] = row[k];
    rows.push_back(std::move(obj));
  }
  return rows;
}

std::string table_csv(const Table& t) {
  std::ostringstream os;
  for (std::size_t k = 0; k < t.columns.size(); ++k) os << (k ? "," : "") << t.columns[k];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << CsvCell(row[k]);
    os << '\n';
  }
  return os.str();
}

}  // namespace bigm1
