#include "s1yamabe/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "s1yamabe/errors.hpp"

namespace s1yamabe {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_positive_ell(double ell) {
  if (!(ell > 0) || !std::isfinite(ell)) throw Error(ErrorCode::InvalidArgument, "fiber length must be positive");
}
}  // namespace

std::string to_string(ScanFlag flag) {
  switch (flag) {
    case ScanFlag::None: return "none";
    case ScanFlag::MaxInterior: return "MaxInterior";
    case ScanFlag::DivergesAsEllGrows: return "DivergesAsEllGrows";
    case ScanFlag::SupZeroNotAttained: return "SupZeroNotAttained";
  }
  return "unknown";
}

std::vector<double> log_grid(double lo, double hi, int n) {
  require_positive_ell(lo);
  require_positive_ell(hi);
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "grid needs at least one point");
  if (n == 1) return {lo};
  std::vector<double> out(n);
  const double a = std::log(lo), b = std::log(hi);
  for (int i = 0; i < n; ++i) out[i] = std::exp(a + (b - a) * i / (n - 1));
  out.front() = lo;
  out.back() = hi;
  return out;
}

std::vector<double> log_grid_per_decade(double lo, double hi, int per_decade) {
  require_positive_ell(lo);
  require_positive_ell(hi);
  if (per_decade < 1) throw Error(ErrorCode::InvalidArgument, "per_decade must be positive");
  const double decades = std::abs(std::log10(hi / lo));
  const int n = std::max(2, static_cast<int>(std::ceil(decades * per_decade - 1e-9)) + 1);
  return log_grid(lo, hi, n);
}

CollapseBounds collapse_bounds(const BaseData& d, const NormReport& norms, double ell) {
  if (d.chi > 0) throw Error(ErrorCode::ChiPositive, "collapse bounds apply to chi <= 0 bases");
  require_positive_ell(ell);
  if (ell > 1.0) throw Error(ErrorCode::InvalidArgument, "collapse bounds are stated for ell <= 1");
  CollapseBounds b;
  b.upper = functional_J_closed(d, ell);
  b.lower = -std::cbrt(kTwoPi * ell * kTwoPi * ell) * (norms.scal_L32 + 0.25 * norms.omega_L3_sq);
  return b;
}

CollapseBounds collapse_bounds(const Base& base, const RadialFunction& F, double ell) {
  if (base.euler_characteristic() > 0) throw Error(ErrorCode::ChiPositive, "collapse bounds apply to chi <= 0 bases");
  const NormReport norms = omega_norms(InvariantMetric(base, RadialFunction::constant(1.0), F));
  return collapse_bounds(base_data(base, F), norms, ell);
}

ScanTable ell_scan(const Base& base, const RadialFunction& F, const std::vector<double>& ell_values) {
  if (ell_values.empty()) throw Error(ErrorCode::InvalidArgument, "empty fiber-length list");
  for (double l : ell_values) require_positive_ell(l);
  std::vector<double> ells = ell_values;
  std::sort(ells.begin(), ells.end());

  ScanTable table;
  table.data = base_data(base, F);
  const BaseData& d = table.data;
  std::optional<NormReport> norms;
  if (d.chi > 0)
    table.regime = d.omega_L2_sq > 0 ? ScanFlag::MaxInterior : ScanFlag::DivergesAsEllGrows;
  else {
    table.regime = ScanFlag::SupZeroNotAttained;
    norms = omega_norms(InvariantMetric(base, RadialFunction::constant(1.0), F));
  }

  for (double l : ells) {
    ScanRow row;
    row.ell = l;
    row.J = functional_J_closed(d, l);
    if (norms && l <= 1.0) row.lower = collapse_bounds(d, *norms, l).lower;
    if (table.regime != ScanFlag::MaxInterior) row.flag = table.regime;
    table.rows.push_back(row);
  }
  if (table.regime == ScanFlag::MaxInterior && table.rows.size() >= 3) {
    const auto best = std::max_element(table.rows.begin(), table.rows.end(),
                                       [](const ScanRow& a, const ScanRow& b) { return a.J < b.J; });
    if (best != table.rows.begin() && best != table.rows.end() - 1) best->flag = ScanFlag::MaxInterior;
  }
  try {
    const PowerFit fit = fit_exponent(table);
    table.exponent = fit.exponent;
    table.coefficient = fit.coefficient;
  } catch (const Error&) {
    // too few rows or a zero value: no fit
  }
  return table;
}

PowerFit fit_exponent(const ScanTable& table, ScanColumn column) {
  if (table.rows.size() < 4) throw Error(ErrorCode::DegenerateData, "need at least 4 rows");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(table.rows.size());
  for (const ScanRow& r : table.rows) {
    const double y = column == ScanColumn::J ? r.J : r.lower.value_or(0.0);
    if (!(y != 0) || !std::isfinite(y) || !(r.ell > 0))
      throw Error(ErrorCode::DegenerateData, "zero or missing value at ell = " + std::to_string(r.ell));
    const double lx = std::log(r.ell), ly = std::log(std::abs(y));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double den = n * sxx - sx * sx;
  if (!(den > 1e-14 * n * sxx)) throw Error(ErrorCode::DegenerateData, "fiber lengths are not distinct");
  PowerFit fit;
  fit.exponent = (n * sxy - sx * sy) / den;
  fit.coefficient = std::exp((sy - fit.exponent * sx) / n);
  return fit;
}

SandwichRow collapse_sandwich(const Base& base, const RadialFunction& F, double ell, const MinimizerConfig& cfg) {
  const CollapseBounds b = collapse_bounds(base, F, ell);
  const MinimizerResult m = minimize_conformal(InvariantMetric(base, RadialFunction::constant(ell), F), cfg);
  SandwichRow row;
  row.ell = ell;
  row.lower = b.lower;
  row.upper = b.upper;
  row.mu_upper = m.mu_upper;
  row.converged = m.converged;
  return row;
}

}  // namespace s1yamabe
