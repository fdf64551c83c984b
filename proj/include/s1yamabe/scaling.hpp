#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "s1yamabe/conformal.hpp"
#include "s1yamabe/yamabe.hpp"

namespace s1yamabe {

enum class ScanFlag { None, MaxInterior, DivergesAsEllGrows, SupZeroNotAttained };
std::string to_string(ScanFlag flag);

struct ScanRow {
  double ell = 0.0;
  double J = 0.0;
  std::optional<double> lower;  ///< Hölder lower bound, χ ≤ 0 bases only
  ScanFlag flag = ScanFlag::None;
};

struct ScanTable {
  std::vector<ScanRow> rows;  ///< sorted by ℓ
  ScanFlag regime = ScanFlag::None;
  BaseData data;
  // log–log fit of |J| against ℓ; empty when the table cannot support one
  std::optional<double> exponent;
  std::optional<double> coefficient;
};

/// n points spaced evenly in log ℓ from lo to hi inclusive.
std::vector<double> log_grid(double lo, double hi, int n);
/// Three points per decade, covering [lo, hi].
std::vector<double> log_grid_per_decade(double lo, double hi, int per_decade = 3);

/// J(ℓ) by the closed form for each ℓ (sorted, duplicates kept). The regime flag is
/// MaxInterior when χ > 0 and Ω ≠ 0 (the row of largest J carries it too when it is
/// not an endpoint), DivergesAsEllGrows when χ > 0 and Ω = 0, SupZeroNotAttained
/// when χ ≤ 0.
ScanTable ell_scan(const Base& base, const RadialFunction& F, const std::vector<double>& ell_values);

struct CollapseBounds {
  double upper = 0.0;  ///< J at this ℓ
  double lower = 0.0;  ///< -(2πℓ)^{2/3}(‖Scal_Σ‖_{3/2} + ‖Ω‖₃²/4)
};

/// ChiPositive if χ > 0; InvalidArgument unless 0 < ℓ ≤ 1.
CollapseBounds collapse_bounds(const Base& base, const RadialFunction& F, double ell);
CollapseBounds collapse_bounds(const BaseData& data, const NormReport& norms, double ell);

enum class ScanColumn { J, lower };

struct PowerFit {
  double exponent = 0.0;
  double coefficient = 0.0;
};

/// Least squares of log|y| on log ℓ. DegenerateData with fewer than 4 rows, a zero
/// or missing value, or fewer than two distinct ℓ.
PowerFit fit_exponent(const ScanTable& table, ScanColumn column = ScanColumn::J);

struct SandwichRow {
  double ell = 0.0;
  double lower = 0.0;
  double mu_upper = 0.0;
  double upper = 0.0;
  bool converged = false;
  /// Comparisons carry a 1e-12 relative slack: at constant u the minimizer and the
  /// closed form evaluate the same number by different roundings.
  bool holds() const {
    const double slack = 1e-12 * std::max(std::abs(lower), std::abs(upper));
    return lower <= mu_upper + slack && mu_upper <= upper + slack;
  }
};

/// Minimizer value at constant fiber length ℓ bracketed by collapse_bounds.
SandwichRow collapse_sandwich(const Base& base, const RadialFunction& F, double ell,
                              const MinimizerConfig& cfg = {});

}  // namespace s1yamabe
