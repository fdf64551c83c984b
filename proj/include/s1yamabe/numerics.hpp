#pragma once

#include <functional>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace s1yamabe {

using ScalarFn = std::function<double(double)>;

enum class EndpointMode {
  plain,          ///< composite Gauss on [a,b]
  substitution,   ///< x = a + (b-a)(3τ²-2τ³), removes 1/√ endpoint singularities
  epsilon_cutoff  ///< integrate over [a+ε, b-ε] for a geometric ε ladder, Richardson to ε=0
};

struct QuadratureConfig {
  int panels = 32;
  int points_per_panel = 16;
  EndpointMode endpoint_mode = EndpointMode::epsilon_cutoff;
  double epsilon = 1e-3;
  int max_refinements = 6;
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  // ε ladder for epsilon_cutoff: ε, ε·ratio, ε·ratio², ...
  int richardson_levels = 3;
  double epsilon_ratio = 0.1;

  /// Same defaults with the plain endpoint mode; the right choice for integrands
  /// that are smooth up to the endpoints.
  static QuadratureConfig plain();

  /// Throws InvalidArgument if any field is out of range for [a,b].
  void validate(double a, double b) const;
};

struct IntegralResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int refinements_used = 0;
};

/// Gauss-Legendre nodes and weights on [-1,1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussRule gauss_legendre(int n);

/// Composite Gauss quadrature with panel doubling until two successive levels agree
/// to max(abs_tol, rel_tol·|I|). Deterministic: fixed panel order, sequential sums.
IntegralResult integrate(const ScalarFn& f, double a, double b, const QuadratureConfig& cfg = {});

/// Max over h of |(f(t+h)-f(t-h))/2h - df(t)| / max(1,|df(t)|).
/// Throws DomainError if some t±h falls outside [domain_lo, domain_hi].
double check_derivative(const ScalarFn& f, const ScalarFn& df, double t, std::span<const double> h_sequence,
                        double domain_lo = -std::numeric_limits<double>::infinity(),
                        double domain_hi = std::numeric_limits<double>::infinity());

struct ScalarMinimum {
  double argmin;
  double value;
};

/// Brent's method (golden section with parabolic steps). The bracket endpoints are
/// also evaluated, so a minimizer on the boundary is reported as the boundary.
ScalarMinimum minimize_scalar(const ScalarFn& f, double lo, double hi, double tol = 1e-10);

/// Thomas algorithm. lower/upper have n-1 entries. The returned x satisfies
/// ‖Ax-b‖∞ ≤ 1e-12·(‖|A||x|‖∞ + ‖b‖∞); otherwise Singular is thrown.
std::vector<double> solve_tridiagonal(std::span<const double> lower, std::span<const double> diag,
                                      std::span<const double> upper, std::span<const double> rhs);

/// Value at 0 of the polynomial through (x_i, y_i) (Neville).
double extrapolate_to_zero(std::span<const double> x, std::span<const double> y);

}  // namespace s1yamabe
