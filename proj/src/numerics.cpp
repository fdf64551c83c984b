#include "s1yamabe/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "s1yamabe/errors.hpp"

namespace s1yamabe {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::InvalidBracket: return "InvalidBracket";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::LimitNotConverged: return "LimitNotConverged";
    case ErrorCode::InconsistentRoutes: return "InconsistentRoutes";
    case ErrorCode::CaseII: return "CaseII";
    case ErrorCode::CaseIII: return "CaseIII";
    case ErrorCode::InvalidCase: return "InvalidCase";
    case ErrorCode::NonPositiveU: return "NonPositiveU";
    case ErrorCode::NotMeanZero: return "NotMeanZero";
    case ErrorCode::ChiNotPositive: return "ChiNotPositive";
    case ErrorCode::ChiPositive: return "ChiPositive";
    case ErrorCode::DegenerateData: return "DegenerateData";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

QuadratureConfig QuadratureConfig::plain() {
  QuadratureConfig cfg;
  cfg.endpoint_mode = EndpointMode::plain;
  return cfg;
}

void QuadratureConfig::validate(double a, double b) const {
  if (panels < 1) throw Error(ErrorCode::InvalidArgument, "quadrature panels must be positive");
  if (points_per_panel < 2) throw Error(ErrorCode::InvalidArgument, "points_per_panel must be >= 2");
  if (max_refinements < 0) throw Error(ErrorCode::InvalidArgument, "max_refinements must be >= 0");
  if (!(abs_tol > 0) || !(rel_tol > 0)) throw Error(ErrorCode::InvalidArgument, "tolerances must be positive");
  if (endpoint_mode == EndpointMode::epsilon_cutoff) {
    if (!(epsilon > 0) || !(epsilon < 0.5 * (b - a)))
      throw Error(ErrorCode::InvalidArgument, "epsilon must lie in (0, (b-a)/2)");
    if (richardson_levels < 1) throw Error(ErrorCode::InvalidArgument, "richardson_levels must be >= 1");
    if (!(epsilon_ratio > 0 && epsilon_ratio < 1))
      throw Error(ErrorCode::InvalidArgument, "epsilon_ratio must lie in (0,1)");
  }
}

GaussRule gauss_legendre(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "Gauss rule needs at least one node");
  GaussRule rule;
  if (n == 1) return {{0.0}, {2.0}};
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

namespace {

struct PanelSum {
  double value;
  double magnitude;  // Σ w|f|, used for the rounding floor
};

PanelSum composite(const ScalarFn& f, double a, double b, int panels, const GaussRule& rule) {
  const double width = (b - a) / panels;
  double sum = 0.0, mag = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double left = a + p * width;
    const double mid = left + 0.5 * width;
    double panel = 0.0, panel_mag = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double x = mid + 0.5 * width * rule.nodes[i];
      const double fx = f(x);
      if (!std::isfinite(fx))
        throw Error(ErrorCode::NonFinite, "integrand is not finite at x=" + std::to_string(x));
      panel += rule.weights[i] * fx;
      panel_mag += rule.weights[i] * std::abs(fx);
    }
    sum += 0.5 * width * panel;
    mag += 0.5 * width * panel_mag;
  }
  return {sum, mag};
}

IntegralResult integrate_plain(const ScalarFn& f, double a, double b, const QuadratureConfig& cfg) {
  const GaussRule rule = gauss_legendre(cfg.points_per_panel);
  int panels = cfg.panels;
  PanelSum prev = composite(f, a, b, panels, rule);
  for (int r = 0; r <= cfg.max_refinements; ++r) {
    panels *= 2;
    const PanelSum cur = composite(f, a, b, panels, rule);
    const double diff = std::abs(cur.value - prev.value);
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() * cur.magnitude;
    if (diff <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(cur.value)) || diff <= floor)
      return {cur.value, std::max(diff, floor), r};
    prev = cur;
  }
  throw Error(ErrorCode::NoConvergence, "quadrature did not converge after " +
                                            std::to_string(cfg.max_refinements) + " refinements");
}

}  // namespace

double extrapolate_to_zero(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.empty()) throw Error(ErrorCode::InvalidArgument, "extrapolation needs matching points");
  std::vector<double> p(y.begin(), y.end());
  const std::size_t n = p.size();
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = 0; i + level < n; ++i) {
      // P_{i..i+level}(0) from the two overlapping lower-order values.
      p[i] = (x[i + level] * p[i] - x[i] * p[i + 1]) / (x[i + level] - x[i]);
    }
  }
  return p[0];
}

IntegralResult integrate(const ScalarFn& f, double a, double b, const QuadratureConfig& cfg) {
  if (!(a < b)) throw Error(ErrorCode::InvalidArgument, "integrate requires a < b");
  cfg.validate(a, b);
  switch (cfg.endpoint_mode) {
    case EndpointMode::plain:
      return integrate_plain(f, a, b, cfg);
    case EndpointMode::substitution: {
      const double width = b - a;
      auto g = [&](double tau) {
        const double w = tau * tau * (3.0 - 2.0 * tau);
        const double dw = 6.0 * tau * (1.0 - tau);
        return f(a + width * w) * width * dw;
      };
      return integrate_plain(g, 0.0, 1.0, cfg);
    }
    case EndpointMode::epsilon_cutoff: {
      std::vector<double> eps, vals;
      double quad_err = 0.0;
      int refinements = 0;
      double e = cfg.epsilon;
      for (int level = 0; level < cfg.richardson_levels; ++level) {
        const IntegralResult r = integrate_plain(f, a + e, b - e, cfg);
        eps.push_back(e);
        vals.push_back(r.value);
        quad_err += r.error_estimate;
        refinements = std::max(refinements, r.refinements_used);
        e *= cfg.epsilon_ratio;
      }
      const double value = extrapolate_to_zero(eps, vals);
      double extrap_err = 0.0;
      if (eps.size() > 1) {
        const double lower = extrapolate_to_zero(std::span(eps).first(eps.size() - 1),
                                                 std::span(vals).first(vals.size() - 1));
        extrap_err = std::abs(value - lower);
      } else {
        extrap_err = std::abs(vals[0]) * eps[0] / (b - a);
      }
      return {value, extrap_err + quad_err, refinements};
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown endpoint mode");
}

double check_derivative(const ScalarFn& f, const ScalarFn& df, double t, std::span<const double> h_sequence,
                        double domain_lo, double domain_hi) {
  if (h_sequence.empty()) throw Error(ErrorCode::InvalidArgument, "empty step sequence");
  const double exact = df(t);
  const double scale = std::max(1.0, std::abs(exact));
  double worst = 0.0;
  for (double h : h_sequence) {
    if (!(h > 0)) throw Error(ErrorCode::InvalidArgument, "steps must be positive");
    if (t - h < domain_lo || t + h > domain_hi)
      throw Error(ErrorCode::DomainError, "t±h leaves the domain for h=" + std::to_string(h));
    const double central = (f(t + h) - f(t - h)) / (2.0 * h);
    worst = std::max(worst, std::abs(central - exact) / scale);
  }
  return worst;
}

ScalarMinimum minimize_scalar(const ScalarFn& f, double lo, double hi, double tol) {
  if (!(lo < hi)) throw Error(ErrorCode::InvalidBracket, "minimize_scalar requires lo < hi");
  if (!(tol > 0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  const double golden = 0.5 * (3.0 - std::sqrt(5.0));
  double a = lo, b = hi;
  double x = a + golden * (b - a), w = x, v = x;
  double fx = f(x), fw = fx, fv = fx;
  double d = 0.0, e = 0.0;
  for (int iter = 0; iter < 500; ++iter) {
    const double m = 0.5 * (a + b);
    const double tol1 = 1e-3 * tol + std::numeric_limits<double>::epsilon() * std::abs(x);
    const double tol2 = 2.0 * tol1;
    if (std::abs(x - m) <= tol2 - 0.5 * (b - a) || (b - a) <= tol) break;
    bool golden_step = true;
    if (std::abs(e) > tol1) {
      double r = (x - w) * (fx - fv);
      double q = (x - v) * (fx - fw);
      double p = (x - v) * q - (x - w) * r;
      q = 2.0 * (q - r);
      if (q > 0) p = -p;
      q = std::abs(q);
      const double e_prev = e;
      e = d;
      if (std::abs(p) < std::abs(0.5 * q * e_prev) && p > q * (a - x) && p < q * (b - x)) {
        d = p / q;
        const double u = x + d;
        if (u - a < tol2 || b - u < tol2) d = (x < m) ? tol1 : -tol1;
        golden_step = false;
      }
    }
    if (golden_step) {
      e = (x < m) ? b - x : a - x;
      d = golden * e;
    }
    const double u = (std::abs(d) >= tol1) ? x + d : x + (d > 0 ? tol1 : -tol1);
    const double fu = f(u);
    if (fu <= fx) {
      if (u < x) b = x; else a = x;
      v = w; fv = fw;
      w = x; fw = fx;
      x = u; fx = fu;
    } else {
      if (u < x) a = u; else b = u;
      if (fu <= fw || w == x) {
        v = w; fv = fw;
        w = u; fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = u; fv = fu;
      }
    }
  }
  ScalarMinimum best{x, fx};
  const double flo = f(lo), fhi = f(hi);
  if (flo <= best.value) best = {lo, flo};
  if (fhi < best.value) best = {hi, fhi};
  return best;
}

std::vector<double> solve_tridiagonal(std::span<const double> lower, std::span<const double> diag,
                                      std::span<const double> upper, std::span<const double> rhs) {
  const std::size_t n = diag.size();
  if (n == 0 || rhs.size() != n || lower.size() + 1 != n || upper.size() + 1 != n)
    throw Error(ErrorCode::InvalidArgument, "inconsistent tridiagonal dimensions");
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = std::abs(diag[i]);
    if (i > 0) row += std::abs(lower[i - 1]);
    if (i + 1 < n) row += std::abs(upper[i]);
    scale = std::max(scale, row);
  }
  if (scale == 0.0) throw Error(ErrorCode::Singular, "zero matrix");
  std::vector<double> c(n, 0.0), d(n, 0.0);
  double pivot = diag[0];
  if (std::abs(pivot) <= 1e-14 * scale) throw Error(ErrorCode::Singular, "pivot underflow at row 0");
  if (n > 1) c[0] = upper[0] / pivot;
  d[0] = rhs[0] / pivot;
  for (std::size_t i = 1; i < n; ++i) {
    pivot = diag[i] - lower[i - 1] * c[i - 1];
    if (std::abs(pivot) <= 1e-14 * scale)
      throw Error(ErrorCode::Singular, "pivot underflow at row " + std::to_string(i));
    if (i + 1 < n) c[i] = upper[i] / pivot;
    d[i] = (rhs[i] - lower[i - 1] * d[i - 1]) / pivot;
  }
  std::vector<double> x(n);
  x[n - 1] = d[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) x[i] = d[i] - c[i] * x[i + 1];

  double residual = 0.0, backward_scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double ax = diag[i] * x[i];
    double abs_ax = std::abs(diag[i] * x[i]);
    if (i > 0) ax += lower[i - 1] * x[i - 1], abs_ax += std::abs(lower[i - 1] * x[i - 1]);
    if (i + 1 < n) ax += upper[i] * x[i + 1], abs_ax += std::abs(upper[i] * x[i + 1]);
    if (!std::isfinite(ax)) throw Error(ErrorCode::Singular, "non-finite solution");
    residual = std::max(residual, std::abs(ax - rhs[i]));
    backward_scale = std::max(backward_scale, abs_ax + std::abs(rhs[i]));
  }
  if (residual > 1e-12 * backward_scale) throw Error(ErrorCode::Singular, "residual check failed");
  return x;
}

}  // namespace s1yamabe
