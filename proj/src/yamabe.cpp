#include "s1yamabe/yamabe.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "s1yamabe/errors.hpp"

namespace s1yamabe {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;
constexpr int kProbes = 512;

// 3·2^{4/3}π²
double jmax_prefactor() { return 3.0 * std::cbrt(16.0) * kPi * kPi; }
}  // namespace

double sigma_s3() { return 3.0 * std::cbrt(32.0) * std::cbrt(kPi * kPi * kPi * kPi); }

double sphere_volume(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "sphere dimension must be non-negative");
  double v = (n % 2 == 0) ? 2.0 : kTwoPi;
  for (int k = (n % 2 == 0) ? 2 : 3; k <= n; k += 2) v *= kTwoPi / (k - 1);
  return v;
}

double sphere_yamabe_constant(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "sphere Yamabe constant needs n >= 2");
  return n * (n - 1.0) * std::pow(sphere_volume(n), 2.0 / n);
}

YamabeReport functional_J(const InvariantMetric& metric) {
  const Base& base = metric.base();
  const RadialFunction& ell = metric.ell();
  const RadialFunction& F = metric.F();

  const IntegralResult vol = volume_total(metric);
  const IntegralResult num = metric.integrate([&](double s) {
    const double l = ell(s), f = F(s);
    return kTwoPi * (2.0 * base.curvature(s) - 0.5 * l * l * f * f) * l;
  });
  const IntegralResult direct =
      metric.integrate([&](double s) { return kTwoPi * scalar_curvature_closed(metric, s) * ell(s); });
  // Scale of the integrands, for a tolerance that survives J ≈ 0.
  const IntegralResult magnitude = metric.integrate([&](double s) {
    const double l = ell(s), f = F(s);
    return kTwoPi * (std::abs(2.0 * base.curvature(s)) + 0.5 * l * l * f * f) * l;
  });

  YamabeReport rep;
  rep.denominator = std::cbrt(vol.value);
  rep.numerator = num.value;
  rep.J = num.value / rep.denominator;
  rep.J_total_space = direct.value / rep.denominator;
  rep.route = YamabeRoute::base_integral;
  const double gap = std::abs(rep.J - rep.J_total_space);
  const double scale = std::max(std::abs(rep.J), magnitude.value / rep.denominator);
  if (gap > 1e-8 * scale)
    throw Error(ErrorCode::InconsistentRoutes, "base-integral J = " + std::to_string(rep.J) +
                                                   " but total-space J = " + std::to_string(rep.J_total_space));
  rep.error_estimate = num.error_estimate / rep.denominator +
                       std::abs(rep.J) * vol.error_estimate / (3.0 * vol.value) + gap;
  return rep;
}

BaseData base_data(const Base& base, const RadialFunction& F, const QuadratureConfig& cfg) {
  const InvariantMetric unit(base, RadialFunction::constant(1.0), F, cfg);
  const NormReport n = omega_norms(unit);
  BaseData d;
  const IntegralResult a = base.integrate([](double) { return 1.0; }, cfg);
  d.area = a.value;
  d.area_error = a.error_estimate;
  d.omega_L2_sq_error = n.error_estimate;
  d.chi = base.euler_characteristic();
  d.omega_L2_sq = n.omega_L2_sq;
  d.omega_L1 = n.omega_L1;
  d.chern_number = n.chern_number;
  return d;
}

double functional_J_closed(const BaseData& d, double ell) {
  if (!(ell > 0)) throw Error(ErrorCode::InvalidArgument, "fiber length must be positive");
  if (!(d.area > 0)) throw Error(ErrorCode::InvalidArgument, "base area must be positive");
  const double l23 = std::cbrt(ell * ell);
  return std::cbrt(kPi * kPi / (16.0 * d.area)) * (16.0 * kPi * d.chi * l23 - d.omega_L2_sq * l23 * ell * ell);
}

double functional_J_closed_error(const BaseData& d, double ell) {
  const double J = functional_J_closed(d, ell);
  const double dJ_dL2 = std::cbrt(kPi * kPi / (16.0 * d.area)) * std::cbrt(ell * ell) * ell * ell;
  return std::abs(J) * d.area_error / (3.0 * d.area) + dJ_dL2 * d.omega_L2_sq_error;
}

double functional_J_closed(const Base& base, const RadialFunction& F, double ell) {
  return functional_J_closed(base_data(base, F), ell);
}

double conformal_functional(const InvariantMetric& metric, const RadialFunction& u) {
  const double L = metric.base().length();
  for (int j = 0; j <= kProbes; ++j) {
    const double s = L * j / kProbes;
    if (!(u(s) > 0)) throw Error(ErrorCode::NonPositiveU, "u(" + std::to_string(s) + ") = " + std::to_string(u(s)));
  }
  const RadialFunction& ell = metric.ell();
  const IntegralResult num = metric.integrate([&](double s) {
    const double v = u(s), dv = u.d1(s);
    return kTwoPi * ell(s) * (8.0 * dv * dv + scalar_curvature_closed(metric, s) * v * v);
  });
  const IntegralResult den = metric.integrate([&](double s) {
    const double v2 = u(s) * u(s);
    return kTwoPi * ell(s) * v2 * v2 * v2;
  });
  return num.value / std::cbrt(den.value);
}

OptimalEll optimal_ell(const BaseData& d) {
  if (!(d.chi > 0)) throw Error(ErrorCode::CaseIII, "chi <= 0: the functional has no interior maximum in ell");
  if (!(d.omega_L2_sq > 0)) throw Error(ErrorCode::CaseII, "curvature form vanishes: J is unbounded above in ell");
  OptimalEll out;
  out.ell_star = std::sqrt(4.0 * kPi * d.chi / d.omega_L2_sq);
  out.J_max = jmax_prefactor() * std::pow(d.chi, 4.0 / 3.0) / std::cbrt(d.area * d.omega_L2_sq);
  // Brent in log ℓ on a bracket spanning e^{±4} around ℓ*.
  const double center = std::log(out.ell_star);
  const ScalarMinimum m =
      minimize_scalar([&](double x) { return -functional_J_closed(d, std::exp(x)); }, center - 4.0, center + 4.0, 1e-12);
  out.ell_numeric = std::exp(m.argmin);
  out.J_numeric = -m.value;
  if (std::abs(out.ell_numeric - out.ell_star) > 1e-6 * out.ell_star ||
      std::abs(out.J_numeric - out.J_max) > 1e-9 * std::abs(out.J_max))
    throw Error(ErrorCode::InconsistentRoutes, "closed-form optimum disagrees with the numeric maximum");
  return out;
}

OptimalEll optimal_ell(const Base& base, const RadialFunction& F) { return optimal_ell(base_data(base, F)); }

double wps_curvature_density(int m1, int m2, double t) {
  if (!(t > 0.0 && t < 1.0)) throw Error(ErrorCode::DomainError, "chart parameter must lie in (0,1)");
  require_coprime(m1, m2);
  const double A = double(m2) * m2 + (double(m1) * m1 - double(m2) * m2) * t;
  return 2.0 * m1 * m2 / (A * std::sqrt(A));
}

RadialFunction wps_curvature_field(int m1, int m2, int grid) {
  const WpsChart chart(m1, m2);
  if (grid < 4) throw Error(ErrorCode::GridTooCoarse, "grid must be at least 4");
  const std::vector<double> t = chart.arclength_grid_parameters(grid);
  std::vector<double> values(t.size()), s(t.size());
  const double a = double(m1) * m1 - double(m2) * m2;
  for (std::size_t j = 0; j < t.size(); ++j) {
    // The closed form is regular at t ∈ {0, 1}.
    const double A = double(m2) * m2 + a * t[j];
    values[j] = 2.0 * m1 * m2 / (A * std::sqrt(A));
    s[j] = chart.total_length() * static_cast<double>(j) / grid;
  }
  CosineSeries series = CosineSeries::interpolate(chart.total_length(), values);
  return RadialFunction::cosine(std::move(series)).with_samples(std::move(s), std::move(values), false);
}

double bound_cauchy_schwarz(const BaseData& d) {
  if (!(d.chi > 0)) throw Error(ErrorCode::CaseIII, "chi <= 0");
  if (!(d.omega_L1 > 0)) throw Error(ErrorCode::CaseII, "curvature form vanishes");
  return jmax_prefactor() * std::pow(d.chi, 4.0 / 3.0) / std::cbrt(d.omega_L1 * d.omega_L1);
}

double bound_cauchy_schwarz(const Base& base, const RadialFunction& F) {
  return bound_cauchy_schwarz(base_data(base, F));
}

double bound_theorem_main(double chi, double c1) {
  if (!(chi > 0) || !(c1 != 0) || !std::isfinite(chi) || !std::isfinite(c1))
    throw Error(ErrorCode::InvalidCase, "the main bound needs chi > 0 and c1 != 0");
  return sigma_s3() * std::pow(chi / (2.0 * std::sqrt(std::abs(c1))), 4.0 / 3.0);
}

double bound_weighted_hopf(int m1, int m2) {
  require_coprime(m1, m2);
  return sigma_s3() * std::pow((m1 + m2) / (2.0 * std::sqrt(double(m1) * m2)), 4.0 / 3.0);
}

double hebey_vaugon_bound(int n, std::optional<long long> k) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "the equivariant bound needs n >= 3");
  if (!k) return std::numeric_limits<double>::infinity();
  if (*k < 1) throw Error(ErrorCode::InvalidArgument, "orbit cardinality must be positive");
  return sphere_yamabe_constant(n) * std::pow(static_cast<double>(*k), 2.0 / n);
}

ConstantFiberRepresentative constant_fiber_representative(const InvariantMetric& metric) {
  const RadialFunction& ell = metric.ell();
  const RadialFunction& F = metric.F();
  ConstantFiberRepresentative rep;
  rep.area = metric.integrate([&](double s) { const double l = ell(s); return 1.0 / (l * l); }).value;
  rep.omega_L2_sq = metric.integrate([&](double s) { const double f = F(s) * ell(s); return 2.0 * f * f; }).value;
  rep.chi = metric.base().euler_characteristic();
  BaseData d;
  d.area = rep.area;
  d.chi = rep.chi;
  d.omega_L2_sq = rep.omega_L2_sq;
  rep.J = functional_J_closed(d, 1.0);
  if (rep.chi > 0 && rep.omega_L2_sq > 0)
    rep.J_max = jmax_prefactor() * std::pow(rep.chi, 4.0 / 3.0) / std::cbrt(rep.area * rep.omega_L2_sq);
  else
    rep.J_max = std::numeric_limits<double>::quiet_NaN();
  return rep;
}

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::theorem_main: return "theorem_main";
    case BoundKind::weighted_hopf: return "weighted_hopf";
    case BoundKind::cauchy_schwarz: return "cauchy_schwarz";
    case BoundKind::hebey_vaugon: return "hebey_vaugon";
    case BoundKind::optimal_ell: return "optimal_ell";
  }
  return "unknown";
}

std::string case_label(double chi, double c1) {
  if (!(chi > 0)) return "iii";
  return c1 != 0 ? "i" : "ii";
}

}  // namespace s1yamabe
