#include "s1yamabe/bundle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "s1yamabe/errors.hpp"

namespace s1yamabe {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kProbes = 512;
}  // namespace

InvariantMetric::InvariantMetric(Base base, RadialFunction ell, RadialFunction F, QuadratureConfig cfg)
    : base_(std::move(base)), ell_(std::move(ell)), F_(std::move(F)), cfg_(cfg) {
  const double L = base_.length();
  for (int j = 0; j <= kProbes; ++j) {
    const double s = L * j / kProbes;
    const double v = ell_(s);
    if (!(v > 0) || !std::isfinite(v))
      throw Error(ErrorCode::InvalidArgument, "fiber length must be positive (ell(" + std::to_string(s) + ") = " +
                                                  std::to_string(v) + ")");
    if (!std::isfinite(F_(s))) throw Error(ErrorCode::InvalidArgument, "F is not finite at s=" + std::to_string(s));
  }
  if (!base_.is_torus()) {
    for (double s : {0.0, L}) {
      const double de = std::abs(ell_.d1(s)), dF = std::abs(F_.d1(s));
      if (de > 1e-6 * std::max(1.0, std::abs(ell_(s))))
        throw Error(ErrorCode::InvalidArgument, "ell' must vanish at the poles");
      if (dF > 1e-6 * std::max(1.0, std::abs(F_(s))))
        throw Error(ErrorCode::InvalidArgument, "F' must vanish at the poles");
    }
  } else {
    auto periodic = [L](const RadialFunction& g) {
      const double scale = std::max(1.0, std::abs(g(0.0)));
      return std::abs(g(L) - g(0.0)) <= 1e-9 * scale && std::abs(g.d1(L) - g.d1(0.0)) <= 1e-6 * scale;
    };
    if (!periodic(ell_)) throw Error(ErrorCode::InvalidArgument, "ell must be periodic on a torus base");
    if (!periodic(F_)) throw Error(ErrorCode::InvalidArgument, "F must be periodic on a torus base");
  }
}

InvariantMetric InvariantMetric::scaled(double c) const {
  if (!(c > 0)) throw Error(ErrorCode::InvalidArgument, "scale factor must be positive");
  return InvariantMetric(base_.scaled(c), ell_.stretched(c).scaled(c), F_.stretched(c).scaled(1.0 / (c * c)), cfg_);
}

InvariantMetric InvariantMetric::with_ell(RadialFunction ell) const {
  return InvariantMetric(base_, std::move(ell), F_, cfg_);
}

double scalar_curvature_closed(const InvariantMetric& metric, double s) {
  const Base& base = metric.base();
  const double l = metric.ell()(s);
  const double f = metric.F()(s);
  return 2.0 * base.curvature(s) - 0.5 * l * l * f * f + 2.0 * base.laplacian(metric.ell(), s) / l;
}

double scalar_curvature_total(const InvariantMetric& metric, double s) {
  if (!metric.base().is_torus() && !(s > 0.0 && s < metric.base().length()))
    throw Error(ErrorCode::DomainError, "scalar_curvature_total is evaluated on the open interval (0, L)");
  return scalar_curvature_closed(metric, s);
}

IntegralResult integrate_abs(const Base& base, const ScalarFn& g, const QuadratureConfig& cfg) {
  const double L = base.length();
  std::vector<double> cuts{0.0};
  double prev = g(0.0);
  for (int j = 1; j <= kProbes; ++j) {
    const double s = L * j / kProbes;
    const double cur = g(s);
    if ((prev < 0 && cur > 0) || (prev > 0 && cur < 0)) {
      double lo = L * (j - 1) / kProbes, hi = s, glo = prev;
      for (int it = 0; it < 200 && hi - lo > 4e-16 * L; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double gm = g(mid);
        if ((gm < 0) == (glo < 0)) lo = mid, glo = gm; else hi = mid;
      }
      cuts.push_back(0.5 * (lo + hi));
    }
    prev = cur;
  }
  cuts.push_back(L);
  IntegralResult total;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (!(cuts[i + 1] > cuts[i])) continue;
    QuadratureConfig piece = cfg;
    piece.panels = std::max(2, static_cast<int>(std::ceil(cfg.panels * (cuts[i + 1] - cuts[i]) / L)));
    const IntegralResult r =
        integrate([&](double s) { return std::abs(g(s)) * base.phi(s); }, cuts[i], cuts[i + 1], piece);
    total.value += r.value;
    total.error_estimate += r.error_estimate;
    total.refinements_used = std::max(total.refinements_used, r.refinements_used);
  }
  total.value *= kTwoPi;
  total.error_estimate *= kTwoPi;
  return total;
}

NormReport omega_norms(const InvariantMetric& metric) {
  const Base& base = metric.base();
  const RadialFunction& F = metric.F();
  const QuadratureConfig& cfg = metric.quadrature();
  NormReport rep;
  double err = 0.0;

  const IntegralResult l1 = integrate_abs(base, [&](double s) { return F(s); }, cfg);
  rep.omega_L1 = std::sqrt(2.0) * l1.value;
  err = std::max(err, std::sqrt(2.0) * l1.error_estimate);

  const IntegralResult l2 = metric.integrate([&](double s) { return 2.0 * F(s) * F(s); });
  rep.omega_L2_sq = l2.value;
  err = std::max(err, l2.error_estimate);

  // |F|³ has a continuous second derivative at sign changes; split anyway for uniform accuracy.
  const IntegralResult l3 = integrate_abs(base, [&](double s) { const double f = F(s); return f * f * f; }, cfg);
  const double cube = 2.0 * std::sqrt(2.0) * l3.value;
  rep.omega_L3_sq = std::cbrt(cube * cube);
  err = std::max(err, cube > 0 ? (2.0 / 3.0) * rep.omega_L3_sq * 2.0 * std::sqrt(2.0) * l3.error_estimate / cube : 0.0);

  if (!base.is_torus()) {
    const IntegralResult sc = integrate_abs(
        base, [&](double s) { const double k = 2.0 * base.curvature(s); return std::copysign(std::pow(std::abs(k), 1.5), k); },
        cfg);
    rep.scal_L32 = std::cbrt(sc.value * sc.value);
    err = std::max(err, sc.value > 0 ? (2.0 / 3.0) * rep.scal_L32 * sc.error_estimate / sc.value : 0.0);
  }

  const IntegralResult ch = metric.integrate([&](double s) { return F(s); });
  rep.chern_number = ch.value / kTwoPi;
  err = std::max(err, ch.error_estimate / kTwoPi);
  rep.error_estimate = err;

  const double scaled = base.order_product() * rep.chern_number;
  if (std::abs(scaled - std::round(scaled)) > 1e-3)
    rep.warning = "order_product * chern_number = " + std::to_string(scaled) + " is not an integer";
  return rep;
}

IntegralResult volume_total(const InvariantMetric& metric) {
  IntegralResult r = metric.integrate([&](double s) { return metric.ell()(s); });
  r.value *= kTwoPi;
  r.error_estimate *= kTwoPi;
  return r;
}

}  // namespace s1yamabe
