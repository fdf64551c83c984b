#include "s1yamabe/orbifold.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "s1yamabe/errors.hpp"

namespace s1yamabe {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kSlopeTol = 1e-6;

double slope_mismatch(const ConeSurfaceProfile& p) {
  const ConeSlopes sl = one_sided_slopes(p, 1e-3 * p.length());
  return std::max(std::abs(sl.start - 1.0 / p.m_start()), std::abs(sl.end + 1.0 / p.m_end()));
}
}  // namespace

int gcd(int a, int b) {
  a = std::abs(a);
  b = std::abs(b);
  while (b != 0) {
    const int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

void require_coprime(int m1, int m2) {
  if (m1 < 1 || m2 < 1) throw Error(ErrorCode::InvalidArgument, "weights must be positive integers");
  if (gcd(m1, m2) != 1)
    throw Error(ErrorCode::NotCoprime, "gcd(" + std::to_string(m1) + "," + std::to_string(m2) + ") != 1");
}

// ---------------------------------------------------------------------------
// ConeSurfaceProfile

ConeSurfaceProfile::ConeSurfaceProfile(SineSeries phi, int m_start, int m_end, std::string label)
    : phi_(std::move(phi)), m_start_(m_start), m_end_(m_end), label_(std::move(label)) {
  if (m_start < 1 || m_end < 1) throw Error(ErrorCode::InvalidArgument, "cone orders must be positive");
  const int probes = 256;
  for (int j = 0; j <= probes; ++j) {
    const double s = length() * j / probes;
    if (!(phi_over_sin(s) > 0))
      throw Error(ErrorCode::InvalidArgument, "profile is not positive near s=" + std::to_string(s));
  }
  if (slope_mismatch(*this) > kSlopeTol)
    throw Error(ErrorCode::InvalidArgument, "profile slopes do not match cone orders (" +
                                                std::to_string(m_start) + "," + std::to_string(m_end) + ")");
}

ConeSurfaceProfile ConeSurfaceProfile::from_samples(std::span<const double> s, std::span<const double> phi,
                                                    int m_start, int m_end) {
  if (s.size() != phi.size() || s.size() < 5)
    throw Error(ErrorCode::InvalidArgument, "profile needs at least 5 (s, phi) samples");
  const std::size_t n = s.size() - 1;
  const double length = s[n] - s[0];
  if (std::abs(s[0]) > 1e-12 || !(length > 0)) throw Error(ErrorCode::InvalidArgument, "profile must start at s=0");
  for (std::size_t j = 0; j <= n; ++j) {
    if (std::abs(s[j] - length * static_cast<double>(j) / n) > 1e-9 * length)
      throw Error(ErrorCode::InvalidArgument, "profile samples must be uniformly spaced in s");
  }
  const double scale = *std::max_element(phi.begin(), phi.end());
  if (std::abs(phi[0]) > 1e-12 * scale || std::abs(phi[n]) > 1e-12 * scale)
    throw Error(ErrorCode::InvalidArgument, "profile must vanish at both poles");
  return ConeSurfaceProfile(SineSeries::interpolate(length, phi), m_start, m_end, "profile");
}

double ConeSurfaceProfile::curvature(double s) const { return -phi_.d2_over_sin(s) / phi_.value_over_sin(s); }

ConeSurfaceProfile ConeSurfaceProfile::scaled(double c) const {
  if (!(c > 0)) throw Error(ErrorCode::InvalidArgument, "scale factor must be positive");
  std::vector<double> b = phi_.coefficients();
  for (double& v : b) v *= c;
  return ConeSurfaceProfile(SineSeries(length() * c, std::move(b)), m_start_, m_end_, label_);
}

ConeSlopes one_sided_slopes(const ConeSurfaceProfile& p, double h) {
  const double L = p.length();
  auto start = [&](double step) { return p.phi(step) / step; };
  auto end = [&](double step) { return -p.phi(L - step) / step; };
  return {(4.0 * start(h) - start(2.0 * h)) / 3.0, (4.0 * end(h) - end(2.0 * h)) / 3.0};
}

// ---------------------------------------------------------------------------
// FlatTorusBase / Base

FlatTorusBase::FlatTorusBase(double length_, double radius_) : length(length_), radius(radius_) {
  if (!(length > 0) || !(radius > 0)) throw Error(ErrorCode::InvalidArgument, "torus length and radius must be positive");
}

double FlatTorusBase::area() const { return kTwoPi * radius * length; }

double Base::length() const {
  if (const auto* t = torus()) return t->length;
  return profile()->length();
}

double Base::phi(double s) const {
  if (const auto* t = torus()) return t->radius;
  return profile()->phi(s);
}

double Base::dphi(double s) const {
  if (torus()) return 0.0;
  return profile()->dphi(s);
}

double Base::curvature(double s) const {
  if (torus()) return 0.0;
  return profile()->curvature(s);
}

double Base::euler_characteristic() const {
  if (torus()) return 0.0;
  return profile()->euler_characteristic();
}

int Base::order_product() const {
  if (torus()) return 1;
  return profile()->m_start() * profile()->m_end();
}

double Base::laplacian(const RadialFunction& g, double s) const {
  if (torus()) return -g.d2(s);
  const ConeSurfaceProfile& p = *profile();
  // Δg = -g'' - φ' g'/φ, with g'/φ evaluated as (g'/sin)/(φ/sin).
  return -g.d2(s) - p.dphi(s) * g.d1_over_sin(s, p.length()) / p.phi_over_sin(s);
}

IntegralResult Base::integrate(const ScalarFn& density, const QuadratureConfig& cfg) const {
  IntegralResult r = s1yamabe::integrate([&](double s) { return density(s) * phi(s); }, 0.0, length(), cfg);
  r.value *= kTwoPi;
  r.error_estimate *= kTwoPi;
  return r;
}

Base Base::scaled(double c) const {
  if (const auto* t = torus()) return Base(t->scaled(c));
  return Base(profile()->scaled(c));
}

std::string Base::describe() const {
  std::ostringstream os;
  if (const auto* t = torus()) {
    os << "flat_torus(length=" << t->length << ", radius=" << t->radius << ")";
  } else {
    const auto& p = *profile();
    os << p.label() << "(L=" << p.length() << ", orders=" << p.m_start() << "," << p.m_end() << ")";
  }
  return os.str();
}

QuadratureConfig default_base_quadrature() { return QuadratureConfig::plain(); }

// ---------------------------------------------------------------------------
// Constructors

ConeSurfaceProfile make_round_sphere(double radius) {
  if (!(radius > 0)) throw Error(ErrorCode::InvalidArgument, "sphere radius must be positive");
  return ConeSurfaceProfile(SineSeries(std::numbers::pi * radius, {radius}), 1, 1, "round_sphere");
}

ConeSurfaceProfile make_bump_sphere(double radius, double amplitude) {
  if (!(radius > 0)) throw Error(ErrorCode::InvalidArgument, "sphere radius must be positive");
  if (!(amplitude > -1.0)) throw Error(ErrorCode::InvalidArgument, "bump amplitude must exceed -1");
  // sin³x = (3 sin x - sin 3x)/4
  return ConeSurfaceProfile(
      SineSeries(std::numbers::pi * radius, {radius * (1.0 + 0.75 * amplitude), 0.0, -0.25 * radius * amplitude}), 1,
      1, "bump_sphere");
}

// ---------------------------------------------------------------------------
// WpsChart

namespace {
QuadratureConfig chart_quadrature() {
  QuadratureConfig cfg;
  cfg.endpoint_mode = EndpointMode::substitution;
  cfg.panels = 8;
  // t near 1 carries an absolute rounding error of ~eps, which caps the attainable
  // accuracy of the far-end contribution near 1e-13.
  cfg.abs_tol = 1e-13;
  cfg.rel_tol = 1e-12;
  return cfg;
}
}  // namespace

WpsChart::WpsChart(int m1, int m2) : m1_(m1), m2_(m2), total_length_(0.0) {
  require_coprime(m1, m2);
  total_length_ = head_length(0.5) + tail_length(0.5);
}

// ds/dt from t and u = 1 - t supplied separately, so both ends keep full relative precision.
double WpsChart::density_split(double t, double u) const {
  const double dgamma = m1_ / u + m2_ / t;
  const double l2 = ((m1_ - m2_) * t + m2_) / std::sqrt(t * u);
  return dgamma / (2.0 * l2);
}

double WpsChart::head_length(double t) const {
  return s1yamabe::integrate([this](double x) { return density_split(x, 1.0 - x); }, 0.0, t, chart_quadrature())
      .value;
}

double WpsChart::tail_length(double u) const {
  return s1yamabe::integrate([this](double y) { return density_split(1.0 - y, y); }, 0.0, u, chart_quadrature())
      .value;
}

double WpsChart::lambda1(double t) const {
  const double a = double(m1_) * m1_ - double(m2_) * m2_;
  return -std::sqrt(a * t + double(m2_) * m2_) / std::sqrt(t * (1.0 - t));
}

double WpsChart::log_dlambda1(double t) const {
  const double a = double(m1_) * m1_ - double(m2_) * m2_;
  const double big_a = a * t + double(m2_) * m2_;
  const double q = t * (1.0 - t);
  return a / (2.0 * big_a) - (1.0 - 2.0 * t) / (2.0 * q);
}

double WpsChart::log_d2lambda1(double t) const {
  const double a = double(m1_) * m1_ - double(m2_) * m2_;
  const double big_a = a * t + double(m2_) * m2_;
  const double q = t * (1.0 - t);
  const double dq = 1.0 - 2.0 * t;
  return -a * a / (2.0 * big_a * big_a) + (2.0 * q + dq * dq) / (2.0 * q * q);
}

double WpsChart::dlambda1(double t) const { return lambda1(t) * log_dlambda1(t); }

double WpsChart::d2lambda1(double t) const {
  const double p = log_dlambda1(t);
  return lambda1(t) * (p * p + log_d2lambda1(t));
}

double WpsChart::lambda2(double t) const {
  return -((m1_ - m2_) * t + m2_) / std::sqrt(t * (1.0 - t));
}

double WpsChart::log_dlambda2(double t) const {
  const double b = m1_ - m2_;
  return b / (b * t + m2_) - (1.0 - 2.0 * t) / (2.0 * t * (1.0 - t));
}

double WpsChart::dlambda2(double t) const { return lambda2(t) * log_dlambda2(t); }

double WpsChart::d2lambda2(double t) const {
  const double b = m1_ - m2_;
  const double big_b = b * t + m2_;
  const double q = t * (1.0 - t);
  const double dq = 1.0 - 2.0 * t;
  const double p = log_dlambda2(t);
  const double dp = -b * b / (big_b * big_b) + (2.0 * q + dq * dq) / (2.0 * q * q);
  return lambda2(t) * (p * p + dp);
}

double WpsChart::gamma(double r) const { return std::pow(1.0 - r, m1_) / std::pow(r, m2_); }

double WpsChart::log_dgamma(double r) const { return -m1_ / (1.0 - r) - m2_ / r; }

double WpsChart::log_d2gamma(double r) const { return -m1_ / ((1.0 - r) * (1.0 - r)) + m2_ / (r * r); }

double WpsChart::dgamma(double r) const { return gamma(r) * log_dgamma(r); }

double WpsChart::d2gamma(double r) const {
  const double p = log_dgamma(r);
  return gamma(r) * (p * p + log_d2gamma(r));
}

double WpsChart::arclength_density(double t) const {
  // |γ'|/(2γ|λ̃2|)
  return density_split(t, 1.0 - t);
}

double WpsChart::arclength(double t) const {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return total_length_;
  if (t <= 0.5) return head_length(t);
  return total_length_ - tail_length(1.0 - t);
}

double WpsChart::parameter_at(double s) const {
  if (s <= 0.0) return 0.0;
  if (s >= total_length_) return 1.0;
  double lo = 0.0, hi = 1.0;
  double t = s / total_length_;
  for (int iter = 0; iter < 100; ++iter) {
    const double f = arclength(t) - s;
    if (f == 0.0) return t;
    if (f > 0) hi = t; else lo = t;
    double next = t - f / arclength_density(t);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - t) <= 4e-16 * std::max(t, 1e-300)) return next;
    t = next;
    if (hi - lo <= 1e-300) break;
  }
  return t;
}

std::vector<double> WpsChart::arclength_grid_parameters(int grid) const {
  if (grid < 2) throw Error(ErrorCode::InvalidArgument, "grid must be at least 2");
  std::vector<double> t(grid + 1);
  t[0] = 0.0;
  t[grid] = 1.0;
  for (int j = 1; j < grid; ++j) t[j] = parameter_at(total_length_ * j / grid);
  return t;
}

ConeSurfaceProfile wps_profile(int m1, int m2, int grid) {
  const WpsChart chart(m1, m2);
  if (grid < 4) throw Error(ErrorCode::GridTooCoarse, "grid must be at least 4");
  const std::vector<double> t = chart.arclength_grid_parameters(grid);
  std::vector<double> phi(grid + 1, 0.0);
  for (int j = 1; j < grid; ++j) phi[j] = 1.0 / std::abs(chart.lambda1(t[j]));
  // The chart values carry rounding noise at ~1e-16 that the DST spreads over every
  // mode; the pole curvature limit weights mode k by k³, so drop the noise plateau.
  std::vector<double> b = SineSeries::interpolate(chart.total_length(), phi).coefficients();
  double peak = 0.0;
  for (double v : b) peak = std::max(peak, std::abs(v));
  std::size_t keep = b.size();
  while (keep > 1 && std::abs(b[keep - 1]) <= 8.0 * std::numeric_limits<double>::epsilon() * peak) --keep;
  b.resize(keep);
  SineSeries series(chart.total_length(), std::move(b));
  std::ostringstream label;
  label << "wps(" << m1 << "," << m2 << ")";
  try {
    return ConeSurfaceProfile(std::move(series), m2, m1, label.str());
  } catch (const Error& e) {
    throw Error(ErrorCode::GridTooCoarse, label.str() + " at grid " + std::to_string(grid) + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Base queries

double gauss_curvature(const Base& base, double s) {
  if (const auto* p = base.profile()) {
    if (!(s > 0.0 && s < p->length()))
      throw Error(ErrorCode::DomainError, "gauss_curvature is evaluated on the open interval (0, L)");
  }
  return base.curvature(s);
}

double area(const Base& base, const QuadratureConfig& cfg) {
  if (const auto* t = base.torus()) return t->area();
  return base.integrate([](double) { return 1.0; }, cfg).value;
}

IntegralResult gauss_bonnet_check(const Base& base, const QuadratureConfig& cfg) {
  IntegralResult r = base.integrate([&](double s) { return base.curvature(s); }, cfg);
  r.value /= kTwoPi;
  r.error_estimate /= kTwoPi;
  return r;
}

}  // namespace s1yamabe
