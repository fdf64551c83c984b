#include "s1yamabe/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "s1yamabe/errors.hpp"
#include "s1yamabe/orbifold.hpp"

namespace s1yamabe {

Rational Rational::make(long long num, long long den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  if (den < 0) num = -num, den = -den;
  const long long g = std::gcd(num, den);
  if (g > 1) num /= g, den /= g;
  return {num, den};
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Rational c1_closed(int m1, int m2) {
  require_coprime(m1, m2);
  return Rational::make(1, static_cast<long long>(m1) * m2);
}

Rational chi_closed(int m1, int m2) {
  require_coprime(m1, m2);
  return Rational::make(static_cast<long long>(m1) + m2, static_cast<long long>(m1) * m2);
}

IntegralResult c1_quadrature(int m1, int m2, const QuadratureConfig& cfg) {
  require_coprime(m1, m2);
  const double p = double(m1) * m2;
  const double a = double(m1) * m1 - double(m2) * m2;
  const double b = double(m2) * m2;
  return integrate(
      [=](double r) {
        const double d = b + a * r;
        return p / (d * d);
      },
      0.0, 1.0, cfg);
}

namespace {

double kappa_on(const WpsChart& chart, double r) {
  const double p1 = chart.log_dlambda1(r);
  const double dp1 = chart.log_d2lambda1(r);
  const double p2 = chart.log_dlambda2(r);
  const double pg = chart.log_dgamma(r);
  const double dpg = chart.log_d2gamma(r);
  const double l2 = chart.lambda2(r);
  // W = λ̃2 p1/pγ;  κ = 4(λ̃2/pγ)(W' - λ̃2 p1²/pγ)
  return 4.0 * (l2 * l2) / (pg * pg) * (p2 * p1 + dp1 - p1 * dpg / pg - p1 * p1);
}

double boundary_term_on(const WpsChart& chart, double r) {
  return 2.0 * chart.lambda2(r) * chart.log_dlambda1(r) / (chart.log_dgamma(r) * chart.lambda1(r));
}

void require_open_unit(double r) {
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorCode::DomainError, "chart parameter must lie in (0,1)");
}

// Largest power of two not above both 1/64 and 1/32 of the distance from the
// endpoint to the nearest complex singularity of the boundary term (the zeros of
// m2² + (m1²-m2²)r and of m2 + (m1-m2)r).
double singularity_distance(double weight_here, int m1, int m2) {
  const double a = std::abs(double(m1) * m1 - double(m2) * m2);
  const double b = std::abs(double(m1) - m2);
  double radius = 1.0;
  if (a > 0) radius = std::min(radius, weight_here * weight_here / a);
  if (b > 0) radius = std::min(radius, weight_here / b);
  return radius;
}

double first_step(double weight_here, int m1, int m2) {
  const double radius = singularity_distance(weight_here, m1, m2);
  int e = 0;
  std::frexp(std::min(1.0 / 64.0, radius / 32.0), &e);
  return std::ldexp(1.0, e - 1);
}

}  // namespace

double kappa(int m1, int m2, double r) {
  require_coprime(m1, m2);
  require_open_unit(r);
  return kappa_on(WpsChart(m1, m2), r);
}

QuadratureConfig chi_quadrature_config(int m1, int m2) {
  QuadratureConfig cfg;
  cfg.endpoint_mode = EndpointMode::epsilon_cutoff;
  // The integrand varies on the scale of the nearest chart singularity; keep the
  // ladder well inside it.
  const double radius = std::min(singularity_distance(m2, m1, m2), singularity_distance(m1, m1, m2));
  cfg.epsilon = std::min(1e-3, radius / 32.0);
  cfg.epsilon_ratio = 0.1;
  cfg.richardson_levels = 3;
  return cfg;
}

IntegralResult chi_quadrature(int m1, int m2) { return chi_quadrature(m1, m2, chi_quadrature_config(m1, m2)); }

IntegralResult chi_quadrature(int m1, int m2, const QuadratureConfig& cfg) {
  const WpsChart chart(m1, m2);
  return integrate(
      [&](double r) {
        return 0.5 * kappa_on(chart, r) * std::abs(chart.log_dgamma(r)) / (chart.lambda1(r) * chart.lambda2(r));
      },
      0.0, 1.0, cfg);
}

double chi_boundary_term(int m1, int m2, double r) {
  require_coprime(m1, m2);
  require_open_unit(r);
  return boundary_term_on(WpsChart(m1, m2), r);
}

LimitResult chi_boundary(int m1, int m2) {
  const WpsChart chart(m1, m2);
  constexpr int kLevels = 7;
  auto limit = [&](double step, bool at_end) {
    // Powers of two keep 1-δ exact.
    std::vector<double> delta(kLevels), y(kLevels);
    for (int k = 0; k < kLevels; ++k) {
      delta[k] = std::ldexp(step, -k);
      y[k] = boundary_term_on(chart, at_end ? 1.0 - delta[k] : delta[k]);
    }
    const double full = extrapolate_to_zero(delta, y);
    const double shallow = extrapolate_to_zero(std::span(delta).first(kLevels - 1), std::span(y).first(kLevels - 1));
    const double diff = std::abs(full - shallow);
    if (diff > 1e-10)
      throw Error(ErrorCode::LimitNotConverged, "boundary limit extrapolations for (" + std::to_string(m1) + "," +
                                                    std::to_string(m2) + ") differ by " + std::to_string(diff * 1e10) +
                                                    "e-10");
    return LimitResult{full, diff};
  };
  const LimitResult lo = limit(first_step(m2, m1, m2), false);
  const LimitResult hi = limit(first_step(m1, m1, m2), true);
  return {lo.value - hi.value, lo.error_estimate + hi.error_estimate};
}

InvariantReport invariant_report(int m1, int m2) {
  InvariantReport rep;
  rep.m1 = m1;
  rep.m2 = m2;
  rep.c1_closed = c1_closed(m1, m2);
  rep.chi_closed = chi_closed(m1, m2);
  rep.c1_quadrature = c1_quadrature(m1, m2);
  rep.chi_quadrature = chi_quadrature(m1, m2);
  rep.chi_boundary = chi_boundary(m1, m2);
  return rep;
}

}  // namespace s1yamabe
