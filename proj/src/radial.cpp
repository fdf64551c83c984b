#include "s1yamabe/radial.hpp"

#include <cmath>
#include <numbers>

#include "s1yamabe/errors.hpp"

namespace s1yamabe {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

RadialFunction RadialFunction::constant(double c) {
  if (!std::isfinite(c)) throw Error(ErrorCode::NonFinite, "constant radial function must be finite");
  return RadialFunction(Rep(c));
}

RadialFunction RadialFunction::cosine(CosineSeries series) { return RadialFunction(Rep(std::move(series))); }

RadialFunction RadialFunction::fourier(FourierSeries series) { return RadialFunction(Rep(std::move(series))); }

RadialFunction RadialFunction::callable(std::function<double(double)> f, std::function<double(double)> df,
                                        std::function<double(double)> d2f) {
  if (!f || !df || !d2f) throw Error(ErrorCode::InvalidArgument, "callable radial function needs f, f', f''");
  return RadialFunction(Rep(Callable{std::move(f), std::move(df), std::move(d2f)}));
}

double RadialFunction::value(double s) const {
  return std::visit(overloaded{[](double c) { return c; },
                               [s](const CosineSeries& g) { return g.value(s); },
                               [s](const FourierSeries& g) { return g.value(s); },
                               [s](const Callable& g) { return g.f(s); }},
                    rep_);
}

double RadialFunction::d1(double s) const {
  return std::visit(overloaded{[](double) { return 0.0; },
                               [s](const CosineSeries& g) { return g.d1(s); },
                               [s](const FourierSeries& g) { return g.d1(s); },
                               [s](const Callable& g) { return g.df(s); }},
                    rep_);
}

double RadialFunction::d2(double s) const {
  return std::visit(overloaded{[](double) { return 0.0; },
                               [s](const CosineSeries& g) { return g.d2(s); },
                               [s](const FourierSeries& g) { return g.d2(s); },
                               [s](const Callable& g) { return g.d2f(s); }},
                    rep_);
}

double RadialFunction::d1_over_sin(double s, double length) const {
  if (is_constant()) return 0.0;
  if (const auto* g = std::get_if<CosineSeries>(&rep_); g && std::abs(g->length() - length) <= 1e-14 * length)
    return g->d1_over_sin(s);
  const double x = std::numbers::pi * s / length;
  const double sx = std::sin(x);
  if (std::abs(sx) > 1e-12) return d1(s) / sx;
  // l'Hôpital at the ends: g'(s)/sin(πs/L) → g''(s)·L/(π cos(πs/L))
  return d2(s) * length / (std::numbers::pi * std::cos(x));
}

double RadialFunction::constant_value() const {
  if (!is_constant()) throw Error(ErrorCode::InvalidArgument, "radial function is not constant");
  return std::get<double>(rep_);
}

RadialFunction RadialFunction::scaled(double factor) const {
  RadialFunction out = std::visit(
      overloaded{[factor](double c) { return RadialFunction(Rep(c * factor)); },
                 [factor](const CosineSeries& g) {
                   std::vector<double> a = g.coefficients();
                   for (double& v : a) v *= factor;
                   return RadialFunction(Rep(CosineSeries(g.length(), std::move(a))));
                 },
                 [factor](const FourierSeries& g) {
                   std::vector<double> a = g.cos_coefficients(), b = g.sin_coefficients();
                   for (double& v : a) v *= factor;
                   for (double& v : b) v *= factor;
                   return RadialFunction(Rep(FourierSeries(g.period(), std::move(a), std::move(b))));
                 },
                 [factor](const Callable& g) {
                   return RadialFunction(Rep(Callable{[f = g.f, factor](double s) { return factor * f(s); },
                                                      [f = g.df, factor](double s) { return factor * f(s); },
                                                      [f = g.d2f, factor](double s) { return factor * f(s); }}));
                 }},
      rep_);
  out.grid_ = grid_;
  out.samples_ = samples_;
  for (double& v : out.samples_) v *= factor;
  out.mean_zero_ = mean_zero_;
  return out;
}

RadialFunction RadialFunction::stretched(double c) const {
  if (!(c > 0)) throw Error(ErrorCode::InvalidArgument, "stretch factor must be positive");
  RadialFunction out = std::visit(
      overloaded{[](double v) { return RadialFunction(Rep(v)); },
                 [c](const CosineSeries& g) { return RadialFunction(Rep(g.scaled_argument(c))); },
                 [c](const FourierSeries& g) {
                   return RadialFunction(
                       Rep(FourierSeries(g.period() * c, g.cos_coefficients(), g.sin_coefficients())));
                 },
                 [c](const Callable& g) {
                   return RadialFunction(Rep(Callable{[f = g.f, c](double s) { return f(s / c); },
                                                      [f = g.df, c](double s) { return f(s / c) / c; },
                                                      [f = g.d2f, c](double s) { return f(s / c) / (c * c); }}));
                 }},
      rep_);
  out.grid_ = grid_;
  for (double& s : out.grid_) s *= c;
  out.samples_ = samples_;
  out.mean_zero_ = mean_zero_;
  return out;
}

RadialFunction RadialFunction::with_samples(std::vector<double> grid, std::vector<double> samples,
                                            bool mean_zero) const {
  RadialFunction out = *this;
  out.grid_ = std::move(grid);
  out.samples_ = std::move(samples);
  out.mean_zero_ = mean_zero;
  return out;
}

std::string RadialFunction::kind() const {
  return std::visit(overloaded{[](double) { return std::string("constant"); },
                               [](const CosineSeries&) { return std::string("cosine_series"); },
                               [](const FourierSeries&) { return std::string("fourier_series"); },
                               [](const Callable&) { return std::string("callable"); }},
                    rep_);
}

}  // namespace s1yamabe
