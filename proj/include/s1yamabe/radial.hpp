#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "s1yamabe/series.hpp"

namespace s1yamabe {

/// A function of the arclength coordinate s on a rotationally symmetric base.
/// Immutable; cheap to copy (series coefficients are shared by value, callables by
/// std::function).
class RadialFunction {
 public:
  struct Callable {
    std::function<double(double)> f, df, d2f;
  };

  RadialFunction() : rep_(0.0) {}

  static RadialFunction constant(double c);
  static RadialFunction cosine(CosineSeries series);
  static RadialFunction fourier(FourierSeries series);
  static RadialFunction callable(std::function<double(double)> f, std::function<double(double)> df,
                                 std::function<double(double)> d2f);

  double value(double s) const;
  double d1(double s) const;
  double d2(double s) const;
  double operator()(double s) const { return value(s); }

  /// g'(s) / sin(πs/L). Exact at s ∈ {0, L} for cosine series of matching length;
  /// otherwise uses the l'Hôpital limit there.
  double d1_over_sin(double s, double length) const;

  bool is_constant() const { return std::holds_alternative<double>(rep_); }
  double constant_value() const;

  /// Multiply values by `factor`.
  RadialFunction scaled(double factor) const;
  /// s ↦ g(s / c): the same function on a base whose lengths were multiplied by c.
  RadialFunction stretched(double c) const;

  /// Grid samples this function was built from (empty for closed forms).
  const std::vector<double>& grid() const { return grid_; }
  const std::vector<double>& samples() const { return samples_; }
  bool mean_zero() const { return mean_zero_; }

  RadialFunction with_samples(std::vector<double> grid, std::vector<double> samples, bool mean_zero) const;

  std::string kind() const;

 private:
  using Rep = std::variant<double, CosineSeries, FourierSeries, Callable>;
  explicit RadialFunction(Rep rep) : rep_(std::move(rep)) {}

  Rep rep_;
  std::vector<double> grid_;
  std::vector<double> samples_;
  bool mean_zero_ = false;
};

}  // namespace s1yamabe
