#pragma once

#include <span>
#include <vector>

namespace s1yamabe {

// Trigonometric series on [0, L]. With x = πs/L, sine series are odd about both
// ends (profiles of smooth rotationally symmetric metrics) and cosine series are
// even about both ends (smooth radial functions, derivative zero at the poles).

/// φ(s) = Σ_{k≥1} b_k sin(kπs/L)
class SineSeries {
 public:
  SineSeries() = default;
  SineSeries(double length, std::vector<double> coeffs);

  /// DST-I interpolant of samples at s_j = jL/N, j = 0..N (the end samples are ignored;
  /// a sine series vanishes there).
  static SineSeries interpolate(double length, std::span<const double> samples);

  double length() const { return length_; }
  const std::vector<double>& coefficients() const { return coeffs_; }

  double value(double s) const;
  double d1(double s) const;
  double d2(double s) const;

  /// value(s) / sin(πs/L), d2(s) / sin(πs/L); finite at both ends.
  double value_over_sin(double s) const;
  double d2_over_sin(double s) const;

  /// Antiderivative with zero mean constant dropped; returned as cosine coefficients
  /// c_k of -Σ b_k (L/kπ) cos(kπs/L) (index 0 is zero).
  std::vector<double> antiderivative_cosine_coeffs() const;

 private:
  double length_ = 1.0;
  std::vector<double> coeffs_;  // coeffs_[k-1] = b_k
};

/// g(s) = Σ_{k≥0} a_k cos(kπs/L)
class CosineSeries {
 public:
  CosineSeries() = default;
  CosineSeries(double length, std::vector<double> coeffs);

  /// DCT-I interpolant of samples at s_j = jL/N, j = 0..N.
  static CosineSeries interpolate(double length, std::span<const double> samples);

  double length() const { return length_; }
  const std::vector<double>& coefficients() const { return coeffs_; }

  double value(double s) const;
  double d1(double s) const;
  double d2(double s) const;
  /// d1(s) / sin(πs/L); finite at both ends.
  double d1_over_sin(double s) const;

  CosineSeries scaled_argument(double c) const { return CosineSeries(length_ * c, coeffs_); }

 private:
  double length_ = 1.0;
  std::vector<double> coeffs_;
};

/// g(s) = a_0 + Σ_{k≥1} (a_k cos(2πks/L) + b_k sin(2πks/L)), period L.
class FourierSeries {
 public:
  FourierSeries() = default;
  FourierSeries(double period, std::vector<double> cos_coeffs, std::vector<double> sin_coeffs);

  /// Trigonometric interpolant of samples at s_j = jL/n, j = 0..n-1.
  static FourierSeries interpolate(double period, std::span<const double> samples);

  double period() const { return period_; }
  const std::vector<double>& cos_coefficients() const { return cos_; }
  const std::vector<double>& sin_coefficients() const { return sin_; }

  double value(double s) const;
  double d1(double s) const;
  double d2(double s) const;

 private:
  double period_ = 1.0;
  std::vector<double> cos_;  // index 0 is the mean
  std::vector<double> sin_;  // index 0 unused (zero)
};

}  // namespace s1yamabe
