#include "s1yamabe/series.hpp"

#include <cmath>
#include <numbers>

#include "s1yamabe/errors.hpp"

namespace s1yamabe {

namespace {

constexpr double kPi = std::numbers::pi;

// cos/sin of π·m/N for integer m, reduced modulo 2N before the library call.
double cos_frac(long long m, long long n) { return std::cos(kPi * static_cast<double>(m % (2 * n)) / n); }
double sin_frac(long long m, long long n) { return std::sin(kPi * static_cast<double>(m % (2 * n)) / n); }

void require_length(double length) {
  if (!(length > 0) || !std::isfinite(length)) throw Error(ErrorCode::InvalidArgument, "series length must be positive");
}

}  // namespace

// ---------------------------------------------------------------------------
// SineSeries

SineSeries::SineSeries(double length, std::vector<double> coeffs) : length_(length), coeffs_(std::move(coeffs)) {
  require_length(length);
}

SineSeries SineSeries::interpolate(double length, std::span<const double> samples) {
  if (samples.size() < 3) throw Error(ErrorCode::InvalidArgument, "sine interpolation needs at least 3 samples");
  const long long n = static_cast<long long>(samples.size()) - 1;
  std::vector<double> b(n - 1, 0.0);
  for (long long k = 1; k < n; ++k) {
    double sum = 0.0;
    for (long long j = 1; j < n; ++j) sum += samples[j] * sin_frac(j * k, n);
    b[k - 1] = 2.0 * sum / n;
  }
  return SineSeries(length, std::move(b));
}

double SineSeries::value(double s) const {
  const double x = kPi * s / length_;
  const double c1 = std::cos(x), s1 = std::sin(x);
  double ck = 1.0, sk = 0.0, sum = 0.0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const double cn = ck * c1 - sk * s1;
    sk = sk * c1 + ck * s1;
    ck = cn;
    sum += coeffs_[k] * sk;
  }
  return sum;
}

double SineSeries::d1(double s) const {
  const double x = kPi * s / length_;
  const double w = kPi / length_;
  const double c1 = std::cos(x), s1 = std::sin(x);
  double ck = 1.0, sk = 0.0, sum = 0.0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const double cn = ck * c1 - sk * s1;
    sk = sk * c1 + ck * s1;
    ck = cn;
    sum += coeffs_[k] * static_cast<double>(k + 1) * ck;
  }
  return w * sum;
}

double SineSeries::d2(double s) const {
  const double x = kPi * s / length_;
  const double w = kPi / length_;
  const double c1 = std::cos(x), s1 = std::sin(x);
  double ck = 1.0, sk = 0.0, sum = 0.0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const double cn = ck * c1 - sk * s1;
    sk = sk * c1 + ck * s1;
    ck = cn;
    const double kk = static_cast<double>(k + 1);
    sum += coeffs_[k] * kk * kk * sk;
  }
  return -w * w * sum;
}

// sin(kx)/sin(x) = U_{k-1}(cos x)
double SineSeries::value_over_sin(double s) const {
  const double c = std::cos(kPi * s / length_);
  double u_prev = 0.0, u = 1.0, sum = 0.0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    sum += coeffs_[k] * u;
    const double next = 2.0 * c * u - u_prev;
    u_prev = u;
    u = next;
  }
  return sum;
}

double SineSeries::d2_over_sin(double s) const {
  const double c = std::cos(kPi * s / length_);
  const double w = kPi / length_;
  double u_prev = 0.0, u = 1.0, sum = 0.0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const double kk = static_cast<double>(k + 1);
    sum += coeffs_[k] * kk * kk * u;
    const double next = 2.0 * c * u - u_prev;
    u_prev = u;
    u = next;
  }
  return -w * w * sum;
}

std::vector<double> SineSeries::antiderivative_cosine_coeffs() const {
  std::vector<double> a(coeffs_.size() + 1, 0.0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const double kk = static_cast<double>(k + 1);
    a[k + 1] = -coeffs_[k] * length_ / (kk * kPi);
  }
  return a;
}

// ---------------------------------------------------------------------------
// CosineSeries

CosineSeries::CosineSeries(double length, std::vector<double> coeffs) : length_(length), coeffs_(std::move(coeffs)) {
  require_length(length);
}

CosineSeries CosineSeries::interpolate(double length, std::span<const double> samples) {
  if (samples.size() < 2) throw Error(ErrorCode::InvalidArgument, "cosine interpolation needs at least 2 samples");
  const long long n = static_cast<long long>(samples.size()) - 1;
  std::vector<double> a(n + 1, 0.0);
  for (long long k = 0; k <= n; ++k) {
    double sum = 0.5 * (samples[0] + ((k % 2 == 0) ? 1.0 : -1.0) * samples[n]);
    for (long long j = 1; j < n; ++j) sum += samples[j] * cos_frac(j * k, n);
    a[k] = 2.0 * sum / n;
  }
  a[0] *= 0.5;
  a[n] *= 0.5;
  return CosineSeries(length, std::move(a));
}

double CosineSeries::value(double s) const {
  const double x = kPi * s / length_;
  const double c1 = std::cos(x), s1 = std::sin(x);
  double ck = 1.0, sk = 0.0, sum = coeffs_.empty() ? 0.0 : coeffs_[0];
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    const double cn = ck * c1 - sk * s1;
    sk = sk * c1 + ck * s1;
    ck = cn;
    sum += coeffs_[k] * ck;
  }
  return sum;
}

double CosineSeries::d1(double s) const {
  const double x = kPi * s / length_;
  const double w = kPi / length_;
  const double c1 = std::cos(x), s1 = std::sin(x);
  double ck = 1.0, sk = 0.0, sum = 0.0;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    const double cn = ck * c1 - sk * s1;
    sk = sk * c1 + ck * s1;
    ck = cn;
    sum += coeffs_[k] * static_cast<double>(k) * sk;
  }
  return -w * sum;
}

double CosineSeries::d2(double s) const {
  const double x = kPi * s / length_;
  const double w = kPi / length_;
  const double c1 = std::cos(x), s1 = std::sin(x);
  double ck = 1.0, sk = 0.0, sum = 0.0;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    const double cn = ck * c1 - sk * s1;
    sk = sk * c1 + ck * s1;
    ck = cn;
    const double kk = static_cast<double>(k);
    sum += coeffs_[k] * kk * kk * ck;
  }
  return -w * w * sum;
}

double CosineSeries::d1_over_sin(double s) const {
  const double c = std::cos(kPi * s / length_);
  const double w = kPi / length_;
  double u_prev = 0.0, u = 1.0, sum = 0.0;  // u = U_{k-1}
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    sum += coeffs_[k] * static_cast<double>(k) * u;
    const double next = 2.0 * c * u - u_prev;
    u_prev = u;
    u = next;
  }
  return -w * sum;
}

// ---------------------------------------------------------------------------
// FourierSeries

FourierSeries::FourierSeries(double period, std::vector<double> cos_coeffs, std::vector<double> sin_coeffs)
    : period_(period), cos_(std::move(cos_coeffs)), sin_(std::move(sin_coeffs)) {
  require_length(period);
  if (sin_.size() < cos_.size()) sin_.resize(cos_.size(), 0.0);
  if (cos_.size() < sin_.size()) cos_.resize(sin_.size(), 0.0);
  if (!sin_.empty()) sin_[0] = 0.0;
}

FourierSeries FourierSeries::interpolate(double period, std::span<const double> samples) {
  if (samples.empty()) throw Error(ErrorCode::InvalidArgument, "Fourier interpolation needs samples");
  const long long n = static_cast<long long>(samples.size());
  const long long kmax = n / 2;
  std::vector<double> a(kmax + 1, 0.0), b(kmax + 1, 0.0);
  for (long long k = 0; k <= kmax; ++k) {
    double sc = 0.0, ss = 0.0;
    for (long long j = 0; j < n; ++j) {
      sc += samples[j] * cos_frac(2 * j * k, n);
      ss += samples[j] * sin_frac(2 * j * k, n);
    }
    a[k] = 2.0 * sc / n;
    b[k] = 2.0 * ss / n;
  }
  a[0] *= 0.5;
  b[0] = 0.0;
  if (n % 2 == 0 && kmax > 0) {
    a[kmax] *= 0.5;
    b[kmax] = 0.0;
  }
  return FourierSeries(period, std::move(a), std::move(b));
}

double FourierSeries::value(double s) const {
  const double y = 2.0 * kPi * s / period_;
  const double c1 = std::cos(y), s1 = std::sin(y);
  double ck = 1.0, sk = 0.0, sum = cos_.empty() ? 0.0 : cos_[0];
  for (std::size_t k = 1; k < cos_.size(); ++k) {
    const double cn = ck * c1 - sk * s1;
    sk = sk * c1 + ck * s1;
    ck = cn;
    sum += cos_[k] * ck + sin_[k] * sk;
  }
  return sum;
}

double FourierSeries::d1(double s) const {
  const double y = 2.0 * kPi * s / period_;
  const double w = 2.0 * kPi / period_;
  const double c1 = std::cos(y), s1 = std::sin(y);
  double ck = 1.0, sk = 0.0, sum = 0.0;
  for (std::size_t k = 1; k < cos_.size(); ++k) {
    const double cn = ck * c1 - sk * s1;
    sk = sk * c1 + ck * s1;
    ck = cn;
    sum += static_cast<double>(k) * (-cos_[k] * sk + sin_[k] * ck);
  }
  return w * sum;
}

double FourierSeries::d2(double s) const {
  const double y = 2.0 * kPi * s / period_;
  const double w = 2.0 * kPi / period_;
  const double c1 = std::cos(y), s1 = std::sin(y);
  double ck = 1.0, sk = 0.0, sum = 0.0;
  for (std::size_t k = 1; k < cos_.size(); ++k) {
    const double cn = ck * c1 - sk * s1;
    sk = sk * c1 + ck * s1;
    ck = cn;
    const double kk = static_cast<double>(k);
    sum += kk * kk * (cos_[k] * ck + sin_[k] * sk);
  }
  return -w * w * sum;
}

}  // namespace s1yamabe
