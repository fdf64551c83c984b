#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "s1yamabe/numerics.hpp"
#include "s1yamabe/radial.hpp"
#include "s1yamabe/series.hpp"

namespace s1yamabe {

/// Rotationally symmetric 2-orbifold ds² + φ(s)²dθ², s ∈ [0,L], with cone points
/// of order m_start at s=0 and m_end at s=L (φ'(0)=1/m_start, φ'(L)=-1/m_end).
///
/// φ is held as a sine series, so it is odd about both poles (the smoothness
/// condition for an orbifold metric) and the pole limits of φ''/φ are exact.
class ConeSurfaceProfile {
 public:
  /// Validates positivity and the cone slopes; throws InvalidArgument otherwise.
  ConeSurfaceProfile(SineSeries phi, int m_start, int m_end, std::string label = "profile");

  /// Uniformly spaced samples s_j = jL/N (s_0 = 0, s_N = L) with φ(0)=φ(L)=0.
  static ConeSurfaceProfile from_samples(std::span<const double> s, std::span<const double> phi, int m_start,
                                         int m_end);

  double length() const { return phi_.length(); }
  int m_start() const { return m_start_; }
  int m_end() const { return m_end_; }
  const std::string& label() const { return label_; }
  const SineSeries& series() const { return phi_; }

  double phi(double s) const { return phi_.value(s); }
  double dphi(double s) const { return phi_.d1(s); }
  double d2phi(double s) const { return phi_.d2(s); }
  double phi_over_sin(double s) const { return phi_.value_over_sin(s); }

  /// -φ''/φ on the closed interval (pole values are the limits).
  double curvature(double s) const;

  /// 1/m_start + 1/m_end.
  double euler_characteristic() const { return 1.0 / m_start_ + 1.0 / m_end_; }

  /// The metric c²g: (L, φ) ↦ (cL, cφ(·/c)).
  ConeSurfaceProfile scaled(double c) const;

 private:
  SineSeries phi_;
  int m_start_;
  int m_end_;
  std::string label_;
};

struct ConeSlopes {
  double start;  ///< φ'(0⁺)
  double end;    ///< φ'(L⁻)
};

/// One-sided difference quotients φ(h)/h and -φ(L-h)/h, Richardson-combined over
/// h and 2h (φ is odd about each pole, so the error is O(h⁴)).
ConeSlopes one_sided_slopes(const ConeSurfaceProfile& profile, double h);

/// Flat cylinder-torus: φ ≡ radius, s periodic with period `length`.
struct FlatTorusBase {
  double length;
  double radius;

  FlatTorusBase(double length, double radius);
  double area() const;
  FlatTorusBase scaled(double c) const { return {length * c, radius * c}; }
};

/// Either base kind. Radial functions on a cone base are even about the poles;
/// on a torus they are periodic in s.
class Base {
 public:
  Base(ConeSurfaceProfile profile) : rep_(std::move(profile)) {}
  Base(FlatTorusBase torus) : rep_(torus) {}

  bool is_torus() const { return std::holds_alternative<FlatTorusBase>(rep_); }
  const ConeSurfaceProfile* profile() const { return std::get_if<ConeSurfaceProfile>(&rep_); }
  const FlatTorusBase* torus() const { return std::get_if<FlatTorusBase>(&rep_); }

  double length() const;
  double phi(double s) const;
  double dphi(double s) const;
  /// Gauss curvature on the closed interval.
  double curvature(double s) const;
  double euler_characteristic() const;
  /// m_start·m_end for cone bases, 1 for the torus.
  int order_product() const;

  /// Nonnegative Laplacian of a radial function, Δg = -(φg')'/φ, on the closed interval.
  double laplacian(const RadialFunction& g, double s) const;

  /// ∫_Σ density dv_g = 2π ∫ density(s) φ(s) ds.
  IntegralResult integrate(const ScalarFn& density, const QuadratureConfig& cfg) const;

  Base scaled(double c) const;
  std::string describe() const;

 private:
  std::variant<ConeSurfaceProfile, FlatTorusBase> rep_;
};

/// The base-integral configuration: plain mode (integrands are smooth up to the poles).
QuadratureConfig default_base_quadrature();

ConeSurfaceProfile make_round_sphere(double radius);
/// φ(s) = R[sin(s/R) + a·sin³(s/R)], cone orders (1,1); a > -1.
ConeSurfaceProfile make_bump_sphere(double radius, double amplitude);

/// Chart functions of the weighted projective line CP¹(m1,m2) with r = |z1|².
class WpsChart {
 public:
  WpsChart(int m1, int m2);

  int m1() const { return m1_; }
  int m2() const { return m2_; }

  // λ̃1(t) = -√((m1²-m2²)t+m2²)/√(t(1-t))
  double lambda1(double t) const;
  double dlambda1(double t) const;
  double d2lambda1(double t) const;
  // λ̃2(t) = -((m1-m2)t+m2)/√(t(1-t))
  double lambda2(double t) const;
  double dlambda2(double t) const;
  double d2lambda2(double t) const;
  // γ(r) = (1-r)^m1 / r^m2
  double gamma(double r) const;
  double dgamma(double r) const;
  double d2gamma(double r) const;

  // Logarithmic derivatives and their derivatives (overflow-free forms used by the
  // curvature assembly).
  double log_dlambda1(double t) const;   ///< λ̃1'/λ̃1
  double log_d2lambda1(double t) const;  ///< (λ̃1'/λ̃1)'
  double log_dlambda2(double t) const;   ///< λ̃2'/λ̃2
  double log_dgamma(double r) const;     ///< γ'/γ
  double log_d2gamma(double r) const;    ///< (γ'/γ)'

  /// ds/dt = |γ'| / (2γ|λ̃2|) of the quotient metric.
  double arclength_density(double t) const;
  /// ∫_0^t ds/dt.
  double arclength(double t) const;
  double total_length() const { return total_length_; }
  /// Inverse of arclength(); safeguarded Newton.
  double parameter_at(double s) const;
  /// Parameters t_j with arclength(t_j) = j·L/grid, j = 0..grid.
  std::vector<double> arclength_grid_parameters(int grid) const;

 private:
  double density_split(double t, double u) const;
  double head_length(double t) const;  ///< ∫_0^t
  double tail_length(double u) const;  ///< ∫_{1-u}^1

  int m1_;
  int m2_;
  double total_length_;
};

/// Quotient metric of the weighted Hopf action, resampled to arclength through the
/// chart. Isotropy Z_{m2} at s=0 (t=0) and Z_{m1} at s=L (t=1).
/// Throws NotCoprime or GridTooCoarse.
ConeSurfaceProfile wps_profile(int m1, int m2, int grid = 256);

/// -φ''/φ; DomainError at the poles of a cone base.
double gauss_curvature(const Base& base, double s);
double area(const Base& base, const QuadratureConfig& cfg = default_base_quadrature());
/// (1/2π)∫K dA by quadrature.
IntegralResult gauss_bonnet_check(const Base& base, const QuadratureConfig& cfg = default_base_quadrature());

int gcd(int a, int b);
void require_coprime(int m1, int m2);

}  // namespace s1yamabe
