#pragma once

#include <string>

#include "s1yamabe/numerics.hpp"

namespace s1yamabe {

/// Reduced fraction with positive denominator.
struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational make(long long num, long long den);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;
  bool operator==(const Rational&) const = default;
};

/// First Chern number of the weighted Hopf bundle over CP¹(m1,m2): 1/(m1·m2).
Rational c1_closed(int m1, int m2);
/// Orbifold Euler characteristic 1/m1 + 1/m2.
Rational chi_closed(int m1, int m2);

/// ∫_0^1 m1·m2 / (m2² + (m1²-m2²)r)² dr.
IntegralResult c1_quadrature(int m1, int m2, const QuadratureConfig& cfg = QuadratureConfig::plain());

/// Gauss curvature of the quotient metric at chart parameter r ∈ (0,1), assembled
/// from the analytic chart derivatives. DomainError outside the open interval.
double kappa(int m1, int m2, double r);

/// ε ladder for chi_quadrature: {1e-3, 1e-4, 1e-5}, shifted down when the pair's
/// nearest chart singularity (at distance m²/|m1²-m2²| from an end) is closer than 0.032.
QuadratureConfig chi_quadrature_config(int m1, int m2);

/// (1/2)∫ κ |γ'| / (λ̃1 λ̃2 γ) dr over (ε, 1-ε), extrapolated to ε = 0.
IntegralResult chi_quadrature(int m1, int m2);
IntegralResult chi_quadrature(int m1, int m2, const QuadratureConfig& cfg);

struct LimitResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

/// Boundary term 2λ̃2λ̃1'γ/(λ̃1²γ'): its r→0⁺ limit minus its r→1⁻ limit, each by
/// Richardson extrapolation in the distance to the endpoint. LimitNotConverged if
/// two extrapolation depths disagree by more than 1e-10.
LimitResult chi_boundary(int m1, int m2);

/// The boundary term itself at r ∈ (0,1).
double chi_boundary_term(int m1, int m2, double r);

struct InvariantReport {
  int m1 = 1;
  int m2 = 1;
  Rational c1_closed;
  Rational chi_closed;
  IntegralResult c1_quadrature;
  IntegralResult chi_quadrature;
  LimitResult chi_boundary;
};

InvariantReport invariant_report(int m1, int m2);

}  // namespace s1yamabe
