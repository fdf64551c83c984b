#pragma once

#include <optional>
#include <string>

#include "s1yamabe/numerics.hpp"
#include "s1yamabe/orbifold.hpp"
#include "s1yamabe/radial.hpp"

namespace s1yamabe {

/// S¹-invariant metric g + ℓ²θ² on a circle (orbi)bundle over `base`: fiber
/// length 2πℓ(s), curvature form Ω = F(s)·dv_g.
class InvariantMetric {
 public:
  /// Throws InvalidArgument if ℓ is not positive on the base, or (cone bases) if
  /// ℓ' or F' do not vanish at the poles.
  InvariantMetric(Base base, RadialFunction ell, RadialFunction F,
                  QuadratureConfig cfg = default_base_quadrature());

  const Base& base() const { return base_; }
  const RadialFunction& ell() const { return ell_; }
  const RadialFunction& F() const { return F_; }
  const QuadratureConfig& quadrature() const { return cfg_; }

  /// ∫_Σ density dv_g with the metric's quadrature settings.
  IntegralResult integrate(const ScalarFn& density) const { return base_.integrate(density, cfg_); }

  /// (c²g, cℓ, F/c²): the metric c²g̃ with the same curvature 2-form.
  InvariantMetric scaled(double c) const;
  /// Same base and F with a new fiber profile.
  InvariantMetric with_ell(RadialFunction ell) const;

 private:
  Base base_;
  RadialFunction ell_;
  RadialFunction F_;
  QuadratureConfig cfg_;
};

/// Scal of the total space at s, via the submersion formula
///   Scal = 2K - ℓ²F²/2 + 2Δℓ/ℓ   (Δ = -(φℓ')'/φ, |Ω|² = 2F²).
/// DomainError at the poles of a cone base.
double scalar_curvature_total(const InvariantMetric& metric, double s);
/// Same quantity on the closed interval (pole values are the limits).
double scalar_curvature_closed(const InvariantMetric& metric, double s);

struct NormReport {
  double omega_L1 = 0.0;     ///< ∫ √2|F| dv
  double omega_L2_sq = 0.0;  ///< ∫ 2F² dv
  double omega_L3_sq = 0.0;  ///< (∫ (√2|F|)³ dv)^{2/3}
  double scal_L32 = 0.0;     ///< (∫ |2K|^{3/2} dv)^{2/3}
  double chern_number = 0.0; ///< (1/2π)∫ F dv
  double error_estimate = 0.0;  ///< largest quadrature error estimate among the entries
  std::optional<std::string> warning;  ///< set when order_product·chern_number is not within 1e-3 of an integer
};

NormReport omega_norms(const InvariantMetric& metric);

/// vol(M) = 2π ∫_Σ ℓ dv_g.
IntegralResult volume_total(const InvariantMetric& metric);

/// ∫_Σ |g| dv, splitting the base interval at the sign changes of g so every
/// piece is smooth.
IntegralResult integrate_abs(const Base& base, const ScalarFn& g, const QuadratureConfig& cfg);

}  // namespace s1yamabe
