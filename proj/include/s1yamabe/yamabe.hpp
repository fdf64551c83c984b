#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "s1yamabe/bundle.hpp"
#include "s1yamabe/invariants.hpp"

namespace s1yamabe {

/// σ(S³) = 3·2^{5/3}·π^{4/3}.
double sigma_s3();
/// vol(Sⁿ) of the unit sphere, n ≥ 0.
double sphere_volume(int n);
/// σ(Sⁿ) = n(n-1)·vol(Sⁿ)^{2/n}, n ≥ 2.
double sphere_yamabe_constant(int n);

enum class YamabeRoute { base_integral, total_space };

struct YamabeReport {
  double J = 0.0;
  double numerator = 0.0;    ///< 2π∫(Scal_g - ℓ²F²/2)ℓ dv_g
  double denominator = 0.0;  ///< vol(M)^{1/3}
  YamabeRoute route = YamabeRoute::base_integral;
  double J_total_space = 0.0;  ///< ∫Scal dv / vol^{1/3} over the total space
  double error_estimate = 0.0;
};

/// Einstein-Hilbert functional of the metric (n = 3) by both routes.
/// InconsistentRoutes if they differ by more than 1e-8 relative.
YamabeReport functional_J(const InvariantMetric& metric);

/// Base data entering the constant-fiber closed form.
struct BaseData {
  double area = 0.0;
  double chi = 0.0;
  double omega_L2_sq = 0.0;
  double omega_L1 = 0.0;
  double chern_number = 0.0;
  double area_error = 0.0;         ///< quadrature error estimates of the two inputs
  double omega_L2_sq_error = 0.0;  ///< of the closed form
};
BaseData base_data(const Base& base, const RadialFunction& F, const QuadratureConfig& cfg = default_base_quadrature());

/// (π²/(16·area))^{1/3}(16πχℓ^{2/3} - ‖Ω‖₂²ℓ^{8/3}).
double functional_J_closed(const BaseData& data, double ell);
double functional_J_closed(const Base& base, const RadialFunction& F, double ell);
/// First-order propagation of area_error and omega_L2_sq_error through the closed form.
double functional_J_closed_error(const BaseData& data, double ell);

/// Yamabe functional at the conformal metric u⁴g̃:
///   ∫2πℓ(8u'² + Scal u²)dv / (∫2πℓu⁶dv)^{1/3}.   NonPositiveU unless u > 0.
double conformal_functional(const InvariantMetric& metric, const RadialFunction& u);

struct OptimalEll {
  double ell_star = 0.0;
  double J_max = 0.0;
  double ell_numeric = 0.0;  ///< argmax of the closed form by Brent's method
  double J_numeric = 0.0;
};

/// ℓ* = √(4πχ)/‖Ω‖₂ and J_max = 3·2^{4/3}π²·area^{-1/3}χ^{4/3}‖Ω‖₂^{-2/3}, cross-checked
/// numerically (InconsistentRoutes beyond 1e-6). CaseIII if χ ≤ 0, CaseII if ‖Ω‖₂ = 0.
OptimalEll optimal_ell(const BaseData& data);
OptimalEll optimal_ell(const Base& base, const RadialFunction& F);

/// Curvature density F = Ω(e1,e2) of the weighted Hopf connection at chart parameter
/// t ∈ (0,1): 2m1m2/(m2² + (m1²-m2²)t)^{3/2}. DomainError outside (0,1).
double wps_curvature_density(int m1, int m2, double t);
/// The same density as a radial function on wps_profile(m1, m2, grid).
RadialFunction wps_curvature_field(int m1, int m2, int grid = 256);

/// 3·2^{4/3}π²χ^{4/3}‖Ω‖₁^{-2/3}. CaseIII if χ ≤ 0, CaseII if ‖Ω‖₁ = 0.
double bound_cauchy_schwarz(const BaseData& data);
double bound_cauchy_schwarz(const Base& base, const RadialFunction& F);

/// σ(S³)·(χ/(2√|c1|))^{4/3}. InvalidCase unless χ > 0 and c1 ≠ 0.
double bound_theorem_main(double chi, double c1);
/// σ(S³)·((m1+m2)/(2√(m1m2)))^{4/3}. NotCoprime.
double bound_weighted_hopf(int m1, int m2);
/// σ(Sⁿ)·k^{2/n}; +∞ when k is absent (no finite orbit). InvalidArgument if n < 3 or k < 1.
double hebey_vaugon_bound(int n, std::optional<long long> k);

/// Data of the constant-fiber representative u⁴g̃ with u = ℓ^{-1/2}: base ℓ^{-2}g,
/// unit fibers, same curvature 2-form.
struct ConstantFiberRepresentative {
  double area = 0.0;         ///< ∫ℓ^{-2}dv
  double omega_L2_sq = 0.0;  ///< 2∫F²ℓ²dv
  double chi = 0.0;
  double J = 0.0;            ///< closed form at unit fiber length
  double J_max = 0.0;        ///< optimum over constant rescaling of its fibers
};
ConstantFiberRepresentative constant_fiber_representative(const InvariantMetric& metric);

enum class BoundKind { theorem_main, weighted_hopf, cauchy_schwarz, hebey_vaugon, optimal_ell };
std::string to_string(BoundKind kind);

struct BoundReport {
  BoundKind kind = BoundKind::theorem_main;
  double value = 0.0;
  std::vector<std::pair<std::string, double>> inputs;
  std::string source;  ///< "exact" for rational inputs, "quadrature" for measured ones
};

/// Case classification of an invariant base: "i" (χ>0, c1≠0), "ii" (χ>0, c1=0), "iii" (χ≤0).
std::string case_label(double chi, double c1);

}  // namespace s1yamabe
