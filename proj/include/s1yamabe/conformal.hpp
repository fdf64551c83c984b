#pragma once

#include <vector>

#include "s1yamabe/bundle.hpp"

namespace s1yamabe {

struct LaplaceSolution {
  RadialFunction u;        ///< mean-zero solution of Δu = f (nonnegative Laplacian)
  double residual = 0.0;   ///< max over the grid of |Δu - f|
  double mean = 0.0;       ///< (1/area)∫u dv after normalization
};

/// Solves Δ_g u = f for radial f with ∫f dv = 0 (within 1e-8·∫|f|dv; otherwise
/// NotMeanZero). Cone bases: (φu')(s) = -∫_0^s fφ, integrated termwise as a cosine
/// series. Torus: Fourier division.
LaplaceSolution laplace_solve_radial(const Base& base, const RadialFunction& f, int grid = 256);

/// Second-order finite-volume solve of the same problem on a uniform grid (tridiagonal,
/// first node pinned, then shifted to mean zero). Cone bases only. Returns nodal values.
std::vector<double> laplace_solve_tridiagonal(const Base& base, const RadialFunction& f, int grid);

struct Uniformization {
  RadialFunction u;
  double target = 0.0;         ///< 4πχ/area
  double min_scal = 0.0;       ///< min over the grid of 2e^{-2u}(Δu + K)
  double max_rel_deviation = 0.0;  ///< max over the grid of |Scal_u e^{2u}/target - 1|
  double residual = 0.0;
};

/// Conformal change e^{2u}g of positive constant-times-e^{-2u} curvature: solves
/// Δu = 2πχ/area - K. ChiNotPositive unless χ > 0.
Uniformization uniformize_positive(const Base& base, int grid = 256);

struct MinimizerConfig {
  int grid = 64;
  int max_iterations = 4000;
  double step = 1e-2;        ///< first trial step
  double shrink = 0.5;       ///< Armijo backtracking factor
  double tolerance = 1e-10;  ///< stop when the relative decrease over `window` iterations is below this
  int window = 50;
  double u_floor = 1e-8;
  double initial_scale = 1.0;  ///< u₀ ≡ initial_scale unless an initial profile is given

  void validate() const;
};

struct MinimizerResult {
  double mu_upper = 0.0;           ///< final discrete functional value (an upper bound, not μ itself)
  double continuous_value = 0.0;   ///< conformal_functional at the interpolated u_star
  RadialFunction u_star;           ///< normalized to ∫2πℓu⁶dv = 1
  std::vector<double> trace;       ///< functional value after each accepted step; non-increasing
  int iterations = 0;
  bool converged = false;
};

/// Projected descent on the discretized conformal functional over radial u > 0,
/// with a Sobolev-preconditioned gradient, Armijo backtracking and renormalization
/// after each step. Returns best-so-far with converged = false on budget exhaustion.
MinimizerResult minimize_conformal(const InvariantMetric& metric, const MinimizerConfig& cfg = {});
MinimizerResult minimize_conformal(const InvariantMetric& metric, const MinimizerConfig& cfg,
                                   const RadialFunction& initial);

}  // namespace s1yamabe
