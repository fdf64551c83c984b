#include "s1yamabe/conformal.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "s1yamabe/errors.hpp"
#include "s1yamabe/yamabe.hpp"

namespace s1yamabe {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;

// M_k = ∫_0^L cos(kπs/L) φ(s) ds for k = 0..kmax, exact for the sine-series profile.
std::vector<double> cosine_phi_moments(const ConeSurfaceProfile& p, int kmax) {
  const std::vector<double>& b = p.series().coefficients();
  const double L = p.length();
  std::vector<double> M(kmax + 1, 0.0);
  for (int k = 0; k <= kmax; ++k) {
    double sum = 0.0;
    for (std::size_t i = 0; i < b.size(); ++i) {
      const long m = static_cast<long>(i) + 1;
      if (m == k || (m + k) % 2 == 0) continue;
      sum += b[i] * 2.0 * m / (double(m) * m - double(k) * k);
    }
    M[k] = L / kPi * sum;
  }
  return M;
}

// ∫_a^b f̃φ with a fixed 16-point Gauss rule (cells are short and the integrand smooth).
double cell_integral(const GaussRule& rule, const ScalarFn& g, double a, double b) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * g(mid + half * rule.nodes[i]);
  return half * sum;
}

struct MeanCheck {
  double mean;  // (1/area)∫f dv
};

MeanCheck require_mean_zero(const Base& base, const RadialFunction& f) {
  const QuadratureConfig cfg = default_base_quadrature();
  const double total = base.integrate([&](double s) { return f(s); }, cfg).value;
  const double abs_total = integrate_abs(base, [&](double s) { return f(s); }, cfg).value;
  const double a = area(base, cfg);
  // Floor: f that vanishes up to rounding has no meaningful relative mean.
  if (std::abs(total) > 1e-8 * std::max(abs_total, 1e-6 * a))
    throw Error(ErrorCode::NotMeanZero, "integral of f is " + std::to_string(total) + " (|f| integrates to " +
                                            std::to_string(abs_total) + ")");
  return {total / a};
}

double grid_residual(const Base& base, const RadialFunction& u, const ScalarFn& f, int grid) {
  double worst = 0.0;
  for (int j = 0; j <= grid; ++j) {
    const double s = base.length() * j / grid;
    worst = std::max(worst, std::abs(base.laplacian(u, s) - f(s)));
  }
  return worst;
}

}  // namespace

LaplaceSolution laplace_solve_radial(const Base& base, const RadialFunction& f, int grid) {
  if (grid < 4) throw Error(ErrorCode::GridTooCoarse, "grid must be at least 4");
  const double mean_f = require_mean_zero(base, f).mean;
  const ScalarFn centered = [&](double s) { return f(s) - mean_f; };
  const double L = base.length();
  LaplaceSolution out;

  if (base.is_torus()) {
    std::vector<double> samples(grid);
    for (int j = 0; j < grid; ++j) samples[j] = centered(L * j / grid);
    const FourierSeries fs = FourierSeries::interpolate(L, samples);
    std::vector<double> a = fs.cos_coefficients(), b = fs.sin_coefficients();
    a[0] = 0.0;
    for (std::size_t k = 1; k < a.size(); ++k) {
      const double w = kTwoPi * static_cast<double>(k) / L;
      a[k] /= w * w;
      b[k] /= w * w;
    }
    out.u = RadialFunction::fourier(FourierSeries(L, std::move(a), std::move(b)));
  } else {
    const ConeSurfaceProfile& p = *base.profile();
    const GaussRule rule = gauss_legendre(16);
    const ScalarFn flux_density = [&](double s) { return centered(s) * p.phi(s); };
    // G(s) = ∫_0^s f̃φ, accumulated from the nearer pole (the total vanishes).
    std::vector<double> G(grid + 1, 0.0);
    const int half = grid / 2;
    for (int j = 1; j <= half; ++j) G[j] = G[j - 1] + cell_integral(rule, flux_density, L * (j - 1) / grid, L * j / grid);
    std::vector<double> tail(grid + 1, 0.0);
    for (int j = grid - 1; j > half; --j)
      tail[j] = tail[j + 1] + cell_integral(rule, flux_density, L * j / grid, L * (j + 1) / grid);
    for (int j = half + 1; j < grid; ++j) G[j] = -tail[j];
    std::vector<double> du(grid + 1, 0.0);
    for (int j = 1; j < grid; ++j) du[j] = -G[j] / p.phi(L * j / grid);
    const SineSeries derivative = SineSeries::interpolate(L, du);
    std::vector<double> c = derivative.antiderivative_cosine_coeffs();
    const std::vector<double> M = cosine_phi_moments(p, static_cast<int>(c.size()) - 1);
    double moment = 0.0;
    for (std::size_t k = 1; k < c.size(); ++k) moment += c[k] * M[k];
    c[0] = -moment / M[0];
    std::vector<double> s(grid + 1), values(grid + 1);
    CosineSeries series(L, std::move(c));
    for (int j = 0; j <= grid; ++j) s[j] = L * j / grid, values[j] = series.value(s[j]);
    out.u = RadialFunction::cosine(std::move(series)).with_samples(std::move(s), std::move(values), true);
  }
  out.residual = grid_residual(base, out.u, centered, grid);
  out.mean = base.integrate([&](double s) { return out.u(s); }, default_base_quadrature()).value /
             area(base, default_base_quadrature());
  return out;
}

std::vector<double> laplace_solve_tridiagonal(const Base& base, const RadialFunction& f, int grid) {
  const ConeSurfaceProfile* p = base.profile();
  if (!p) throw Error(ErrorCode::InvalidArgument, "the finite-volume solver handles cone bases");
  if (grid < 4) throw Error(ErrorCode::GridTooCoarse, "grid must be at least 4");
  const double mean_f = require_mean_zero(base, f).mean;
  const double L = p->length(), h = L / grid;
  // Unknowns u_1..u_N with u_0 = 0.
  const int n = grid;
  std::vector<double> lower(n - 1), diag(n), upper(n - 1), rhs(n);
  for (int j = 1; j <= grid; ++j) {
    const int row = j - 1;
    const double left = p->phi((j - 0.5) * h);
    const double right = (j < grid) ? p->phi((j + 0.5) * h) : 0.0;
    const double cell = (j < grid) ? p->phi(j * h) * h : p->phi(L - 0.25 * h) * 0.5 * h;
    diag[row] = (left + right) / h;
    if (row > 0) lower[row - 1] = -left / h;
    if (j < grid) upper[row] = -right / h;
    rhs[row] = (f(j * h) - mean_f) * cell;
  }
  std::vector<double> x = solve_tridiagonal(lower, diag, upper, rhs);
  std::vector<double> u(grid + 1, 0.0);
  for (int j = 1; j <= grid; ++j) u[j] = x[j - 1];
  double num = 0.0, den = 0.0;
  for (int j = 0; j <= grid; ++j) {
    const double w = (j == 0 || j == grid) ? 0.5 : 1.0;
    num += w * u[j] * p->phi(j * h);
    den += w * p->phi(j * h);
  }
  for (double& v : u) v -= num / den;
  return u;
}

Uniformization uniformize_positive(const Base& base, int grid) {
  const double chi = base.euler_characteristic();
  if (!(chi > 0)) throw Error(ErrorCode::ChiNotPositive, "uniformization to positive curvature needs chi > 0");
  const ConeSurfaceProfile& p = *base.profile();
  const double A = area(base);
  const double c = 2.0 * kPi * chi / A;
  const double L = p.length();
  std::vector<double> f(grid + 1);
  for (int j = 0; j <= grid; ++j) f[j] = c - p.curvature(L * j / grid);
  const RadialFunction rhs = RadialFunction::cosine(CosineSeries::interpolate(L, f));
  const LaplaceSolution sol = laplace_solve_radial(base, rhs, grid);

  Uniformization out;
  out.u = sol.u;
  out.residual = sol.residual;
  out.target = 2.0 * c;
  out.min_scal = std::numeric_limits<double>::infinity();
  for (int j = 0; j <= grid; ++j) {
    const double s = L * j / grid;
    const double u = sol.u(s);
    const double scal = 2.0 * std::exp(-2.0 * u) * (base.laplacian(sol.u, s) + p.curvature(s));
    out.min_scal = std::min(out.min_scal, scal);
    out.max_rel_deviation = std::max(out.max_rel_deviation, std::abs(scal * std::exp(2.0 * u) / out.target - 1.0));
  }
  return out;
}

void MinimizerConfig::validate() const {
  if (grid < 4) throw Error(ErrorCode::InvalidArgument, "minimizer grid must be at least 4");
  if (max_iterations < 1 || window < 1) throw Error(ErrorCode::InvalidArgument, "iteration counts must be positive");
  if (!(step > 0) || !(shrink > 0 && shrink < 1)) throw Error(ErrorCode::InvalidArgument, "bad step or shrink");
  if (!(tolerance > 0 && tolerance < 1)) throw Error(ErrorCode::InvalidArgument, "tolerance must lie in (0,1)");
  if (!(u_floor > 0) || !(initial_scale > 0)) throw Error(ErrorCode::InvalidArgument, "u_floor and scale must be positive");
}

namespace {

// Nodal unknowns, but the functional is evaluated on the trigonometric interpolant by
// composite Gauss quadrature. Evaluating only at the nodes leaves the Nyquist mode
// with zero spectral derivative there, and the descent exploits it.
struct Discretization {
  std::vector<double> nodes;
  Eigen::MatrixXd E;    // interpolant values at quadrature points
  Eigen::MatrixXd E1;   // interpolant derivatives at quadrature points
  std::vector<double> points;
  Eigen::VectorXd weights;  // 2π·Gauss weight·φ at quadrature points
  bool periodic = false;
  double length = 0.0;

  RadialFunction interpolant(const Eigen::VectorXd& u) const {
    std::vector<double> v(u.data(), u.data() + u.size());
    if (periodic) return RadialFunction::fourier(FourierSeries::interpolate(length, v)).with_samples(nodes, v, false);
    return RadialFunction::cosine(CosineSeries::interpolate(length, v)).with_samples(nodes, v, false);
  }
};

Discretization discretize(const Base& base, int grid) {
  Discretization d;
  d.length = base.length();
  d.periodic = base.is_torus();
  const int n = d.periodic ? grid : grid + 1;
  d.nodes.resize(n);
  for (int j = 0; j < n; ++j) d.nodes[j] = d.length * j / grid;

  const GaussRule rule = gauss_legendre(8);
  const int cells = 2 * grid;
  const int q = cells * static_cast<int>(rule.nodes.size());
  d.points.resize(q);
  d.weights.resize(q);
  const double h = d.length / cells;
  for (int c = 0, k = 0; c < cells; ++c)
    for (std::size_t i = 0; i < rule.nodes.size(); ++i, ++k) {
      const double s = h * (c + 0.5 + 0.5 * rule.nodes[i]);
      d.points[k] = s;
      d.weights[k] = kTwoPi * 0.5 * h * rule.weights[i] * base.phi(s);
    }

  d.E.resize(q, n);
  d.E1.resize(q, n);
  std::vector<double> unit(n, 0.0);
  for (int j = 0; j < n; ++j) {
    unit[j] = 1.0;
    const RadialFunction card = d.periodic ? RadialFunction::fourier(FourierSeries::interpolate(d.length, unit))
                                           : RadialFunction::cosine(CosineSeries::interpolate(d.length, unit));
    for (int k = 0; k < q; ++k) {
      d.E(k, j) = card(d.points[k]);
      d.E1(k, j) = card.d1(d.points[k]);
    }
    unit[j] = 0.0;
  }
  return d;
}

struct Functional {
  const Discretization& disc;
  Eigen::VectorXd omega;  // 2πℓ·area weight at quadrature points
  Eigen::VectorXd scal;

  double numerator(const Eigen::VectorXd& u) const {
    const Eigen::ArrayXd v = (disc.E * u).array(), dv = (disc.E1 * u).array();
    return (omega.array() * (8.0 * dv.square() + scal.array() * v.square())).sum();
  }
  double denominator_sixth(const Eigen::VectorXd& u) const {
    return (omega.array() * (disc.E * u).array().pow(6)).sum();
  }
  double value(const Eigen::VectorXd& u) const { return numerator(u) / std::cbrt(denominator_sixth(u)); }

  Eigen::VectorXd gradient(const Eigen::VectorXd& u) const {
    const Eigen::ArrayXd v = (disc.E * u).array(), dv = (disc.E1 * u).array();
    const double A = numerator(u), B = denominator_sixth(u);
    const Eigen::VectorXd gA = 2.0 * (8.0 * disc.E1.transpose() * (omega.array() * dv).matrix() +
                                      disc.E.transpose() * (omega.array() * scal.array() * v).matrix());
    const Eigen::VectorXd gB = 6.0 * disc.E.transpose() * (omega.array() * v.pow(5)).matrix();
    return gA / std::cbrt(B) - (A / 3.0) * std::pow(B, -4.0 / 3.0) * gB;
  }
};

}  // namespace

MinimizerResult minimize_conformal(const InvariantMetric& metric, const MinimizerConfig& cfg) {
  return minimize_conformal(metric, cfg, RadialFunction::constant(cfg.initial_scale));
}

MinimizerResult minimize_conformal(const InvariantMetric& metric, const MinimizerConfig& cfg,
                                   const RadialFunction& initial) {
  cfg.validate();
  const Discretization disc = discretize(metric.base(), cfg.grid);
  const int n = static_cast<int>(disc.nodes.size());
  const int nq = static_cast<int>(disc.points.size());
  Functional J{disc, Eigen::VectorXd(nq), Eigen::VectorXd(nq)};
  for (int k = 0; k < nq; ++k) {
    const double s = disc.points[k];
    J.omega[k] = kTwoPi * metric.ell()(s) * disc.weights[k];
    J.scal[k] = scalar_curvature_closed(metric, s);
  }
  Eigen::VectorXd u(n);
  for (int j = 0; j < n; ++j) {
    u[j] = initial(disc.nodes[j]);
    if (!(u[j] > 0)) throw Error(ErrorCode::NonPositiveU, "initial u must be positive");
  }
  // Sobolev preconditioner: mass + 8·stiffness, fixed for the run.
  const Eigen::VectorXd mass = J.omega.cwiseAbs();
  const Eigen::MatrixXd P =
      disc.E.transpose() * mass.asDiagonal() * disc.E + 8.0 * disc.E1.transpose() * mass.asDiagonal() * disc.E1;
  const Eigen::LDLT<Eigen::MatrixXd> solver(P);

  auto normalize = [&](Eigen::VectorXd& v) { v /= std::pow(J.denominator_sixth(v), 1.0 / 6.0); };
  normalize(u);
  double q = J.value(u);
  MinimizerResult out;
  out.trace.push_back(q);
  double alpha = cfg.step;
  for (int iter = 0; iter < cfg.max_iterations; ++iter) {
    out.iterations = iter + 1;
    const Eigen::VectorXd g = J.gradient(u);
    const Eigen::VectorXd dir = -solver.solve(g);
    if (-g.dot(dir) <= 1e-30 * (1.0 + q * q)) {
      out.converged = true;
      break;
    }
    bool accepted = false;
    Eigen::VectorXd trial;
    double q_trial = q;
    while (alpha > 1e-14) {
      trial = (u + alpha * dir).cwiseMax(cfg.u_floor);
      q_trial = J.value(trial);
      if (q_trial <= q - 1e-4 * g.dot(u - trial)) {
        accepted = true;
        break;
      }
      alpha *= cfg.shrink;
    }
    if (!accepted) {
      out.converged = true;  // no descent available at working precision
      break;
    }
    normalize(trial);
    u = trial;
    q = std::min(q_trial, J.value(u));
    out.trace.push_back(q);
    alpha = std::min(alpha * 2.0, 1e3 * cfg.step);
    const std::size_t len = out.trace.size();
    if (len > static_cast<std::size_t>(cfg.window) &&
        out.trace[len - 1 - cfg.window] - out.trace[len - 1] <= cfg.tolerance * std::abs(out.trace[len - 1])) {
      out.converged = true;
      break;
    }
  }
  out.mu_upper = q;
  out.u_star = disc.interpolant(u);
  try {
    out.continuous_value = conformal_functional(metric, out.u_star);
  } catch (const Error&) {
    out.continuous_value = std::numeric_limits<double>::quiet_NaN();
  }
  return out;
}

}  // namespace s1yamabe
