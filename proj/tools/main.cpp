#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "model.hpp"
#include "report.hpp"
#include "s1yamabe/conformal.hpp"
#include "s1yamabe/errors.hpp"
#include "s1yamabe/invariants.hpp"
#include "s1yamabe/scaling.hpp"
#include "s1yamabe/yamabe.hpp"

using namespace s1yamabe;
using namespace s1yamabe::cli;

namespace {

enum Exit { kOk = 0, kUsage = 2, kNumeric = 3, kCase = 4 };

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::NotCoprime:
    case ErrorCode::GridTooCoarse:
    case ErrorCode::ParseError:
      return kUsage;
    case ErrorCode::CaseII:
    case ErrorCode::CaseIII:
    case ErrorCode::InvalidCase:
    case ErrorCode::ChiNotPositive:
    case ErrorCode::ChiPositive:
      return kCase;
    default:
      return kNumeric;
  }
}

struct Options {
  int m1 = 0, m2 = 0;
  std::string model;
  std::string ell;
  std::string method;
  bool csv = false;
  std::string out;
  long long seed = 0;
  double tol = 0.0;
  bool hebey_vaugon = false;
  int n = 3;
  long long k = 0;
};

struct EllArg {
  bool scan = false;
  double value = 0.0;
  double lo = 0.0, hi = 0.0;
  int count = 0;
};

EllArg parse_ell_arg(const std::string& s) {
  EllArg a;
  auto to_double = [&](const std::string& t) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != t.size() || !std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, "--ell: bad number '" + t + "'");
    return v;
  };
  if (s.rfind("scan:", 0) == 0) {
    std::vector<std::string> parts;
    std::size_t start = 5;
    for (std::size_t p; (p = s.find(':', start)) != std::string::npos; start = p + 1) parts.push_back(s.substr(start, p - start));
    parts.push_back(s.substr(start));
    if (parts.size() != 3) throw Error(ErrorCode::InvalidArgument, "--ell: expected scan:lo:hi:n");
    a.scan = true;
    a.lo = to_double(parts[0]);
    a.hi = to_double(parts[1]);
    const double n = to_double(parts[2]);
    if (n != std::floor(n) || n < 1 || n > 100000) throw Error(ErrorCode::InvalidArgument, "--ell: n must be a positive integer");
    a.count = static_cast<int>(n);
    if (!(a.lo > 0) || !(a.hi >= a.lo)) throw Error(ErrorCode::InvalidArgument, "--ell: need 0 < lo <= hi");
    return a;
  }
  a.value = to_double(s);
  if (!(a.value > 0)) throw Error(ErrorCode::InvalidArgument, "--ell must be positive");
  return a;
}

Json ell_echo(const EllArg& a) {
  if (!a.scan) return a.value;
  Json j;
  j["lo"] = a.lo;
  j["hi"] = a.hi;
  j["n"] = a.count;
  return j;
}

// Propagated error of J_max = c·χ^{4/3}(area·‖Ω‖₂²)^{-1/3}.
double jmax_error(const BaseData& d, double jmax) {
  return std::abs(jmax) * (d.area_error / d.area + d.omega_L2_sq_error / d.omega_L2_sq) / 3.0;
}

void add_base_data(Report& r, const BaseData& d) {
  r.add("area", d.area, d.area_error, "quadrature");
  r.add_exact("chi", d.chi, "cone orders");
  r.add("omega_L2_sq", d.omega_L2_sq, d.omega_L2_sq_error, "quadrature");
  r.add("omega_L1", d.omega_L1, d.omega_L2_sq_error, "quadrature");
  r.add("chern_number", d.chern_number, d.omega_L2_sq_error, "quadrature");
}

Table scan_table(const ScanTable& t, const std::string& name) {
  Table out;
  out.name = name;
  Column ell{"ell", {}, std::nullopt, "input"};
  Column J{"J", {}, 0.0, "closed_form"};
  Column lower{"lower", {}, 0.0, "holder_lower_bound"};
  bool any_lower = false;
  for (const ScanRow& row : t.rows) {
    ell.values.push_back(row.ell);
    J.values.push_back(row.J);
    *J.error_estimate = std::max(*J.error_estimate, functional_J_closed_error(t.data, row.ell));
    lower.values.push_back(row.lower.value_or(std::nan("")));
    any_lower = any_lower || row.lower.has_value();
    out.flags.push_back(to_string(row.flag));
  }
  // The lower bound inherits the relative quadrature error of the norms entering it.
  if (any_lower) {
    double worst = 0.0;
    for (double v : lower.values)
      if (std::isfinite(v)) worst = std::max(worst, std::abs(v));
    *lower.error_estimate = worst * t.data.omega_L2_sq_error / std::max(t.data.omega_L2_sq, 1.0);
  }
  out.columns.push_back(std::move(ell));
  out.columns.push_back(std::move(J));
  if (any_lower) out.columns.push_back(std::move(lower));
  return out;
}

void add_fit(Report& r, const ScanTable& t) {
  if (t.exponent) {
    r.add_exact("fit_exponent", *t.exponent, "least_squares over the table");
    r.add_exact("fit_coefficient", *t.coefficient, "least_squares over the table");
  }
  if (t.regime == ScanFlag::SupZeroNotAttained) {
    try {
      const PowerFit low = fit_exponent(t, ScanColumn::lower);
      r.add_exact("fit_exponent_lower", low.exponent, "least_squares over the table");
      r.add_exact("fit_coefficient_lower", low.coefficient, "least_squares over the table");
    } catch (const Error&) {
    }
  }
}

std::vector<double> scan_values(const EllArg& a) { return log_grid(a.lo, a.hi, a.count); }

Report cmd_invariants(const Options& o) {
  const std::string method = o.method.empty() ? "all" : o.method;
  if (method != "all" && method != "closed" && method != "quadrature" && method != "boundary")
    throw Error(ErrorCode::InvalidArgument, "--method must be quadrature|closed|boundary|all");
  require_coprime(o.m1, o.m2);
  Report r("invariants", o.seed);
  r.set_input("m1", o.m1);
  r.set_input("m2", o.m2);
  r.set_input("method", method);
  const Rational c1 = c1_closed(o.m1, o.m2), chi = chi_closed(o.m1, o.m2);
  r.add_exact("c1", c1.value(), "closed_form " + c1.str());
  r.add_exact("chi", chi.value(), "closed_form " + chi.str());
  if (method == "all" || method == "quadrature") {
    const IntegralResult q = c1_quadrature(o.m1, o.m2);
    r.add("c1_quadrature", q.value, q.error_estimate, "quadrature");
    r.add("c1_quadrature_delta", q.value - c1.value(), q.error_estimate, "quadrature - closed_form");
    const IntegralResult x = chi_quadrature(o.m1, o.m2);
    r.add("chi_quadrature", x.value, x.error_estimate, "quadrature");
    r.add("chi_quadrature_delta", x.value - chi.value(), x.error_estimate, "quadrature - closed_form");
  }
  if (method == "all" || method == "boundary") {
    const LimitResult b = chi_boundary(o.m1, o.m2);
    r.add("chi_boundary", b.value, b.error_estimate, "boundary_limits");
    r.add("chi_boundary_delta", b.value - chi.value(), b.error_estimate, "boundary_limits - closed_form");
  }
  return r;
}

Report cmd_bound(const Options& o) {
  Report r("bound", o.seed);
  r.add_exact("sigma_S3", sigma_s3(), "closed_form");
  if (o.hebey_vaugon) {
    r.set_input("n", o.n);
    if (o.k > 0) r.set_input("k", o.k);
    const std::optional<long long> k = o.k > 0 ? std::optional<long long>(o.k) : std::nullopt;
    r.add_exact("sigma_Sn", sphere_yamabe_constant(o.n), "closed_form");
    r.add_exact("hebey_vaugon", hebey_vaugon_bound(o.n, k), k ? "closed_form" : "no finite orbit");
    return r;
  }
  if (!o.model.empty()) {
    const Model m = load_model(o.model);
    r.set_input("model", m.source);
    const BaseData d = base_data(m.base, m.F, m.quadrature);
    add_base_data(r, d);
    const double c1 = std::abs(d.chern_number) > 1e-12 ? d.chern_number : 0.0;
    const std::string label = case_label(d.chi, c1);
    r.add_label("case", label);
    if (label == "i") {
      r.add("theorem_main", bound_theorem_main(d.chi, c1),
            bound_theorem_main(d.chi, c1) * d.omega_L2_sq_error / (1.5 * std::abs(c1)), "measured chi, c1");
      const double cs = bound_cauchy_schwarz(d);
      r.add("cauchy_schwarz", cs, cs * 2.0 * d.omega_L2_sq_error / (3.0 * d.omega_L1), "measured norms");
      const OptimalEll opt = optimal_ell(d);
      r.add("ell_star", opt.ell_star, opt.ell_star * 0.5 * (d.omega_L2_sq_error / d.omega_L2_sq), "closed_form");
      r.add("J_max", opt.J_max, jmax_error(d, opt.J_max), "closed_form");
    } else if (label == "ii") {
      r.add_exact("sigma_S1_invariant", INFINITY, "case ii: J grows like ell^(2/3)");
    } else {
      r.add_exact("sigma_S1_invariant", 0.0, "case iii: collapse, supremum 0 not attained");
    }
    return r;
  }
  require_coprime(o.m1, o.m2);
  r.set_input("m1", o.m1);
  r.set_input("m2", o.m2);
  const Rational c1 = c1_closed(o.m1, o.m2), chi = chi_closed(o.m1, o.m2);
  r.add_label("case", case_label(chi.value(), c1.value()));
  r.add_exact("c1", c1.value(), "closed_form " + c1.str());
  r.add_exact("chi", chi.value(), "closed_form " + chi.str());
  r.add_exact("factor", std::pow((o.m1 + o.m2) / (2.0 * std::sqrt(double(o.m1) * o.m2)), 4.0 / 3.0),
              "((m1+m2)/(2 sqrt(m1 m2)))^(4/3)");
  r.add_exact("theorem_main", bound_theorem_main(chi.value(), c1.value()), "closed_form");
  r.add_exact("weighted_hopf", bound_weighted_hopf(o.m1, o.m2), "closed_form");
  return r;
}

Report cmd_functional(const Options& o) {
  if (o.model.empty()) throw Error(ErrorCode::InvalidArgument, "--model is required");
  const Model m = load_model(o.model);
  Report r("functional", o.seed);
  r.set_input("model", m.source);
  if (!o.ell.empty()) {
    const EllArg a = parse_ell_arg(o.ell);
    r.set_input("ell", ell_echo(a));
    if (a.scan) {
      const ScanTable t = ell_scan(m.base, m.F, scan_values(a));
      add_base_data(r, t.data);
      r.add_label("regime", to_string(t.regime));
      if (t.regime == ScanFlag::MaxInterior) {
        const OptimalEll opt = optimal_ell(t.data);
        r.add("ell_star", opt.ell_star, opt.ell_star * 0.5 * t.data.omega_L2_sq_error / t.data.omega_L2_sq, "closed_form");
        r.add("J_max", opt.J_max, jmax_error(t.data, opt.J_max), "closed_form");
        const auto best = std::max_element(t.rows.begin(), t.rows.end(),
                                           [](const ScanRow& x, const ScanRow& y) { return x.J < y.J; });
        r.add_exact("scan_argmax", best->ell, "grid");
      }
      add_fit(r, t);
      r.add_table(scan_table(t, "ell_scan"));
      return r;
    }
    const InvariantMetric metric = m.metric().with_ell(RadialFunction::constant(a.value));
    const YamabeReport y = functional_J(metric);
    r.add("J", y.J, y.error_estimate, "base_integral");
    r.add("J_total_space", y.J_total_space, y.error_estimate, "total_space");
    const BaseData d = base_data(m.base, m.F, m.quadrature);
    r.add("J_closed", functional_J_closed(d, a.value), functional_J_closed_error(d, a.value), "closed_form");
    return r;
  }
  const InvariantMetric metric = m.metric();
  const YamabeReport y = functional_J(metric);
  r.add("J", y.J, y.error_estimate, "base_integral");
  r.add("J_total_space", y.J_total_space, y.error_estimate, "total_space");
  const IntegralResult vol = volume_total(metric);
  r.add("volume", vol.value, vol.error_estimate, "quadrature");
  const BaseData d = base_data(m.base, m.F, m.quadrature);
  add_base_data(r, d);
  if (m.ell.is_constant())
    r.add("J_closed", functional_J_closed(d, m.ell.constant_value()), functional_J_closed_error(d, m.ell.constant_value()),
          "closed_form");
  if (d.chi > 0 && d.omega_L2_sq > 0) {
    const OptimalEll opt = optimal_ell(d);
    r.add("ell_star", opt.ell_star, opt.ell_star * 0.5 * d.omega_L2_sq_error / d.omega_L2_sq, "closed_form");
    r.add("J_max", opt.J_max, jmax_error(d, opt.J_max), "closed_form");
  }
  return r;
}

// Deterministic positive start: 1 + small random cosine modes.
RadialFunction seeded_start(const Base& base, long long seed) {
  if (seed == 0) return RadialFunction::constant(1.0);
  std::mt19937_64 rng(static_cast<unsigned long long>(seed));
  std::uniform_real_distribution<double> coef(-0.1, 0.1);
  std::vector<double> c(5);
  c[0] = 1.0;
  for (std::size_t i = 1; i < c.size(); ++i) c[i] = coef(rng);
  if (base.is_torus()) {
    // Fourier series are built from samples: evaluate the cosine modes on a grid.
    const int n = 16;
    std::vector<double> v(n);
    for (int j = 0; j < n; ++j) {
      v[j] = 0.0;
      for (std::size_t i = 0; i < c.size(); ++i) v[j] += c[i] * std::cos(2.0 * std::numbers::pi * i * j / n);
    }
    return RadialFunction::fourier(FourierSeries::interpolate(base.length(), v));
  }
  return RadialFunction::cosine(CosineSeries(base.length(), c));
}

Report cmd_minimize(const Options& o) {
  if (o.model.empty()) throw Error(ErrorCode::InvalidArgument, "--model is required");
  const Model m = load_model(o.model);
  Report r("minimize", o.seed);
  r.set_input("model", m.source);
  InvariantMetric metric = m.metric();
  if (!o.ell.empty()) {
    const EllArg a = parse_ell_arg(o.ell);
    if (a.scan) throw Error(ErrorCode::InvalidArgument, "minimize takes a single --ell value");
    r.set_input("ell", a.value);
    metric = metric.with_ell(RadialFunction::constant(a.value));
  }
  MinimizerConfig cfg;
  if (o.tol > 0) cfg.tolerance = o.tol;
  r.set_input("tolerance", cfg.tolerance);
  r.set_input("grid", cfg.grid);
  const MinimizerResult res = minimize_conformal(metric, cfg, seeded_start(m.base, o.seed));
  // Discrete upper bound: its quadrature error is the gap to the continuous evaluation.
  const double gap = std::isfinite(res.continuous_value) ? std::abs(res.mu_upper - res.continuous_value) : INFINITY;
  r.add("mu_upper", res.mu_upper, gap, "discrete minimizer (upper bound on the invariant Yamabe constant)");
  r.add("continuous_value", res.continuous_value, gap, "conformal functional at the interpolated minimizer");
  r.add_count("iterations", res.iterations, "count");
  r.add_label("converged", res.converged ? "true" : "false");
  const YamabeReport y = functional_J(metric);
  r.add("J_at_u_1", y.J, y.error_estimate, "base_integral");

  Table trace{"trace", {}, {}};
  Column it{"iteration", {}, std::nullopt, "count"};
  Column val{"value", {}, gap, "discrete functional"};
  for (std::size_t i = 0; i < res.trace.size(); ++i) {
    it.values.push_back(static_cast<double>(i));
    val.values.push_back(res.trace[i]);
  }
  trace.columns = {std::move(it), std::move(val)};
  r.add_table(std::move(trace));
  return r;
}

Report cmd_scan(const Options& o) {
  if (o.model.empty()) throw Error(ErrorCode::InvalidArgument, "--model is required");
  const Model m = load_model(o.model);
  const std::string method = o.method.empty() ? "closed" : o.method;
  if (method != "closed" && method != "collapse")
    throw Error(ErrorCode::InvalidArgument, "scan --method must be closed|collapse");
  Report r("scan", o.seed);
  r.set_input("model", m.source);
  r.set_input("method", method);
  const double chi = m.base.euler_characteristic();
  EllArg a;
  if (!o.ell.empty()) {
    a = parse_ell_arg(o.ell);
    if (!a.scan) a = EllArg{true, 0.0, a.value, a.value, 1};
  } else {
    a = chi > 0 ? EllArg{true, 0.0, 0.1, 10.0, 7} : EllArg{true, 0.0, 0.01, 1.0, 7};
  }
  r.set_input("ell", ell_echo(a));
  const std::vector<double> ells = scan_values(a);

  if (method == "collapse") {
    if (chi > 0) throw Error(ErrorCode::ChiPositive, "collapse needs a chi <= 0 base; chi = " + std::to_string(chi));
    Table t{"collapse", {}, {}};
    Column ell{"ell", {}, std::nullopt, "input"};
    Column lower{"lower", {}, 0.0, "holder_lower_bound"};
    Column mu{"mu_upper", {}, 0.0, "discrete minimizer"};
    Column upper{"upper", {}, 0.0, "closed_form"};
    const BaseData d = base_data(m.base, m.F, m.quadrature);
    MinimizerConfig cfg;
    if (o.tol > 0) cfg.tolerance = o.tol;
    bool all_hold = true;
    for (double l : ells) {
      const SandwichRow row = collapse_sandwich(m.base, m.F, l, cfg);
      ell.values.push_back(l);
      lower.values.push_back(row.lower);
      mu.values.push_back(row.mu_upper);
      upper.values.push_back(row.upper);
      *upper.error_estimate = std::max(*upper.error_estimate, functional_J_closed_error(d, l));
      t.flags.push_back(row.holds() ? "sandwich" : "violated");
      all_hold = all_hold && row.holds();
    }
    *mu.error_estimate = *upper.error_estimate;
    t.columns = {std::move(ell), std::move(lower), std::move(mu), std::move(upper)};
    r.add_label("sandwich_holds", all_hold ? "true" : "false");
    r.add_table(std::move(t));
    return r;
  }
  const ScanTable t = ell_scan(m.base, m.F, ells);
  add_base_data(r, t.data);
  r.add_label("regime", to_string(t.regime));
  add_fit(r, t);
  r.add_table(scan_table(t, "ell_scan"));
  return r;
}

Report cmd_laplace(const Options& o) {
  if (o.model.empty()) throw Error(ErrorCode::InvalidArgument, "--model is required");
  const Model m = load_model(o.model);
  Report r("laplace", o.seed);
  r.set_input("model", m.source);
  const Uniformization u = uniformize_positive(m.base);
  const IntegralResult area = m.base.integrate([](double) { return 1.0; }, m.quadrature);
  r.add("target", u.target, u.target * area.error_estimate / area.value, "4 pi chi / area");
  r.add("min_scal", u.min_scal, u.residual + u.target * u.max_rel_deviation, "2 exp(-2u)(Delta u + K) on the grid");
  r.add_exact("max_rel_deviation", u.max_rel_deviation, "grid maximum of the computed deviation");
  r.add_exact("residual", u.residual, "grid maximum of the computed |Delta u - f|");
  Table t{"conformal_factor", {}, {}};
  Column s{"s", {}, std::nullopt, "grid"};
  Column val{"u", {}, u.residual, "laplace_solve_radial"};
  Column scal{"scal", {}, u.residual, "2 exp(-2u)(Delta u + K)"};
  const int n = 64;
  const double L = m.base.length();
  for (int j = 0; j <= n; ++j) {
    const double x = L * j / n;
    s.values.push_back(x);
    val.values.push_back(u.u(x));
    scal.values.push_back(2.0 * std::exp(-2.0 * u.u(x)) * (m.base.laplacian(u.u, x) + m.base.curvature(x)));
  }
  t.columns = {std::move(s), std::move(val), std::move(scal)};
  r.add_table(std::move(t));
  return r;
}

int emit(const Report& r, const Options& o) {
  const std::string body = o.csv ? r.csv() : r.text();
  if (o.out.empty()) {
    std::cout << body;
    std::cout.flush();
    return std::cout ? kOk : kNumeric;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot write '" << o.out << "'\n";
    return kUsage;
  }
  f << body;
  return f ? kOk : kNumeric;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"S1-invariant Yamabe quantities on circle bundles over rotationally symmetric 2-orbifolds"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_flag("--csv", o.csv, "Emit the table as CSV");
    sub->add_option("--out", o.out, "Write the report to this file");
    sub->add_option("--seed", o.seed, "Seed for randomized starts (0: deterministic constant start)");
    sub->add_option("--tol", o.tol, "Minimizer tolerance on relative decrease")->check(CLI::PositiveNumber);
  };
  auto pair = [&](CLI::App* sub, bool required) {
    auto a = sub->add_option("--m1", o.m1, "Weight m1")->check(CLI::Range(1, 1000000));
    auto b = sub->add_option("--m2", o.m2, "Weight m2")->check(CLI::Range(1, 1000000));
    if (required) {
      a->required();
      b->required();
    }
  };

  auto* inv = app.add_subcommand("invariants", "First Chern number and orbifold Euler characteristic of CP1(m1,m2)");
  pair(inv, true);
  inv->add_option("--method", o.method, "quadrature|closed|boundary|all");
  common(inv);

  auto* bound = app.add_subcommand("bound", "Upper bounds on the S1-equivariant Yamabe invariant");
  pair(bound, false);
  bound->add_option("--model", o.model, "Model file");
  bound->add_flag("--hebey-vaugon", o.hebey_vaugon, "Equivariant sphere bound sigma(S^n) k^(2/n)");
  bound->add_option("--n", o.n, "Dimension for --hebey-vaugon");
  bound->add_option("--k", o.k, "Minimal orbit cardinality for --hebey-vaugon (omit: no finite orbit)");
  common(bound);

  auto* fn = app.add_subcommand("functional", "Einstein-Hilbert functional of a model");
  fn->add_option("--model", o.model, "Model file")->required();
  fn->add_option("--ell", o.ell, "Constant fiber length VALUE or scan:lo:hi:n");
  common(fn);

  auto* mn = app.add_subcommand("minimize", "Minimize the conformal functional over radial factors");
  mn->add_option("--model", o.model, "Model file")->required();
  mn->add_option("--ell", o.ell, "Constant fiber length override");
  common(mn);

  auto* sc = app.add_subcommand("scan", "Fiber-length scan");
  sc->add_option("--model", o.model, "Model file")->required();
  sc->add_option("--ell", o.ell, "scan:lo:hi:n (log spaced)");
  sc->add_option("--method", o.method, "closed|collapse");
  common(sc);

  auto* lp = app.add_subcommand("laplace", "Uniformize the base to positive curvature");
  lp->add_option("--model", o.model, "Model file")->required();
  common(lp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    Report r("", 0);
    if (inv->parsed()) r = cmd_invariants(o);
    else if (bound->parsed()) {
      if (!o.hebey_vaugon && o.model.empty() && (o.m1 == 0 || o.m2 == 0))
        throw Error(ErrorCode::InvalidArgument, "bound needs --m1/--m2, --model or --hebey-vaugon");
      r = cmd_bound(o);
    } else if (fn->parsed()) r = cmd_functional(o);
    else if (mn->parsed()) r = cmd_minimize(o);
    else if (sc->parsed()) r = cmd_scan(o);
    else r = cmd_laplace(o);
    return emit(r, o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumeric;
  }
}
