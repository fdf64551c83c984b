#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "oracle_values.hpp"
#include "random_fields.hpp"
#include "s1yamabe/errors.hpp"
#include "s1yamabe/yamabe.hpp"

using namespace s1yamabe;

namespace {
constexpr double kPi = std::numbers::pi;

InvariantMetric hopf(double ell = 1.0) {
  return InvariantMetric(Base(make_round_sphere(0.5)), RadialFunction::constant(ell), RadialFunction::constant(2.0));
}

InvariantMetric torus(double ell) {
  return InvariantMetric(Base(FlatTorusBase(1, 1)), RadialFunction::constant(ell), RadialFunction::constant(1.0));
}

template <class Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}
}  // namespace

TEST_CASE("sphere constants") {
  CHECK(sigma_s3() == doctest::Approx(oracle::sigma_s3).epsilon(1e-15));
  CHECK(sphere_yamabe_constant(3) == doctest::Approx(oracle::sigma_s3).epsilon(1e-14));
  CHECK(sphere_yamabe_constant(2) == doctest::Approx(oracle::sigma_s2).epsilon(1e-14));
  CHECK(sphere_volume(1) == doctest::Approx(2 * kPi).epsilon(1e-15));
  CHECK(sphere_volume(3) == doctest::Approx(2 * kPi * kPi).epsilon(1e-15));
  CHECK(sphere_volume(4) == doctest::Approx(8 * kPi * kPi / 3).epsilon(1e-15));
}

TEST_CASE("functional_J examples") {
  const YamabeReport h = functional_J(hopf());
  CHECK(h.J == doctest::Approx(oracle::sigma_s3).epsilon(1e-12));
  CHECK(h.J == doctest::Approx(h.numerator / h.denominator).epsilon(1e-12));
  CHECK(std::abs(h.J_total_space - h.J) <= 1e-8 * h.J);
  CHECK(functional_J(hopf(0.5)).J == doctest::Approx(oracle::berger_half).epsilon(1e-12));
  CHECK(functional_J(torus(1.0)).J == doctest::Approx(-oracle::torus_coefficient).epsilon(1e-12));
}

TEST_CASE("functional_J_closed examples") {
  const Base h(make_round_sphere(0.5));
  CHECK(functional_J_closed(h, RadialFunction::constant(2), 1.0) == doctest::Approx(oracle::sigma_s3).epsilon(1e-12));
  const Base t(FlatTorusBase(1, 1));
  CHECK(functional_J_closed(t, RadialFunction::constant(1), 0.1) ==
        doctest::Approx(oracle::torus_upper_0_1).epsilon(1e-12));
  // ℓ → 0⁺ with χ > 0: tends to 0 from above
  double prev = functional_J_closed(h, RadialFunction::constant(2), 1e-2);
  for (double l : {1e-3, 1e-4, 1e-6}) {
    const double v = functional_J_closed(h, RadialFunction::constant(2), l);
    CHECK(v > 0);
    CHECK(v < prev);
    prev = v;
  }
  CHECK(prev < 1e-2);
  CHECK(code_of([&] { functional_J_closed(h, RadialFunction::constant(2), 0.0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("route consistency and agreement with the closed form") {
  std::mt19937_64 rng(testing_fields::kSeed);
  const Base bases[] = {Base(make_round_sphere(0.5)), Base(wps_profile(1, 2)), Base(wps_profile(2, 3)),
                        Base(FlatTorusBase(1, 2))};
  for (const Base& b : bases) {
    for (int trial = 0; trial < 10; ++trial) {
      const double period = b.is_torus() ? b.length() / 2 : b.length();
      const RadialFunction F = testing_fields::random_cosine(rng, period, 0.5, 2.0);
      const RadialFunction ell = testing_fields::random_cosine(rng, period, 1.0, 0.4);
      // functional_J throws InconsistentRoutes on a route mismatch
      CHECK_NOTHROW(functional_J(InvariantMetric(b, ell, F)));
      for (double l : {0.3, 1.0, 2.5}) {
        const double closed = functional_J_closed(b, F, l);
        const double direct = functional_J(InvariantMetric(b, RadialFunction::constant(l), F)).J;
        CHECK(std::abs(closed - direct) <= 1e-8 * std::max(1.0, std::abs(closed)));
      }
    }
  }
}

TEST_CASE("scale invariance of J") {
  std::mt19937_64 rng(testing_fields::kSeed + 7);
  const Base b(wps_profile(2, 3));
  const InvariantMetric m(b, testing_fields::random_cosine(rng, b.length(), 1.0, 0.4),
                          testing_fields::random_cosine(rng, b.length(), 0.5, 2.0));
  const double J = functional_J(m).J;
  for (double c : {0.5, 2.0, 10.0}) CHECK(functional_J(m.scaled(c)).J == doctest::Approx(J).epsilon(1e-9));
}

TEST_CASE("conformal_functional") {
  std::mt19937_64 rng(testing_fields::kSeed + 11);
  const Base b(wps_profile(2, 3));
  const InvariantMetric m(b, testing_fields::random_cosine(rng, b.length(), 1.0, 0.4),
                          testing_fields::random_cosine(rng, b.length(), 0.5, 2.0));
  const double J = functional_J(m).J;
  CHECK(conformal_functional(m, RadialFunction::constant(1.0)) == doctest::Approx(J).epsilon(1e-10));
  CHECK(conformal_functional(m, RadialFunction::constant(7.0)) == doctest::Approx(J).epsilon(1e-10));

  const InvariantMetric h = hopf();
  const double L = h.base().length();
  const RadialFunction bump = RadialFunction::callable([L](double s) { return 1 + 0.1 * std::cos(kPi * s / L); },
                                                       [L](double s) { return -0.1 * kPi / L * std::sin(kPi * s / L); },
                                                       [L](double s) { return -0.1 * kPi * kPi / (L * L) * std::cos(kPi * s / L); });
  CHECK(conformal_functional(h, bump) >= oracle::sigma_s3 - 1e-6);
  for (int trial = 0; trial < 50; ++trial) {
    const RadialFunction u = testing_fields::random_cosine(rng, L, 1.0, 0.5, 8);
    CHECK(conformal_functional(h, u) >= oracle::sigma_s3 - 1e-6);
  }
  CHECK(code_of([&] { conformal_functional(h, RadialFunction::constant(-1.0)); }) == ErrorCode::NonPositiveU);
}

TEST_CASE("optimal_ell") {
  const Base h(make_round_sphere(0.5));
  const OptimalEll o = optimal_ell(h, RadialFunction::constant(2));
  CHECK(o.ell_star == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(o.J_max == doctest::Approx(oracle::sigma_s3).epsilon(1e-12));
  CHECK(o.ell_numeric == doctest::Approx(1.0).epsilon(1e-6));

  const OptimalEll w = optimal_ell(Base(wps_profile(2, 3)), wps_curvature_field(2, 3));
  CHECK(w.ell_star == doctest::Approx(oracle::wps_2_3_ell_star).epsilon(1e-9));
  CHECK(w.J_max == doctest::Approx(oracle::wps_2_3_jmax).epsilon(1e-9));
  CHECK(w.J_max <= bound_weighted_hopf(2, 3) + 1e-9);

  CHECK(code_of([&] { optimal_ell(h, RadialFunction::constant(0)); }) == ErrorCode::CaseII);
  CHECK(code_of([&] { optimal_ell(Base(FlatTorusBase(1, 1)), RadialFunction::constant(1)); }) == ErrorCode::CaseIII);
}

TEST_CASE("weighted Hopf curvature density") {
  CHECK(wps_curvature_density(1, 1, 0.3) == doctest::Approx(2.0).epsilon(1e-15));
  for (auto [m1, m2] : {std::pair{1, 2}, {2, 3}, {3, 5}, {7, 11}}) {
    for (int j = 1; j < 50; ++j) CHECK(wps_curvature_density(m1, m2, j / 50.0) > 0);
    const Base b(wps_profile(m1, m2));
    const NormReport n = omega_norms(InvariantMetric(b, RadialFunction::constant(1), wps_curvature_field(m1, m2)));
    CHECK(n.chern_number == doctest::Approx(1.0 / (m1 * m2)).epsilon(1e-6));
    CHECK_FALSE(n.warning.has_value());
  }
  CHECK(code_of([] { wps_curvature_density(2, 3, 0.0); }) == ErrorCode::DomainError);
  CHECK(code_of([] { wps_curvature_density(2, 3, 1.0); }) == ErrorCode::DomainError);
  CHECK(code_of([] { wps_curvature_density(2, 4, 0.5); }) == ErrorCode::NotCoprime);
}

TEST_CASE("oracle table of the weighted projective lines") {
  struct Row { int m1, m2; double area, chern, om2, om1, jmax, cs, main; };
  const Row rows[] = {
      {1, 1, oracle::wps_1_1_area, oracle::wps_1_1_chern, oracle::wps_1_1_om2, oracle::wps_1_1_om1, oracle::wps_1_1_jmax, oracle::wps_1_1_cs, oracle::wps_1_1_main},
      {1, 2, oracle::wps_1_2_area, oracle::wps_1_2_chern, oracle::wps_1_2_om2, oracle::wps_1_2_om1, oracle::wps_1_2_jmax, oracle::wps_1_2_cs, oracle::wps_1_2_main},
      {2, 3, oracle::wps_2_3_area, oracle::wps_2_3_chern, oracle::wps_2_3_om2, oracle::wps_2_3_om1, oracle::wps_2_3_jmax, oracle::wps_2_3_cs, oracle::wps_2_3_main},
      {3, 5, oracle::wps_3_5_area, oracle::wps_3_5_chern, oracle::wps_3_5_om2, oracle::wps_3_5_om1, oracle::wps_3_5_jmax, oracle::wps_3_5_cs, oracle::wps_3_5_main},
      {7, 11, oracle::wps_7_11_area, oracle::wps_7_11_chern, oracle::wps_7_11_om2, oracle::wps_7_11_om1, oracle::wps_7_11_jmax, oracle::wps_7_11_cs, oracle::wps_7_11_main},
  };
  for (const Row& r : rows) {
    CAPTURE(r.m1);
    CAPTURE(r.m2);
    const BaseData d = base_data(Base(wps_profile(r.m1, r.m2)), wps_curvature_field(r.m1, r.m2));
    CHECK(d.area == doctest::Approx(r.area).epsilon(1e-9));
    CHECK(d.chern_number == doctest::Approx(r.chern).epsilon(1e-8));
    CHECK(d.omega_L2_sq == doctest::Approx(r.om2).epsilon(1e-8));
    CHECK(d.omega_L1 == doctest::Approx(r.om1).epsilon(1e-8));
    CHECK(optimal_ell(d).J_max == doctest::Approx(r.jmax).epsilon(1e-8));
    CHECK(bound_cauchy_schwarz(d) == doctest::Approx(r.cs).epsilon(1e-8));
    CHECK(bound_weighted_hopf(r.m1, r.m2) == doctest::Approx(r.main).epsilon(1e-13));
    // positive F saturates the last inequality of the chain
    CHECK(bound_cauchy_schwarz(d) <= bound_weighted_hopf(r.m1, r.m2) * (1 + 1e-9));
    CHECK(bound_cauchy_schwarz(d) >= bound_weighted_hopf(r.m1, r.m2) * (1 - 1e-9));
  }
}

TEST_CASE("Cauchy-Schwarz bound") {
  const Base h(make_round_sphere(0.5));
  const BaseData d = base_data(h, RadialFunction::constant(2));
  CHECK(bound_cauchy_schwarz(d) == doctest::Approx(optimal_ell(d).J_max).epsilon(1e-9));
  // non-constant F with Chern number 1: F = 2 + 0.8 cos(2s) integrates to the same total
  const RadialFunction F = RadialFunction::callable([](double s) { return 2 + 0.8 * std::cos(2 * s); },
                                                    [](double s) { return -1.6 * std::sin(2 * s); },
                                                    [](double s) { return -3.2 * std::cos(2 * s); });
  const BaseData p = base_data(h, F);
  CHECK(p.chern_number == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(bound_cauchy_schwarz(p) > optimal_ell(p).J_max * (1 + 1e-6));
  CHECK(code_of([&] { bound_cauchy_schwarz(h, RadialFunction::constant(0)); }) == ErrorCode::CaseII);
  CHECK(code_of([&] { bound_cauchy_schwarz(Base(FlatTorusBase(1, 1)), RadialFunction::constant(1)); }) ==
        ErrorCode::CaseIII);
}

TEST_CASE("main and weighted Hopf bounds") {
  CHECK(bound_theorem_main(2, 1) == doctest::Approx(oracle::sigma_s3).epsilon(1e-14));
  CHECK(bound_theorem_main(1.5, 0.5) == doctest::Approx(oracle::wps_1_2_main).epsilon(1e-13));
  CHECK(bound_theorem_main(5.0 / 6, 1.0 / 6) == doctest::Approx(oracle::wps_2_3_main).epsilon(1e-13));
  CHECK(bound_weighted_hopf(1, 1) == doctest::Approx(oracle::sigma_s3).epsilon(1e-15));
  for (auto [m1, m2] : {std::pair{1, 2}, {2, 3}, {3, 5}, {7, 11}, {4, 9}}) {
    const Rational chi = chi_closed(m1, m2), c1 = c1_closed(m1, m2);
    CHECK(bound_weighted_hopf(m1, m2) == doctest::Approx(bound_theorem_main(chi.value(), c1.value())).epsilon(1e-12));
  }
  for (int m = 1; m <= 6; ++m)
    CHECK(bound_theorem_main(2.0 / m, 1.0 / (m * m)) == doctest::Approx(oracle::sigma_s3).epsilon(1e-14));
  CHECK(code_of([] { bound_theorem_main(0, 1); }) == ErrorCode::InvalidCase);
  CHECK(code_of([] { bound_theorem_main(2, 0); }) == ErrorCode::InvalidCase);
  CHECK(code_of([] { bound_weighted_hopf(2, 2); }) == ErrorCode::NotCoprime);
}

TEST_CASE("Hebey-Vaugon bound") {
  CHECK(hebey_vaugon_bound(3, 1) == doctest::Approx(oracle::sigma_s3).epsilon(1e-14));
  CHECK(hebey_vaugon_bound(3, 2) == doctest::Approx(oracle::hebey_vaugon_3_2).epsilon(1e-14));
  CHECK(hebey_vaugon_bound(3, std::nullopt) == std::numeric_limits<double>::infinity());
  CHECK(code_of([] { hebey_vaugon_bound(2, 1); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { hebey_vaugon_bound(3, 0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("case labels") {
  CHECK(case_label(2, 1) == "i");
  CHECK(case_label(2, 0) == "ii");
  CHECK(case_label(0, 1) == "iii");
  CHECK(to_string(BoundKind::cauchy_schwarz) == "cauchy_schwarz");
}

TEST_CASE("ordering chain over random radial data") {
  std::mt19937_64 rng(testing_fields::kSeed + 23);
  for (auto [m1, m2] : {std::pair{1, 1}, {1, 2}, {2, 3}}) {
    const Base b(wps_profile(m1, m2));
    const double chi = b.euler_characteristic();
    for (int trial = 0; trial < 40; ++trial) {
      const RadialFunction F = testing_fields::random_cosine(rng, b.length(), 1.0, 2.0);
      const RadialFunction ell = testing_fields::random_cosine(rng, b.length(), 1.0, 0.4);
      const InvariantMetric m(b, ell, F);
      const NormReport n = omega_norms(m);
      const ConstantFiberRepresentative rep = constant_fiber_representative(m);
      BaseData d;
      d.area = rep.area;
      d.chi = chi;
      d.omega_L2_sq = rep.omega_L2_sq;
      d.omega_L1 = n.omega_L1;
      const double main = bound_theorem_main(chi, n.chern_number);
      CHECK(rep.J <= rep.J_max * (1 + 1e-12));
      CHECK(rep.J_max <= bound_cauchy_schwarz(d) * (1 + 1e-9));
      CHECK(bound_cauchy_schwarz(d) <= main * (1 + 1e-9));
      // the representative lies in the conformal class of the metric
      const RadialFunction u = RadialFunction::callable(
          [&](double s) { return 1 / std::sqrt(ell(s)); },
          [&](double s) { return -0.5 * ell.d1(s) / (ell(s) * std::sqrt(ell(s))); },
          [&](double s) { const double l = ell(s); return (0.75 * ell.d1(s) * ell.d1(s) / l - 0.5 * ell.d2(s)) / (l * std::sqrt(l)); });
      CHECK(conformal_functional(m, u) == doctest::Approx(rep.J).epsilon(1e-8));
    }
  }
}
