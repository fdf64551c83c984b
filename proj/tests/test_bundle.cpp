#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "random_fields.hpp"
#include "s1yamabe/bundle.hpp"
#include "s1yamabe/errors.hpp"

using namespace s1yamabe;

namespace {
constexpr double kPi = std::numbers::pi;

InvariantMetric hopf(double ell = 1.0) {
  return InvariantMetric(Base(make_round_sphere(0.5)), RadialFunction::constant(ell), RadialFunction::constant(2.0));
}
}  // namespace

TEST_CASE("scalar curvature of the Hopf, Berger and torus models") {
  const InvariantMetric h = hopf();
  for (int j = 1; j < 20; ++j) CHECK(scalar_curvature_total(h, h.base().length() * j / 20) == doctest::Approx(6.0).epsilon(1e-12));
  for (double l : {0.25, 0.5, 2.0}) {
    const InvariantMetric b = hopf(l);
    CHECK(scalar_curvature_total(b, 0.7) == doctest::Approx(8.0 - 2 * l * l).epsilon(1e-12));
  }
  const InvariantMetric t(Base(FlatTorusBase(1, 1)), RadialFunction::constant(0.3), RadialFunction::constant(1.0));
  CHECK(scalar_curvature_total(t, 0.4) == doctest::Approx(-0.045).epsilon(1e-14));
}

TEST_CASE("scalar_curvature_total is defined on the open interval only") {
  const InvariantMetric h = hopf();
  try {
    scalar_curvature_total(h, 0.0);
    FAIL("expected DomainError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DomainError);
  }
  CHECK(scalar_curvature_closed(h, 0.0) == doctest::Approx(6.0).epsilon(1e-12));
}

TEST_CASE("norms of the Hopf and torus models") {
  const NormReport h = omega_norms(hopf());
  CHECK(h.omega_L2_sq == doctest::Approx(8 * kPi).epsilon(1e-12));
  CHECK(h.omega_L1 == doctest::Approx(2 * std::sqrt(2.0) * kPi).epsilon(1e-12));
  CHECK(h.chern_number == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(h.scal_L32 == doctest::Approx(8.0 * std::cbrt(kPi * kPi)).epsilon(1e-12));
  CHECK_FALSE(h.warning.has_value());
  const NormReport t =
      omega_norms(InvariantMetric(Base(FlatTorusBase(1, 1)), RadialFunction::constant(1), RadialFunction::constant(1)));
  CHECK(t.chern_number == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(t.omega_L2_sq == doctest::Approx(4 * kPi).epsilon(1e-14));
  CHECK(t.scal_L32 == 0.0);
  const NormReport z = omega_norms(InvariantMetric(Base(make_round_sphere(0.5)), RadialFunction::constant(1),
                                                   RadialFunction::constant(0)));
  CHECK(z.omega_L1 == 0.0);
  CHECK(z.omega_L2_sq == 0.0);
  CHECK(z.omega_L3_sq == 0.0);
  CHECK(z.chern_number == 0.0);
}

TEST_CASE("non-integral Chern numbers raise a warning") {
  const NormReport r = omega_norms(
      InvariantMetric(Base(make_round_sphere(0.5)), RadialFunction::constant(1), RadialFunction::constant(1.0)));
  CHECK(r.chern_number == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(r.warning.has_value());
}

TEST_CASE("total volume") {
  CHECK(volume_total(hopf()).value == doctest::Approx(2 * kPi * kPi).epsilon(1e-12));
  const InvariantMetric t(Base(FlatTorusBase(1, 1)), RadialFunction::constant(1), RadialFunction::constant(1));
  CHECK(volume_total(t).value == doctest::Approx(4 * kPi * kPi).epsilon(1e-14));
  for (double c : {0.5, 3.0})
    CHECK(volume_total(hopf(c)).value == doctest::Approx(c * 2 * kPi * kPi).epsilon(1e-12));
}

TEST_CASE("metric validation") {
  const Base b(make_round_sphere(0.5));
  CHECK_THROWS_AS(InvariantMetric(b, RadialFunction::constant(0.0), RadialFunction::constant(1)), Error);
  CHECK_THROWS_AS(InvariantMetric(b, RadialFunction::constant(-1.0), RadialFunction::constant(1)), Error);
  // ℓ with nonzero slope at the poles is not smooth on the total space
  const RadialFunction slope = RadialFunction::callable([](double s) { return 1 + s; }, [](double) { return 1.0; },
                                                        [](double) { return 0.0; });
  CHECK_THROWS_AS(InvariantMetric(b, slope, RadialFunction::constant(1)), Error);
  CHECK_THROWS_AS(InvariantMetric(b, RadialFunction::constant(1), slope), Error);
  // on a torus the data must close up
  const Base t(FlatTorusBase(1, 1));
  const RadialFunction open_ended = RadialFunction::callable([](double s) { return 2 + std::cos(kPi * s); },
                                                             [](double s) { return -kPi * std::sin(kPi * s); },
                                                             [](double s) { return -kPi * kPi * std::cos(kPi * s); });
  CHECK_THROWS_AS(InvariantMetric(t, open_ended, RadialFunction::constant(1)), Error);
  CHECK_NOTHROW(InvariantMetric(t, RadialFunction::constant(1), RadialFunction::callable(
      [](double s) { return std::cos(2 * kPi * s); }, [](double s) { return -2 * kPi * std::sin(2 * kPi * s); },
      [](double s) { return -4 * kPi * kPi * std::cos(2 * kPi * s); })));
}

TEST_CASE("properties over random radial data") {
  std::mt19937_64 rng(testing_fields::kSeed);
  const Base bases[] = {Base(make_round_sphere(0.5)), Base(wps_profile(2, 3)), Base(make_bump_sphere(1.0, 0.3))};
  for (const Base& b : bases) {
    const double L = b.length();
    for (int trial = 0; trial < 20; ++trial) {
      const RadialFunction ell = testing_fields::random_cosine(rng, L, 1.0, 0.4);
      const RadialFunction F = testing_fields::random_cosine(rng, L, 0.5, 2.0);
      const InvariantMetric m(b, ell, F);
      const NormReport n = omega_norms(m);
      // Cauchy-Schwarz step
      CHECK(n.omega_L1 >= 2 * std::sqrt(2.0) * kPi * std::abs(n.chern_number) - 1e-9);

      // the two displayed forms of the submersion formula agree
      const RadialFunction log_ell = RadialFunction::callable(
          [&](double s) { return std::log(ell(s)); }, [&](double s) { return ell.d1(s) / ell(s); },
          [&](double s) { const double q = ell.d1(s) / ell(s); return ell.d2(s) / ell(s) - q * q; });
      for (int j = 1; j < 10; ++j) {
        const double s = L * j / 10;
        const double l = ell(s), f = F(s), dl = ell.d1(s);
        const double log_form =
            2 * b.curvature(s) - 0.5 * l * l * f * f + 2 * b.laplacian(log_ell, s) - 2 * dl * dl / (l * l);
        const double scal = scalar_curvature_total(m, s);
        CHECK(std::abs(log_form - scal) <= 1e-9 * std::max(1.0, std::abs(scal)));
      }

      // divergence theorem: ∫ (2Δℓ/ℓ)·ℓ dv = 0
      const IntegralResult div = m.integrate([&](double s) { return 2 * b.laplacian(ell, s); });
      const IntegralResult mag = integrate_abs(b, [&](double s) { return 2 * b.laplacian(ell, s); }, default_base_quadrature());
      CHECK(std::abs(div.value) <= 1e-10 * std::max(1.0, mag.value));
    }
  }
}

TEST_CASE("scaling multiplies Scal by c^-2") {
  std::mt19937_64 rng(testing_fields::kSeed + 1);
  const Base b(wps_profile(2, 3));
  const InvariantMetric m(b, testing_fields::random_cosine(rng, b.length(), 1.0, 0.4),
                          testing_fields::random_cosine(rng, b.length(), 0.5, 2.0));
  for (double c : {0.5, 2.0, 10.0}) {
    const InvariantMetric sc = m.scaled(c);
    for (int j = 1; j < 8; ++j) {
      const double s = b.length() * j / 8;
      const double want = scalar_curvature_total(m, s) / (c * c);
      CHECK(scalar_curvature_total(sc, c * s) == doctest::Approx(want).epsilon(1e-10));
    }
  }
}

TEST_CASE("integrate_abs splits at sign changes") {
  const Base b(make_round_sphere(0.5));
  // ∫|cos 2s| dv over S²(1/2): 2π∫|cos 2s|·sin(2s)/2 ds = π/2
  const IntegralResult r = integrate_abs(b, [](double s) { return std::cos(2 * s); }, default_base_quadrature());
  CHECK(r.value == doctest::Approx(kPi / 2).epsilon(1e-12));
}
