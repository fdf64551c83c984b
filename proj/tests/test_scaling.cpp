#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracle_values.hpp"
#include "s1yamabe/errors.hpp"
#include "s1yamabe/scaling.hpp"

using namespace s1yamabe;

namespace {
constexpr double kPi = std::numbers::pi;

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

TEST_CASE("log grids") {
  const std::vector<double> g = log_grid(0.01, 1.0, 5);
  REQUIRE(g.size() == 5);
  CHECK(g.front() == doctest::Approx(0.01).epsilon(1e-15));
  CHECK(g[2] == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(g.back() == doctest::Approx(1.0).epsilon(1e-15));
  const std::vector<double> d = log_grid_per_decade(1.0, 1000.0);
  CHECK(d.size() == 10);
  CHECK(d[3] == doctest::Approx(10.0).epsilon(1e-14));
}

TEST_CASE("Hopf scan has its maximum at the interior point ell = 1") {
  const ScanTable t = ell_scan(Base(make_round_sphere(0.5)), RadialFunction::constant(2), log_grid(0.25, 4.0, 9));
  CHECK(t.regime == ScanFlag::MaxInterior);
  int flagged = 0;
  for (const ScanRow& r : t.rows) {
    if (r.flag != ScanFlag::MaxInterior) continue;
    ++flagged;
    CHECK(r.ell == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r.J == doctest::Approx(oracle::sigma_s3).epsilon(1e-12));
  }
  CHECK(flagged == 1);
  CHECK(to_string(ScanFlag::MaxInterior) == "MaxInterior");
}

TEST_CASE("case ii scan diverges with exponent 2/3") {
  const ScanTable t = ell_scan(Base(make_round_sphere(0.5)), RadialFunction::constant(0), {100.0, 1.0, 10.0, 1000.0});
  CHECK(t.regime == ScanFlag::DivergesAsEllGrows);
  for (std::size_t i = 1; i < t.rows.size(); ++i) {
    CHECK(t.rows[i].ell > t.rows[i - 1].ell);
    CHECK(t.rows[i].J > t.rows[i - 1].J);
  }
  // J = 16π(π/16)^{1/3}·2·ℓ^{2/3}
  CHECK(t.rows[0].J == doctest::Approx(32 * kPi * std::cbrt(kPi / 16)).epsilon(1e-12));
  CHECK(t.rows.back().J == doctest::Approx(oracle::case_ii_J_1000).epsilon(1e-12));
  CHECK(t.rows.back().J > 10 * oracle::sigma_s3);
  REQUIRE(t.exponent.has_value());
  CHECK(*t.exponent == doctest::Approx(2.0 / 3).epsilon(1e-10));
  CHECK_FALSE(t.rows[0].lower.has_value());
}

TEST_CASE("torus collapse scan") {
  const ScanTable t = ell_scan(Base(FlatTorusBase(1, 1)), RadialFunction::constant(1), {0.5, 0.1, 0.02, 0.004});
  CHECK(t.regime == ScanFlag::SupZeroNotAttained);
  CHECK(t.rows[0].ell == doctest::Approx(0.004));
  CHECK(t.rows[1].J == doctest::Approx(oracle::torus_upper_0_02).epsilon(1e-12));
  CHECK(t.rows[2].J == doctest::Approx(oracle::torus_upper_0_1).epsilon(1e-12));
  CHECK(t.rows[3].J == doctest::Approx(oracle::torus_upper_0_5).epsilon(1e-12));
  for (const ScanRow& r : t.rows) {
    CHECK(r.J < 0);
    REQUIRE(r.lower.has_value());
    CHECK(*r.lower <= r.J);
  }
  const PowerFit up = fit_exponent(t, ScanColumn::J);
  const PowerFit lo = fit_exponent(t, ScanColumn::lower);
  CHECK(std::abs(up.exponent - 8.0 / 3) <= 0.05);
  CHECK(std::abs(lo.exponent - 2.0 / 3) <= 0.05);
  CHECK(up.coefficient == doctest::Approx(oracle::torus_coefficient).epsilon(1e-9));
  CHECK(lo.coefficient == doctest::Approx(oracle::torus_coefficient).epsilon(1e-9));
}

TEST_CASE("collapse_bounds") {
  const Base t(FlatTorusBase(1, 1));
  const CollapseBounds b = collapse_bounds(t, RadialFunction::constant(1), 0.1);
  CHECK(b.upper == doctest::Approx(oracle::torus_upper_0_1).epsilon(1e-12));
  CHECK(b.lower == doctest::Approx(oracle::torus_lower_0_1).epsilon(1e-12));
  const CollapseBounds s = collapse_bounds(t, RadialFunction::constant(1), 0.01);
  CHECK(std::abs(s.upper) == doctest::Approx(std::abs(b.upper) * std::pow(0.1, 8.0 / 3)).epsilon(1e-10));
  CHECK(std::abs(s.lower) == doctest::Approx(std::abs(b.lower) * std::pow(0.1, 2.0 / 3)).epsilon(1e-10));
  const CollapseBounds z = collapse_bounds(t, RadialFunction::constant(0), 0.3);
  CHECK(z.upper == 0.0);
  CHECK(z.lower == 0.0);

  CHECK(code_of([] { collapse_bounds(Base(make_round_sphere(0.5)), RadialFunction::constant(2), 0.5); }) ==
        ErrorCode::ChiPositive);
  CHECK(code_of([&] { collapse_bounds(t, RadialFunction::constant(1), 2.0); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { collapse_bounds(t, RadialFunction::constant(1), 0.0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("fit_exponent") {
  ScanTable flat;
  for (double l : {1.0, 2.0, 4.0, 8.0}) flat.rows.push_back({l, 3.5, std::nullopt, ScanFlag::None});
  const PowerFit f = fit_exponent(flat);
  CHECK(std::abs(f.exponent) <= 1e-14);
  CHECK(f.coefficient == doctest::Approx(3.5).epsilon(1e-14));

  ScanTable few;
  for (double l : {1.0, 2.0, 3.0}) few.rows.push_back({l, 1.0, std::nullopt, ScanFlag::None});
  CHECK(code_of([&] { fit_exponent(few); }) == ErrorCode::DegenerateData);
  ScanTable zero = flat;
  zero.rows[2].J = 0.0;
  CHECK(code_of([&] { fit_exponent(zero); }) == ErrorCode::DegenerateData);
  CHECK(code_of([&] { fit_exponent(flat, ScanColumn::lower); }) == ErrorCode::DegenerateData);
  ScanTable same;
  for (int i = 0; i < 5; ++i) same.rows.push_back({2.0, 1.0 + i, std::nullopt, ScanFlag::None});
  CHECK(code_of([&] { fit_exponent(same); }) == ErrorCode::DegenerateData);
}

TEST_CASE("collapse sandwich on the torus") {
  for (double l : {0.5, 0.1, 0.02}) {
    CAPTURE(l);
    const SandwichRow r = collapse_sandwich(Base(FlatTorusBase(1, 1)), RadialFunction::constant(1), l);
    CHECK(r.holds());
    CHECK(r.lower < r.upper);
  }
}
