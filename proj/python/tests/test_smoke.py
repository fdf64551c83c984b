import math

import pytest

import s1yamabe as sy

SIGMA_S3 = 3 * 2 ** (5 / 3) * math.pi ** (4 / 3)


def hopf(ell=1.0):
    return sy.InvariantMetric(sy.Base.round_sphere(0.5), sy.RadialFunction.constant(ell), sy.RadialFunction.constant(2.0))


def test_invariants():
    assert sy.c1_closed(2, 3) == (1, 6)
    assert sy.chi_closed(2, 3) == (5, 6)
    assert sy.c1_quadrature(7, 11)["value"] == pytest.approx(1 / 77, rel=1e-10)
    assert sy.chi_boundary(3, 5)[0] == pytest.approx(8 / 15, abs=1e-8)
    assert sy.kappa(1, 1, 0.4) == pytest.approx(4.0, abs=1e-10)


def test_not_coprime_raises_with_code():
    with pytest.raises(sy.Error) as info:
        sy.c1_closed(2, 4)
    assert info.value.code == "NotCoprime"


def test_hopf_functional():
    assert sy.functional_J(hopf())["J"] == pytest.approx(SIGMA_S3, rel=1e-12)
    assert sy.sigma_s3() == pytest.approx(SIGMA_S3, rel=1e-15)
    assert sy.scalar_curvature(hopf(), 0.3) == pytest.approx(6.0, rel=1e-12)
    ell_star, jmax = sy.optimal_ell(sy.Base.round_sphere(0.5), sy.RadialFunction.constant(2.0))
    assert ell_star == pytest.approx(1.0, rel=1e-12)
    assert jmax == pytest.approx(SIGMA_S3, rel=1e-12)


def test_bounds():
    assert sy.bound_weighted_hopf(1, 2) == pytest.approx(sy.bound_theorem_main(1.5, 0.5), rel=1e-13)
    assert sy.hebey_vaugon_bound(3, 2) == pytest.approx(2 ** (2 / 3) * SIGMA_S3, rel=1e-13)
    assert math.isinf(sy.hebey_vaugon_bound(3))
    base = sy.Base.wps(2, 3)
    F = sy.wps_curvature_field(2, 3)
    assert sy.omega_norms(sy.InvariantMetric(base, sy.RadialFunction.constant(1.0), F))["chern_number"] == pytest.approx(1 / 6, rel=1e-8)
    assert sy.bound_cauchy_schwarz(base, F) <= sy.bound_weighted_hopf(2, 3) * (1 + 1e-9)


def test_uniformize_and_minimize():
    u = sy.uniformize_positive(sy.Base.wps(2, 3))
    assert u["min_scal"] > 0
    assert u["max_rel_deviation"] < 1e-6
    r = sy.minimize_conformal(hopf(), grid=32)
    assert r["mu_upper"] == pytest.approx(SIGMA_S3, rel=1e-3)
    assert all(b <= a for a, b in zip(r["trace"], r["trace"][1:]))


def test_scans():
    torus = sy.Base.flat_torus(1.0, 1.0)
    scan = sy.ell_scan(torus, sy.RadialFunction.constant(1.0), sy.log_grid(0.01, 1.0, 7))
    assert scan["regime"] == "SupZeroNotAttained"
    assert scan["exponent"] == pytest.approx(8 / 3, abs=1e-9)
    lower, upper = sy.collapse_bounds(torus, sy.RadialFunction.constant(1.0), 0.1)
    assert lower <= upper < 0
    with pytest.raises(sy.Error):
        sy.collapse_bounds(sy.Base.round_sphere(0.5), sy.RadialFunction.constant(2.0), 0.1)
