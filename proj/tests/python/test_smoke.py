import math

import pytest

bergman = pytest.importorskip("bergman")


def test_solve_monomial_kernel():
    sol = bergman.solve(kernel=[0, 1], degree=3, p=2.0, weight="fock:alpha=1")
    assert sol["converged"]
    assert sol["residual"] < 1e-8
    # dual value mu_1 / ||z||_2 = pi / sqrt(pi) = sqrt(pi)
    assert abs(sol["dual_norm"] - math.sqrt(math.pi)) < 1e-9
    assert abs(sol["coefficients"][1] - 1.0 / math.sqrt(math.pi)) < 1e-9


def test_solve_p2_matches_iterative():
    closed = bergman.solve_p2(kernel=[1, 1], degree=4, weight="affine:a=2,b=1,R=1")
    iterative = bergman.solve(kernel=[1, 1], degree=4, p=2.0, weight="affine:a=2,b=1,R=1")
    assert closed["converged"] and iterative["converged"]
    assert abs(closed["dual_norm"] - iterative["dual_norm"]) < 1e-8
    defect = bergman.residual(
        f=iterative["coefficients"], kernel=[1, 1], p=2.0,
        weight="affine:a=2,b=1,R=1", degree=4,
    )
    assert defect < 1e-8


def test_identity_and_growth_bounds():
    rep = bergman.verify_base_identity(f=[0, 1], p=2.0, weight="affine:a=2,b=1,R=1")
    assert rep["pass"]
    assert abs(rep["lhs"] - 4.0 * math.pi / 3.0) < 1e-8

    disc = bergman.verify_disc_bound(
        kernel=[1, 1], p=3.0, weight="affine:a=2,b=1,R=1", degree=6
    )
    assert disc["pass"] and disc["solver_converged"]

    plane = bergman.verify_plane_bound(kernel=[0, 1], p=2.0, weight="fock:alpha=1", degree=4)
    assert plane["pass"]
    assert abs(plane["lhs"] - plane["rhs"]) < 1e-6 * plane["rhs"]


def test_means_density_and_s_integral():
    rows = bergman.means_profile(
        f=[0, 1], p=2.0, weight="affine:a=2,b=1,R=1", radii=[0.5, 1.0]
    )
    assert len(rows) == 2
    r, mp, dp, np_ = rows[1]
    assert r == 1.0
    assert abs(mp - math.sqrt(2.0 * math.pi)) < 1e-9
    assert abs(dp - math.sqrt(math.pi / 3.0)) < 1e-9
    assert np_ > 0.0

    cert = bergman.fock_density_certificate(alpha=1.0, p=2.0)
    assert cert["finite"]
    bad = bergman.check_plane_density(weight="fock:alpha=1", p=2.0, rho=0.5, beta=0.2)
    assert not bad["finite"]

    s = bergman.s_integral(weight="fock:alpha=1", x0=1.0)
    want = math.e * (math.exp(-1.0) / 2.0 + math.sqrt(math.pi) / 4.0 * math.erfc(1.0))
    assert abs(s - want) < 1e-6

    assert abs(bergman.norm(f=[1], p=2.0, weight="fock:alpha=1") - math.sqrt(math.pi)) < 1e-10


def test_config_errors_raise_value_error():
    with pytest.raises(ValueError):
        bergman.solve(kernel=[1], degree=3, p=2.0, weight="fock:gamma=1")
    with pytest.raises(ValueError):
        bergman.verify_base_identity(f=[1], p=2.0, weight="fock:alpha=1")
