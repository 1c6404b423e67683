"""Closed-form invariants and dimension counts."""

import pytest

from focalcurves import plucker
from focalcurves.errors import Inadmissible


def test_class_and_genus_examples():
    assert plucker.class_of(6, 0, 9) == 3
    assert plucker.genus_of(6, 0, 9) == 1
    assert plucker.class_of(4, 0, 3) == 3
    assert plucker.genus_of(4, 0, 3) == 0
    assert plucker.class_of(2, 0, 0) == 2
    assert plucker.genus_of(2, 0, 0) == 0


def test_inadmissible_counts():
    with pytest.raises(Inadmissible):
        plucker.class_of(2, 3, 0)
    with pytest.raises(Inadmissible):
        plucker.genus_of(3, 2, 0)


def test_expected_confocal_dims():
    assert plucker.expected_confocal_dim(4, 0, 3) == 2
    assert plucker.expected_confocal_dim(3, 0, 3) == 1
    assert plucker.expected_confocal_dim(6, 1, 3) == 3
    # negative values returned verbatim
    assert plucker.expected_confocal_dim(3, 0, 6) == -2
    assert plucker.expected_confocal_dim_clamped(3, 0, 6) == 0


def test_smooth_confocal_dim():
    assert plucker.smooth_confocal_dim(2) == 1
    assert plucker.smooth_confocal_dim(3) == -3
    assert plucker.smooth_confocal_dim(4) == -10


def test_maximal_class_rational_dims():
    assert [plucker.maximal_class_rational_dim(d) for d in (2, 3, 4)] == [1, 0, -1]


def test_cusp_threshold():
    # positive expected dimension exactly when kappa >= d - 2
    for d in range(2, 8):
        for kappa in range(0, 8):
            dim = plucker.rational_confocal_dim(d, kappa)
            assert (dim >= 1) == (kappa >= d - 2)


def test_riemann_roch_alternative():
    rr = plucker.riemann_roch_alternative(1, 0)
    assert rr.expected_h0 == 2 and rr.which_vanishing == "H1" and rr.automatic
    rr = plucker.riemann_roch_alternative(-2, 0)
    assert rr.expected_h0 == 0 and rr.which_vanishing == "H0" and rr.automatic
    # boundary b = 2g - 1 is automatic by Serre duality
    rr = plucker.riemann_roch_alternative(1, 1)
    assert rr.expected_h0 == 1 and rr.which_vanishing == "H1" and rr.automatic
    rr = plucker.riemann_roch_alternative(1, 2)
    assert rr.expected_h0 == 0 and rr.which_vanishing == "H0" and not rr.automatic


def test_tangent_dim_identity():
    # 3c - 1 - kappa == c + d + 1 when d = 2(c-1) - kappa, for all integers
    for c in range(2, 40):
        for kappa in range(0, 2 * c):
            d = 2 * (c - 1) - kappa
            assert 3 * c - 1 - kappa == c + d + 1


def test_roundtrip_with_generated_curves():
    from focalcurves.dualize import dual_param
    from focalcurves.ratgen import generate_curve_with_census

    for (c, kappa, seed) in [(3, 0, 21), (4, 1, 22)]:
        param, census = generate_curve_with_census(c, kappa, seed)
        d = dual_param(param).degree
        assert plucker.class_of(c, census.delta, census.kappa) == d
        assert plucker.genus_of(c, census.delta, census.kappa) == 0
        inv = plucker.invariants(c, census.delta, census.kappa)
        assert inv.c == d and inv.g == 0
