"""Tests for Marchenko-Pastur laws and free multiplicative convolution moments."""

import math
import random
from fractions import Fraction

import pytest
from scipy.integrate import quad

from fussnarayana.exact import fuss_narayana_poly
from fussnarayana.freeprob import (
    MpLaw,
    QuadratureError,
    moments_by_closed_form,
    moments_by_series,
    mp_density,
    quadrature_moments,
    s_transform_check,
)
from fussnarayana.poly import MultiPoly


def test_law_atom_and_support():
    thin = MpLaw(Fraction(1, 4))
    assert thin.atom_mass == Fraction(3, 4)
    assert thin.continuous_mass == Fraction(1, 4)
    a, b = thin.support
    assert a == pytest.approx(0.25)
    assert b == pytest.approx(2.25)
    fat = MpLaw(Fraction(3))
    assert fat.atom_mass == 0
    with pytest.raises(ValueError):
        MpLaw(Fraction(0))
    with pytest.raises(ValueError):
        mp_density(-1.0, 1.0)


def test_density_vanishes_off_support():
    law = MpLaw(Fraction(1, 2))
    a, b = law.support
    assert law.density(a - 0.01) == 0.0
    assert law.density(b + 0.01) == 0.0
    assert law.density((a + b) / 2) > 0.0


def test_density_drops_to_zero_at_the_right_edge():
    law = MpLaw(Fraction(1))
    assert law.support == (0.0, 4.0)
    assert law.density(4.0) == 0.0
    # square-root decay approaching the edge from inside
    assert 0.0 < law.density(4.0 - 1e-8) < 1e-3


@pytest.mark.parametrize("t", [Fraction(1, 2), Fraction(1), Fraction(2)])
def test_density_integrates_to_continuous_mass(t):
    law = MpLaw(t)
    a, b = law.support
    mass, err = quad(law.density, a, b, limit=300)
    assert err < 1e-8
    assert mass == pytest.approx(float(law.continuous_mass), abs=1e-7)


def test_s_transform_values():
    law = MpLaw(Fraction(2))
    assert law.s_transform(Fraction(0)) == Fraction(1, 2)
    assert law.s_transform(Fraction(1, 3)) == Fraction(3, 7)


def test_moment_golden_values():
    # one factor, shape 2: Narayana polynomials at t = 2
    table = moments_by_series((Fraction(2),), 3)
    assert table.values == (Fraction(2), Fraction(6), Fraction(22))
    # two factors, shapes (2, 3), order 2: F_2(2, 3) = 36 + 12 + 18
    pair = moments_by_closed_form((Fraction(2), Fraction(3)), 2)
    assert pair.moment(1) == 6
    assert pair.moment(2) == 66
    assert pair.moment(0) == 1
    with pytest.raises(ValueError):
        pair.moment(3)


def test_moment_table_input_validation():
    with pytest.raises(ValueError):
        moments_by_series((), 3)
    with pytest.raises(ValueError):
        moments_by_series((Fraction(-1),), 3)
    with pytest.raises(ValueError):
        moments_by_closed_form((Fraction(1),), 0)


def test_series_and_closed_form_agree_on_a_grid():
    shapes_pool = [
        (Fraction(1),),
        (Fraction(2), Fraction(3)),
        (Fraction(1, 2), Fraction(5, 3)),
        (Fraction(1), Fraction(1), Fraction(1)),
        (Fraction(2), Fraction(1, 7), Fraction(3), Fraction(4, 5)),
    ]
    for shapes in shapes_pool:
        order = 8 if len(shapes) <= 2 else 5
        assert (
            moments_by_series(shapes, order).values
            == moments_by_closed_form(shapes, order).values
        ), shapes


def test_three_factor_second_moment_polynomial():
    # hand-entered worked example: m2 for three factors equals
    # t1^2 t2^2 t3^2 + t1 t2^2 t3^2 + t1^2 t2 t3^2 + t1^2 t2^2 t3,
    # checked as a polynomial identity at random rational points
    t1, t2, t3 = (MultiPoly.variable(3, i) for i in range(3))
    expected = (
        t1**2 * t2**2 * t3**2
        + t1 * t2**2 * t3**2
        + t1**2 * t2 * t3**2
        + t1**2 * t2**2 * t3
    )
    assert fuss_narayana_poly(3, 2) == expected
    rng = random.Random(20260822)
    for _ in range(5):
        point = tuple(Fraction(rng.randint(1, 40), rng.randint(1, 40)) for _ in range(3))
        table = moments_by_series(point, 2)
        assert table.moment(2) == expected.evaluate(point)


def test_unit_shapes_reduce_to_known_values():
    # all shapes 1: moments of the p-fold convolution are Fuss-Catalan numbers
    table = moments_by_series((Fraction(1), Fraction(1), Fraction(1)), 2)
    assert table.moment(1) == 1
    assert table.moment(2) == 4


@pytest.mark.parametrize(
    "shapes",
    [
        (Fraction(1),),
        (Fraction(2),),
        (Fraction(2), Fraction(3)),
        (Fraction(1, 2), Fraction(1), Fraction(7, 4)),
    ],
)
def test_s_transform_inversion(shapes):
    report = s_transform_check(shapes, 6)
    assert report.ok, report.mismatches
    assert report.checks == 7


def test_s_transform_check_needs_two_orders():
    with pytest.raises(ValueError):
        s_transform_check((Fraction(1),), 1)


@pytest.mark.parametrize("t", [Fraction(1, 2), Fraction(1), Fraction(2)])
def test_quadrature_matches_exact_moments(t):
    estimates = quadrature_moments(t, 8)
    exact = moments_by_closed_form((t,), 8)
    for k, estimate in enumerate(estimates, start=1):
        target = float(exact.moment(k))
        assert abs(estimate - target) <= 1e-8 * max(1.0, abs(target)), (t, k)


def test_quadrature_catalan_numbers():
    values = quadrature_moments(1, 4)
    for estimate, target in zip(values, (1, 2, 5, 14)):
        assert estimate == pytest.approx(target, rel=1e-10)


def test_quadrature_argument_validation():
    with pytest.raises(ValueError):
        quadrature_moments(1, 9)
    with pytest.raises(ValueError):
        quadrature_moments(1, 0)
    with pytest.raises(ValueError):
        quadrature_moments(0, 3)


def test_quadrature_error_reports_uncertifiable_tolerance():
    with pytest.raises(QuadratureError):
        quadrature_moments(Fraction(3, 2), 4, rel_tol=0.0)
