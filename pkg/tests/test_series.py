"""Tests for truncated series, the fixed-point solver, and Lagrange inversion."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fussnarayana.exact import limit_moment_poly
from fussnarayana.poly import MultiPoly
from fussnarayana.series import TruncatedSeries, lagrange_coefficient, solve_functional_equation


def constant_series(order, num_vars, value):
    head = MultiPoly.constant(num_vars, value)
    return TruncatedSeries(order, num_vars, [head] + [MultiPoly(num_vars)] * order)


def test_series_shape_validation():
    with pytest.raises(ValueError):
        TruncatedSeries(2, 1, [MultiPoly(1)] * 2)
    with pytest.raises(ValueError):
        TruncatedSeries(2, 1, [MultiPoly(2)] * 3)
    a = TruncatedSeries.zero(2, 1)
    b = TruncatedSeries.zero(3, 1)
    with pytest.raises(ValueError):
        a + b
    with pytest.raises(ValueError):
        a * b
    with pytest.raises(ValueError):
        a.coefficient(3)


def test_series_arithmetic_truncates():
    x_poly = MultiPoly.variable(1, 0)
    # s = 1 + t x + t x^2 over one variable t
    s = TruncatedSeries(2, 1, [MultiPoly.constant(1, 1), x_poly, x_poly])
    sq = s * s
    assert sq.coefficient(0) == MultiPoly.constant(1, 1)
    assert sq.coefficient(1) == 2 * x_poly
    assert sq.coefficient(2) == 2 * x_poly + x_poly * x_poly
    shifted = s.shifted()
    assert shifted.coefficient(0).is_zero
    assert shifted.coefficient(1) == MultiPoly.constant(1, 1)
    assert shifted.coefficient(2) == x_poly


def test_series_products_drop_terms_past_the_order():
    one = constant_series(2, 0, 1)
    x = constant_series(2, 0, 1).shifted()
    # (1 + x)(1 - x) keeps the x^2 term at order 2
    assert ((one + x) * (one - x)).coefficient(2) == MultiPoly.constant(0, -1)
    # at order 1 the product x * x has nowhere to put x^2, so it is zero
    x_short = constant_series(1, 0, 1).shifted()
    prod = x_short * x_short
    assert prod.order == 1
    assert all(prod.coefficient(k).is_zero for k in range(2))


def test_series_scalar_and_poly_operands():
    s = constant_series(2, 1, 3)
    t_poly = MultiPoly.variable(1, 0)
    assert (s + t_poly).coefficient(0) == MultiPoly.constant(1, 3) + t_poly
    assert (s - 1).coefficient(0) == MultiPoly.constant(1, 2)
    assert (s * Fraction(1, 3)).coefficient(0) == MultiPoly.constant(1, 1)


def test_solver_small_golden():
    # p = 1, two orders: the solution starts d0 d1 x + (d0^2 d1 + d0 d1^2) x^2
    g = solve_functional_equation(1, 2)
    d0 = MultiPoly.variable(2, 0)
    d1 = MultiPoly.variable(2, 1)
    assert g.coefficient(0).is_zero
    assert g.coefficient(1) == d0 * d1
    assert g.coefficient(2) == d0 * d0 * d1 + d0 * d1 * d1


def test_solver_rejects_bad_arguments():
    with pytest.raises(ValueError):
        solve_functional_equation(0, 3)
    with pytest.raises(ValueError):
        solve_functional_equation(1, -1)
    with pytest.raises(ValueError):
        solve_functional_equation(2, 3, dims=(1, 2))


@pytest.mark.parametrize("p,order", [(1, 6), (2, 5), (3, 4)])
def test_solution_satisfies_its_equation(p, order):
    # substitute the solution back: g - x * prod_i (g + d_i) must vanish
    # in every kept order (the x factor protects the top coefficient)
    g = solve_functional_equation(p, order)
    num_vars = p + 1
    acc = g + MultiPoly.variable(num_vars, 0)
    for i in range(1, num_vars):
        acc = acc * (g + MultiPoly.variable(num_vars, i))
    residual = g - acc.shifted()
    for k in range(order + 1):
        assert residual.coefficient(k).is_zero, f"residual at order {k}"


def test_solver_coefficients_are_moment_polynomials():
    for p, order in [(1, 5), (2, 4), (3, 2)]:
        g = solve_functional_equation(p, order)
        d0 = MultiPoly.variable(p + 1, 0)
        for k in range(1, order + 1):
            assert g.coefficient(k) == d0 * limit_moment_poly(p, k)


rationals = st.fractions(min_value=Fraction(1, 7), max_value=Fraction(4), max_denominator=9)


@given(st.integers(1, 3), st.integers(1, 5), st.data())
@settings(max_examples=30, deadline=None)
def test_numeric_mode_matches_symbolic_evaluation(p, order, data):
    dims = tuple(data.draw(rationals) for _ in range(p + 1))
    numeric = solve_functional_equation(p, order, dims=dims)
    symbolic = solve_functional_equation(p, order)
    for k in range(order + 1):
        assert numeric.coefficient(k).constant_value() == symbolic.coefficient(k).evaluate(dims)


def test_lagrange_against_direct_expansion():
    # independent route for p = 2, n = 2: expand (y + d0)^2 (y + d1)^2 (y + d2)^2
    # in a 4-variable ring and read off the coefficient of y^1, halved
    y, d0, d1, d2 = (MultiPoly.variable(4, i) for i in range(4))
    product = (y + d0) ** 2 * (y + d1) ** 2 * (y + d2) ** 2
    linear = {
        exps[1:]: coeff for exps, coeff in product.terms.items() if exps[0] == 1
    }
    expected = MultiPoly(3, linear) * Fraction(1, 2)
    assert lagrange_coefficient(2, 2) == expected


@pytest.mark.parametrize("p,order", [(1, 8), (2, 4), (3, 2)])
def test_lagrange_matches_solver(p, order):
    g = solve_functional_equation(p, order)
    for n in range(1, order + 1):
        assert lagrange_coefficient(p, n) == g.coefficient(n)


def test_lagrange_coefficients_are_integers():
    for p, n in [(1, 6), (2, 4), (3, 3), (4, 2)]:
        poly = lagrange_coefficient(p, n)
        assert all(c.denominator == 1 for c in poly.terms.values())
    with pytest.raises(ValueError):
        lagrange_coefficient(1, 0)
