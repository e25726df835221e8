"""Unit and property tests for the exact polynomial ring."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fussnarayana.poly import MultiPoly, format_exact

NUM_VARS = 3

exponents = st.tuples(*(st.integers(0, 4) for _ in range(NUM_VARS)))
coeffs = st.fractions(
    min_value=Fraction(-50), max_value=Fraction(50), max_denominator=12
)
polys = st.dictionaries(exponents, coeffs, max_size=6).map(
    lambda terms: MultiPoly(NUM_VARS, terms)
)
points = st.tuples(*(st.fractions(min_value=-3, max_value=3, max_denominator=6)
                     for _ in range(NUM_VARS)))


def test_zero_and_constant():
    zero = MultiPoly(2)
    assert zero.is_zero
    assert zero.evaluate((Fraction(5), Fraction(7))) == 0
    assert zero.total_degree() == -1
    one = MultiPoly.constant(2, 1)
    assert one.constant_value() == 1
    assert MultiPoly.constant(2, 0) == zero  # zero coefficient is dropped


def test_variable_and_pow():
    x = MultiPoly.variable(2, 0)
    y = MultiPoly.variable(2, 1)
    p = (x + y) ** 2
    assert p == x * x + 2 * x * y + y * y
    assert p.evaluate((2, 3)) == 25
    with pytest.raises(ValueError):
        MultiPoly.variable(2, 2)
    with pytest.raises(ValueError):
        x ** -1


def test_arity_mismatch_rejected():
    with pytest.raises(ValueError):
        MultiPoly.variable(2, 0) + MultiPoly.variable(3, 0)
    with pytest.raises(ValueError):
        MultiPoly.variable(2, 0) * MultiPoly.variable(3, 0)
    with pytest.raises(ValueError):
        MultiPoly(2, {(1,): 1})
    with pytest.raises(ValueError):
        MultiPoly(2, {(1, -1): 1})


@given(polys, polys, polys)
@settings(max_examples=60)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + MultiPoly(NUM_VARS) == a
    assert a * MultiPoly.constant(NUM_VARS, 1) == a
    assert (a - a).is_zero


@given(polys, polys, points)
@settings(max_examples=60)
def test_evaluation_is_a_homomorphism(a, b, pt):
    assert (a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt)
    assert (a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt)


@given(polys, st.fractions(min_value=-3, max_value=3, max_denominator=4))
@settings(max_examples=60)
def test_substitute_matches_evaluate(a, value):
    partial = a.substitute(1, value)
    assert partial.num_vars == NUM_VARS - 1
    pt = (Fraction(2), Fraction(1, 3))
    assert partial.evaluate(pt) == a.evaluate((pt[0], value, pt[1]))


@given(polys)
@settings(max_examples=60)
def test_permutation_round_trip(a):
    perm = (2, 0, 1)
    inverse = (1, 2, 0)
    assert a.permuted(perm).permuted(inverse) == a


def test_divide_by_variable():
    x = MultiPoly.variable(2, 0)
    y = MultiPoly.variable(2, 1)
    p = x * y + x * x * y
    assert p.divide_by_variable(0) == y + x * y
    with pytest.raises(ValueError):
        (p + 1).divide_by_variable(0)


def test_canonical_order_descending_lex():
    p = MultiPoly(2, {(0, 2): 1, (2, 0): 3, (1, 1): 2})
    assert [e for e, _ in p.canonical_terms()] == [(2, 0), (1, 1), (0, 2)]


def test_json_form():
    p = MultiPoly(2, {(1, 1): Fraction(1, 2), (0, 2): 3})
    doc = p.to_json_dict(["a", "b"])
    assert doc == {
        "vars": ["a", "b"],
        "terms": [
            {"exponents": [1, 1], "coeff": "1/2"},
            {"exponents": [0, 2], "coeff": "3"},
        ],
    }
    with pytest.raises(ValueError):
        p.to_json_dict(["a"])


def test_format_exact():
    assert format_exact(4) == "4"
    assert format_exact(Fraction(8, 2)) == "4"
    assert format_exact(Fraction(-3, 7)) == "-3/7"


def test_to_string():
    p = MultiPoly(2, {(2, 1): 1, (0, 0): -2})
    assert p.to_string(["u", "v"]) == "u^2*v + -2"
    assert MultiPoly(2).to_string() == "0"
