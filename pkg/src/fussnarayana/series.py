"""Truncated power series over polynomial coefficients.

A ``TruncatedSeries`` of order K holds coefficients c_0..c_K, each a
:class:`~fussnarayana.poly.MultiPoly`, and represents
``c_0 + c_1 x + ... + c_K x^K + O(x^{K+1})``.  Multiplication truncates
at order K, so fixed-point iteration in this ring is exact through the
kept orders.

Two independent routes to the moment generating series live here:

* ``solve_functional_equation`` iterates ``g <- x * prod_i (g + d_i)``
  starting from 0.  Pass K iterations and the coefficients through
  ``x^K`` are exact: the right side maps series agreeing to order m to
  series agreeing to order m+1, because of the leading factor x.

* ``lagrange_coefficient`` extracts the same coefficient via Lagrange
  inversion: the x^n coefficient of the solution equals
  ``(1/n) [lambda^{n-1}] prod_i (lambda + d_i)^n``.

Both produce the order-k moment polynomial multiplied by d0.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .poly import MultiPoly


class TruncatedSeries:
    """Power series truncated at a fixed order, with MultiPoly coefficients."""

    __slots__ = ("order", "num_vars", "coeffs")

    def __init__(self, order: int, num_vars: int, coeffs: Sequence[MultiPoly] | None = None):
        if order < 0:
            raise ValueError("order must be nonnegative")
        if coeffs is None:
            coeffs = [MultiPoly(num_vars) for _ in range(order + 1)]
        coeffs = tuple(coeffs)
        if len(coeffs) != order + 1:
            raise ValueError(f"need {order + 1} coefficients, got {len(coeffs)}")
        for c in coeffs:
            if not isinstance(c, MultiPoly) or c.num_vars != num_vars:
                raise ValueError("every coefficient must be a MultiPoly in num_vars variables")
        self.order = order
        self.num_vars = num_vars
        self.coeffs = coeffs

    @classmethod
    def zero(cls, order: int, num_vars: int) -> "TruncatedSeries":
        return cls(order, num_vars)

    def coefficient(self, k: int) -> MultiPoly:
        """The polynomial multiplying x^k (0 <= k <= order)."""
        if not 0 <= k <= self.order:
            raise ValueError(f"coefficient index {k} outside stored range 0..{self.order}")
        return self.coeffs[k]

    def _compat(self, other: "TruncatedSeries") -> None:
        if self.order != other.order or self.num_vars != other.num_vars:
            raise ValueError("series shapes differ (order or variable count)")

    def __add__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction, MultiPoly)):
            head = self.coeffs[0] + other
            return TruncatedSeries(self.order, self.num_vars, (head,) + self.coeffs[1:])
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._compat(other)
        return TruncatedSeries(
            self.order, self.num_vars,
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
        )

    __radd__ = __add__

    def __sub__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction, MultiPoly)):
            head = self.coeffs[0] - other
            return TruncatedSeries(self.order, self.num_vars, (head,) + self.coeffs[1:])
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._compat(other)
        return TruncatedSeries(
            self.order, self.num_vars,
            tuple(a - b for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction, MultiPoly)):
            return TruncatedSeries(
                self.order, self.num_vars, tuple(c * other for c in self.coeffs)
            )
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._compat(other)
        out = [MultiPoly(self.num_vars) for _ in range(self.order + 1)]
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j in range(self.order + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero:
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries(self.order, self.num_vars, out)

    __rmul__ = __mul__

    def shifted(self) -> "TruncatedSeries":
        """Multiply by x: coefficients move up one slot, the top one drops."""
        zero = MultiPoly(self.num_vars)
        return TruncatedSeries(self.order, self.num_vars, (zero,) + self.coeffs[:-1])

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.order == other.order
            and self.num_vars == other.num_vars
            and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:
        parts = [f"({c.to_string()})*x^{k}" for k, c in enumerate(self.coeffs) if not c.is_zero]
        return f"TruncatedSeries(order={self.order}, {' + '.join(parts) or '0'})"


def solve_functional_equation(
    p: int, order: int, dims: Sequence | None = None
) -> TruncatedSeries:
    """Solve g = x * (g + d0) * (g + d1) * ... * (g + dp) to the given order.

    With ``dims`` omitted the d_i are symbolic and the result is a series
    whose x^k coefficient is the order-k limit moment polynomial times d0,
    in ``p+1`` variables.  With ``dims`` given (p+1 exact rationals) the
    same iteration runs with constant coefficients, which is much faster
    for numeric work; coefficients are then constant polynomials in zero
    variables.

    The iteration starts from the zero series and runs ``order`` times;
    each pass fixes one further coefficient, so the result is exact
    through x^order.
    """
    if p < 1 or order < 0:
        raise ValueError(f"need p >= 1 and order >= 0, got p={p}, order={order}")
    if dims is None:
        num_vars = p + 1
        ds = [MultiPoly.variable(num_vars, i) for i in range(num_vars)]
    else:
        if len(dims) != p + 1:
            raise ValueError(f"dims must provide p+1 = {p + 1} values, got {len(dims)}")
        num_vars = 0
        ds = [MultiPoly.constant(0, Fraction(d)) for d in dims]
    g = TruncatedSeries.zero(order, num_vars)
    for _ in range(order):
        acc = g + ds[0]
        for d in ds[1:]:
            acc = acc * (g + d)
        g = acc.shifted()
    return g


def lagrange_coefficient(p: int, n: int) -> MultiPoly:
    """x^n coefficient of the functional-equation solution, via inversion.

    Computes (1/n) times the lambda^(n-1) coefficient of
    ``prod_{i=0..p} (lambda + d_i)^n``, working with a univariate
    polynomial in lambda truncated above degree n-1.  The division by n
    must be exact; a failure raises rather than returning a rational.
    """
    if p < 1 or n < 1:
        raise ValueError(f"need p >= 1 and n >= 1, got p={p}, n={n}")
    num_vars = p + 1
    # acc[m] is the d-polynomial multiplying lambda^m, kept only for m <= n-1.
    acc: list[MultiPoly] = [MultiPoly.constant(num_vars, 1)]
    for i in range(num_vars):
        d_i = MultiPoly.variable(num_vars, i)
        # (lambda + d_i)^n truncated above lambda^(n-1)
        factor = [MultiPoly.constant(num_vars, math.comb(n, m)) * d_i ** (n - m) for m in range(n)]
        out = [MultiPoly(num_vars) for _ in range(n)]
        for a, poly_a in enumerate(acc):
            if poly_a.is_zero:
                continue
            for b in range(n - a):
                if not factor[b].is_zero:
                    out[a + b] = out[a + b] + poly_a * factor[b]
        acc = out
    target = acc[n - 1]
    return (target * Fraction(1, n)).assert_integer_coefficients()
