"""Marchenko-Pastur laws and their free multiplicative convolutions.

The law with shape parameter t > 0 has an atom of mass max(1-t, 0) at
the origin plus the density sqrt((b-x)(x-a)) / (2 pi x) on [a, b] with
a = (1-sqrt(t))^2 and b = (1+sqrt(t))^2.  Its S-transform is
1/(z + t), so the free multiplicative convolution of laws with shapes
t_1..t_p has S-transform prod_i 1/(z + t_i), and the moment generating
function psi(x) = sum_k m_k x^k satisfies

    psi = x * (psi + 1) * (psi + t_1) * ... * (psi + t_p).

Moments therefore come from the shared functional-equation solver with
the leading ratio pinned to 1.  Three independent routes are exposed:
the series solver, the closed-form polynomials, and (for one factor)
numerical quadrature against the density itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from scipy.integrate import quad

from .exact import fuss_narayana_poly
from .report import Report
from .series import solve_functional_equation


class QuadratureError(RuntimeError):
    """Raised when numerical integration cannot certify the requested accuracy."""


def _as_shapes(shapes: Sequence) -> tuple[Fraction, ...]:
    out = tuple(Fraction(t) for t in shapes)
    if not out:
        raise ValueError("at least one shape parameter is required")
    if any(t <= 0 for t in out):
        raise ValueError(f"shape parameters must be positive, got {out}")
    return out


@dataclass(frozen=True)
class MpLaw:
    """One Marchenko-Pastur law, with exact shape parameter."""

    t: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "t", Fraction(self.t))
        if self.t <= 0:
            raise ValueError(f"shape parameter must be positive, got {self.t}")

    @property
    def atom_mass(self) -> Fraction:
        """Mass of the atom at the origin: max(1 - t, 0), exact."""
        return max(Fraction(1) - self.t, Fraction(0))

    @property
    def continuous_mass(self) -> Fraction:
        return Fraction(1) - self.atom_mass

    @property
    def support(self) -> tuple[float, float]:
        """Endpoints of the continuous part, (1 -+ sqrt(t))^2 as floats."""
        root = math.sqrt(self.t)
        return (1 - root) ** 2, (1 + root) ** 2

    def density(self, x: float) -> float:
        return mp_density(float(self.t), x)

    def s_transform(self, z: Fraction) -> Fraction:
        """S-transform 1/(z + t), exact on rational arguments."""
        return 1 / (Fraction(z) + self.t)


def mp_density(t: float, x: float) -> float:
    """Density of the continuous part of the shape-t law at x (0 off support).

    The atom at the origin for t < 1 is not part of the density; see
    :attr:`MpLaw.atom_mass`.
    """
    if t <= 0:
        raise ValueError(f"shape parameter must be positive, got {t}")
    root = math.sqrt(t)
    a, b = (1 - root) ** 2, (1 + root) ** 2
    if x <= a or x >= b:
        return 0.0
    return math.sqrt((b - x) * (x - a)) / (2 * math.pi * x)


@dataclass(frozen=True)
class MomentTable:
    """Moments m_1..m_K of a free multiplicative convolution, exact."""

    shapes: tuple[Fraction, ...]
    values: tuple[Fraction, ...]

    @property
    def max_order(self) -> int:
        return len(self.values)

    def moment(self, k: int) -> Fraction:
        """m_k for 0 <= k <= max_order (m_0 = 1)."""
        if k == 0:
            return Fraction(1)
        if not 1 <= k <= self.max_order:
            raise ValueError(f"moment order {k} outside computed range 1..{self.max_order}")
        return self.values[k - 1]


def moments_by_series(shapes: Sequence, order: int) -> MomentTable:
    """Moments from the psi functional equation, solved as a truncated series.

    Delegates to the generic solver with the leading ratio set to 1 and
    the remaining ratios set to the shape parameters; the x^k
    coefficient of the solution is exactly m_k.
    """
    ts = _as_shapes(shapes)
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    g = solve_functional_equation(len(ts), order, dims=(Fraction(1),) + ts)
    values = tuple(g.coefficient(k).constant_value() for k in range(1, order + 1))
    return MomentTable(shapes=ts, values=values)


def moments_by_closed_form(shapes: Sequence, order: int) -> MomentTable:
    """Moments by direct evaluation of the closed-form moment polynomials."""
    ts = _as_shapes(shapes)
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    values = tuple(
        Fraction(fuss_narayana_poly(len(ts), k).evaluate(ts)) for k in range(1, order + 1)
    )
    return MomentTable(shapes=ts, values=values)


# -- S-transform inversion check ----------------------------------------------
#
# Univariate truncated series over Fraction, as plain lists c[0..K].


def _u_mul(a: list[Fraction], b: list[Fraction], order: int) -> list[Fraction]:
    out = [Fraction(0)] * (order + 1)
    for i, ai in enumerate(a[: order + 1]):
        if not ai:
            continue
        for j in range(min(len(b), order + 1 - i)):
            if b[j]:
                out[i + j] += ai * b[j]
    return out

def _u_inverse(a: list[Fraction], order: int) -> list[Fraction]:
    if not a[0]:
        raise ValueError("series with zero constant term has no reciprocal")
    out = [Fraction(0)] * (order + 1)
    out[0] = 1 / a[0]
    for n in range(1, order + 1):
        s = Fraction(0)
        for i in range(1, min(n, len(a) - 1) + 1):
            s += a[i] * out[n - i]
        out[n] = -s / a[0]
    return out

def _u_compose(f: list[Fraction], g: list[Fraction], order: int) -> list[Fraction]:
    if g[0]:
        raise ValueError("composition needs a series with zero constant term")
    out = [f[min(order, len(f) - 1)]] + [Fraction(0)] * order
    for k in range(min(order, len(f) - 1) - 1, -1, -1):
        out = _u_mul(out, g, order)
        out[0] += f[k]
    return out


def s_transform_check(shapes: Sequence, order: int) -> Report:
    """Verify the moment series against the product of S-transforms.

    The claimed compositional inverse of psi is

        x(z) = z / ((z + 1) * prod_i (z + t_i)),

    a restatement of S(z) = prod_i 1/(z + t_i).  The check composes the
    psi series from :func:`moments_by_series` with this inverse and
    compares the result with the identity series, coefficient by
    coefficient, in exact arithmetic.
    """
    ts = _as_shapes(shapes)
    if order < 2:
        raise ValueError(f"order must be >= 2 for a meaningful check, got {order}")
    report = Report(name=f"s-transform p={len(ts)} order={order}")
    moments = moments_by_series(ts, order)
    psi = [Fraction(0)] + list(moments.values)

    # denominator (z + 1) * prod (z + t_i), expanded in z
    denom = [Fraction(1)]
    for c in (Fraction(1),) + ts:
        denom = [
            (denom[i - 1] if i >= 1 else 0) + c * (denom[i] if i < len(denom) else 0)
            for i in range(len(denom) + 1)
        ]
    inv = _u_inverse([denom[i] if i < len(denom) else Fraction(0) for i in range(order + 1)], order)
    psi_inverse = [Fraction(0)] + inv[:order]

    composed = _u_compose(psi, psi_inverse, order)
    expected = [Fraction(0), Fraction(1)] + [Fraction(0)] * (order - 1)
    for k in range(order + 1):
        report.tally(
            composed[k] == expected[k],
            f"coefficient {k}: psi(inverse(x)) has {composed[k]}, expected {expected[k]}",
        )
    return report


def quadrature_moments(t, order: int, rel_tol: float = 1e-8) -> list[float]:
    """Moments m_1..m_order of one law by adaptive quadrature on its density.

    Uses the substitution x = (a + b)/2 + (b - a) sin(theta) / 2, under
    which sqrt((b - x)(x - a)) dx becomes (b - a)^2 cos^2(theta) / 4
    d(theta); the edge singularities disappear and the integrand is
    smooth, so the estimate comes with a tight error bound.  Raises
    :class:`QuadratureError` when the bound cannot certify ``rel_tol``.
    """
    t = float(t)
    if t <= 0:
        raise ValueError(f"shape parameter must be positive, got {t}")
    if not 1 <= order <= 8:
        raise ValueError(f"order must lie in [1, 8], got {order}")
    root = math.sqrt(t)
    a, b = (1 - root) ** 2, (1 + root) ** 2
    center, half = (a + b) / 2, (b - a) / 2
    prefactor = (b - a) ** 2 / (8 * math.pi)

    out = []
    for k in range(1, order + 1):
        def integrand(theta: float, _k: int = k) -> float:
            x = center + half * math.sin(theta)
            return x ** (_k - 1) * math.cos(theta) ** 2

        value, bound = quad(integrand, -math.pi / 2, math.pi / 2,
                            epsabs=1e-14, epsrel=1e-12, limit=200)
        moment = prefactor * value
        if bound * prefactor > rel_tol * abs(moment):
            raise QuadratureError(
                f"moment {k} at t={t}: error bound {bound * prefactor:.3e} "
                f"exceeds {rel_tol:.1e} * {abs(moment):.6e}"
            )
        out.append(moment)
    return out
