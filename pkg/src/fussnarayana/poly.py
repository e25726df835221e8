"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial in ``n`` variables is stored as a mapping from exponent
vectors (length-``n`` tuples of nonnegative ints) to nonzero
:class:`~fractions.Fraction` coefficients.  The zero polynomial keeps no
terms.  Arithmetic never leaves the rationals; floats only appear if the
caller evaluates at float arguments.

Serialization uses a canonical term order, descending lexicographic on
the exponent vector, so equal polynomials always render identically.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Scalar = Union[int, Fraction]


def format_exact(value: Scalar) -> str:
    """Render a rational as ``'n'`` when integral, ``'num/den'`` otherwise."""
    q = Fraction(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class MultiPoly:
    """Immutable sparse polynomial over the rationals.

    Instances should be treated as frozen: all operations return new
    polynomials.  Two polynomials compare equal iff they have the same
    number of variables and identical term maps.
    """

    __slots__ = ("num_vars", "terms")

    def __init__(self, num_vars: int, terms: Mapping[Sequence[int], Scalar] | None = None):
        if num_vars < 0:
            raise ValueError("num_vars must be nonnegative")
        clean: dict[tuple[int, ...], Fraction] = {}
        for exps, coeff in (terms or {}).items():
            key = tuple(int(e) for e in exps)
            if len(key) != num_vars:
                raise ValueError(f"exponent vector {key} does not have {num_vars} entries")
            if any(e < 0 for e in key):
                raise ValueError(f"negative exponent in {key}")
            q = Fraction(coeff)
            if q:
                clean[key] = q
        self.num_vars = num_vars
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def constant(cls, num_vars: int, value: Scalar) -> "MultiPoly":
        return cls(num_vars, {(0,) * num_vars: Fraction(value)})

    @classmethod
    def variable(cls, num_vars: int, index: int) -> "MultiPoly":
        """The monomial x_index in a ring with num_vars variables."""
        if not 0 <= index < num_vars:
            raise ValueError(f"variable index {index} out of range for {num_vars} variables")
        exps = tuple(1 if i == index else 0 for i in range(num_vars))
        return cls(num_vars, {exps: Fraction(1)})

    # -- predicates and views ----------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial (raises if any variable occurs)."""
        zero = (0,) * self.num_vars
        if any(key != zero for key in self.terms):
            raise ValueError("polynomial is not constant")
        return self.terms.get(zero, Fraction(0))

    def total_degree(self) -> int:
        """Maximum over terms of the exponent sum; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def canonical_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Terms in descending lexicographic order of exponent vector."""
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    # -- ring operations ----------------------------------------------------

    def _coerce(self, other) -> "MultiPoly | None":
        if isinstance(other, MultiPoly):
            if other.num_vars != self.num_vars:
                raise ValueError(
                    f"operands have {self.num_vars} and {other.num_vars} variables"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(self.num_vars, other)
        return None

    def __add__(self, other) -> "MultiPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        acc = dict(self.terms)
        for exps, coeff in rhs.terms.items():
            acc[exps] = acc.get(exps, Fraction(0)) + coeff
        return MultiPoly(self.num_vars, acc)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.num_vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other) -> "MultiPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return MultiPoly(self.num_vars, {e: c * q for e, c in self.terms.items()})
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        acc: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in rhs.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                acc[key] = acc.get(key, Fraction(0)) + c1 * c2
        return MultiPoly(self.num_vars, acc)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MultiPoly":
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.constant(self.num_vars, 1)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.num_vars == other.num_vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.num_vars, frozenset(self.terms.items())))

    # -- substitution and evaluation -----------------------------------------

    def evaluate(self, values: Sequence) -> "Fraction | float":
        """Evaluate at a point.  Exact for int/Fraction inputs, float otherwise."""
        if len(values) != self.num_vars:
            raise ValueError(f"expected {self.num_vars} values, got {len(values)}")
        total = 0
        for exps, coeff in self.terms.items():
            term = coeff
            for v, e in zip(values, exps):
                if e:
                    term = term * v**e
            total = total + term
        return total if self.terms else Fraction(0)

    def substitute(self, index: int, value: Scalar) -> "MultiPoly":
        """Replace one variable by an exact scalar; the result drops that slot."""
        if not 0 <= index < self.num_vars:
            raise ValueError(f"variable index {index} out of range")
        q = Fraction(value)
        acc: dict[tuple[int, ...], Fraction] = {}
        for exps, coeff in self.terms.items():
            key = exps[:index] + exps[index + 1 :]
            acc[key] = acc.get(key, Fraction(0)) + coeff * q ** exps[index]
        return MultiPoly(self.num_vars - 1, acc)

    def divide_by_variable(self, index: int) -> "MultiPoly":
        """Exact division by x_index; every term must contain that variable."""
        if not 0 <= index < self.num_vars:
            raise ValueError(f"variable index {index} out of range")
        acc = {}
        for exps, coeff in self.terms.items():
            if exps[index] < 1:
                raise ValueError(f"term {exps} has no factor of variable {index}")
            acc[exps[:index] + (exps[index] - 1,) + exps[index + 1 :]] = coeff
        return MultiPoly(self.num_vars, acc)

    def permuted(self, perm: Sequence[int]) -> "MultiPoly":
        """Relabel variables: slot i of the result reads slot perm[i] of self."""
        if sorted(perm) != list(range(self.num_vars)):
            raise ValueError(f"{perm!r} is not a permutation of range({self.num_vars})")
        acc = {}
        for exps, coeff in self.terms.items():
            acc[tuple(exps[j] for j in perm)] = coeff
        return MultiPoly(self.num_vars, acc)

    # -- rendering -----------------------------------------------------------

    def assert_integer_coefficients(self) -> "MultiPoly":
        """Return self, or raise if any coefficient has a denominator."""
        for exps, coeff in self.terms.items():
            if coeff.denominator != 1:
                raise ArithmeticError(f"non-integer coefficient {coeff} at {exps}")
        return self

    def to_json_dict(self, var_names: Sequence[str]) -> dict:
        """Canonical JSON form: variable names plus descending-lex term list."""
        if len(var_names) != self.num_vars:
            raise ValueError("one name per variable is required")
        return {
            "vars": list(var_names),
            "terms": [
                {"exponents": list(exps), "coeff": format_exact(coeff)}
                for exps, coeff in self.canonical_terms()
            ],
        }

    def to_string(self, var_names: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        names = list(var_names) if var_names else [f"x{i}" for i in range(self.num_vars)]
        chunks = []
        for exps, coeff in self.canonical_terms():
            factors = []
            if coeff != 1 or not any(exps):
                factors.append(format_exact(coeff))
            for name, e in zip(names, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            chunks.append("*".join(factors))
        return " + ".join(chunks)

    def __repr__(self) -> str:
        return f"MultiPoly({self.num_vars}, {self.to_string()!r})"
