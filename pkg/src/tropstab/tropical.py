"""The max-plus semiring over the rationals with minus infinity adjoined.

Scalars are exact: either a rational number or the distinguished bottom
element NEG_INF.  Matrices over a valued field tropicalize entrywise by
minus the valuation, zero entries becoming NEG_INF, and act on vectors by
max-plus matrix-vector product.  The two stabilization predicates at the
end are the workhorses of the whole library: the direct fixed-point check
and the valuation-inequality test that agrees with it on determinant-one
matrices.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence, Union

from .errors import (AllInfiniteError, DeterminantNotOneError,
                     DimensionMismatchError, DomainError, SingularMatrixError)
from .matrices import FieldMatrix


class NegInfinity:
    """The neutral element for max and absorbing element for plus."""

    _instance = None
    __slots__ = ()

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "-inf"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("tropstab.NEG_INF")

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __neg__(self):
        raise ArithmeticError("minus infinity has no negative")


NEG_INF = NegInfinity()

TropScalar = Union[int, Fraction, NegInfinity]


def as_trop_scalar(value) -> TropScalar:
    if value is NEG_INF:
        return NEG_INF
    if isinstance(value, int):
        return value
    return Fraction(value)


def trop_vector(values) -> tuple:
    return tuple(as_trop_scalar(v) for v in values)


def trop_add(a: TropScalar, b: TropScalar) -> TropScalar:
    """Tropical sum: the maximum, with NEG_INF neutral."""
    if a is NEG_INF:
        return b
    if b is NEG_INF:
        return a
    return a if a >= b else b


def trop_mul(a: TropScalar, b: TropScalar) -> TropScalar:
    """Tropical product: ordinary addition, with NEG_INF absorbing."""
    if a is NEG_INF or b is NEG_INF:
        return NEG_INF
    return a + b


def tropicalize(g: FieldMatrix) -> tuple:
    """Entrywise minus valuation; zero entries map to NEG_INF.

    Requires an invertible matrix, which guarantees a finite entry in
    every row and column.
    """
    if g._trop is None:
        if g.determinant().is_zero():
            raise SingularMatrixError("tropicalization requires an invertible matrix")
        g._trop = tuple(
            tuple(NEG_INF if e.is_zero() else -e.valuation() for e in row)
            for row in g.rows)
    return g._trop


def trop_matvec(matrix: Sequence[Sequence[TropScalar]], x: Sequence[TropScalar]) -> tuple:
    """Max-plus matrix-vector product."""
    n = len(x)
    if any(len(row) != n for row in matrix):
        raise DimensionMismatchError("matrix and vector dimensions differ")
    out = []
    for row in matrix:
        acc = NEG_INF
        for m, xv in zip(row, x):
            acc = trop_add(acc, trop_mul(m, xv))
        out.append(acc)
    return tuple(out)


def _scaled_int_vector(x):
    """Clear denominators: returns (entries as ints or None for NEG_INF, scale)."""
    scale = 1
    for e in x:
        if e is NEG_INF:
            continue
        scale = math.lcm(scale, Fraction(e).denominator)
    out = []
    for e in x:
        if e is NEG_INF:
            out.append(None)
        else:
            q = Fraction(e)
            out.append(q.numerator * (scale // q.denominator))
    return out, scale


def stabilizes_tropically(g: FieldMatrix, x: Sequence[TropScalar]) -> bool:
    """Does the tropicalized matrix fix the vector under max-plus action?

    Entries of x may be NEG_INF; the convention that minus infinity
    absorbs addition applies.  Equivalent to
    trop_matvec(tropicalize(g), x) == x, computed over scaled integers.
    """
    xs = trop_vector(x)
    if all(e is NEG_INF for e in xs):
        raise AllInfiniteError("vector must have a finite entry")
    trop = tropicalize(g)
    if len(xs) != g.size:
        raise DimensionMismatchError("matrix and vector dimensions differ")
    xi, scale = _scaled_int_vector(xs)
    for i in range(g.size):
        row = trop[i]
        best = None
        for j in range(g.size):
            m = row[j]
            if m is NEG_INF or xi[j] is None:
                continue
            t = m * scale + xi[j]
            if best is None or t > best:
                best = t
        if best != xi[i]:
            return False
    return True


def valuation_inequality_oracle(g: FieldMatrix, x: Sequence[TropScalar]) -> bool:
    """Conjugated-integrality test: v(g_ij) + x_i - x_j >= 0 for all i, j.

    Defined for determinant-one matrices and finite vectors only; there it
    agrees with stabilizes_tropically, because no row of an integral
    determinant-one matrix can consist of positive-valuation entries.
    """
    if g.determinant() != g.spec.one():
        raise DeterminantNotOneError("determinant-one matrix required")
    xs = trop_vector(x)
    if any(e is NEG_INF for e in xs):
        raise DomainError("finite coordinates required")
    if len(xs) != g.size:
        raise DimensionMismatchError("matrix and vector dimensions differ")
    xi, scale = _scaled_int_vector(xs)
    for i in range(g.size):
        for j in range(g.size):
            e = g.rows[i][j]
            if e.is_zero():
                continue
            if e.valuation() * scale < xi[j] - xi[i]:
                return False
    return True
