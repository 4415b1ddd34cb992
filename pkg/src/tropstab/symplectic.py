"""The symplectic group, its apartment, and the embedding into the
special-linear apartment.

The standard form is built from the antidiagonal identity; symplectic
apartment points have n free rational coordinates and embed into the
rank 2n-1 apartment as the palindromically antisymmetric vectors
(x_1, ..., x_n, -x_n, ..., -x_1).  Stabilizer membership reduces through
this embedding to the tropical fixed-point test.
"""

from __future__ import annotations

from fractions import Fraction

from .apartment import ApartmentPoint, MonomialMatrix, normalizer_action
from .errors import (DimensionMismatchError, NotSymplecticError,
                     OutOfStarError)
from .fields import FieldSpec
from .matrices import FieldMatrix
from .tropical import stabilizes_tropically


def antidiagonal_identity(spec: FieldSpec, n: int) -> FieldMatrix:
    one, zero = spec.one(), spec.zero()
    return FieldMatrix(spec, [[one if i + j == n - 1 else zero for j in range(n)]
                              for i in range(n)])


def standard_form(spec: FieldSpec, n: int) -> FieldMatrix:
    """The 2n x 2n coordinate matrix of the standard symplectic form."""
    one, zero = spec.one(), spec.zero()
    rows = []
    for i in range(2 * n):
        row = [zero] * (2 * n)
        if i < n:
            row[2 * n - 1 - i] = one
        else:
            row[2 * n - 1 - i] = -one
        rows.append(row)
    return FieldMatrix(spec, rows)


def antitranspose(m: FieldMatrix) -> FieldMatrix:
    """Reflection in the antidiagonal; an involution with (MN)^† = N^† M^†."""
    n = m.size
    return FieldMatrix(m.spec, [[m.rows[n - 1 - j][n - 1 - i] for j in range(n)]
                                for i in range(n)])


def is_symplectic(m: FieldMatrix) -> bool:
    """Does m preserve the standard symplectic form exactly?"""
    if m.size % 2 != 0:
        raise DimensionMismatchError("symplectic matrices have even size")
    psi = standard_form(m.spec, m.size // 2)
    return m.transpose() * psi * m == psi


class SpApartmentPoint:
    """A point of the symplectic apartment: n free rational coordinates."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        cs = tuple(Fraction(c) for c in coords)
        if not cs:
            raise ValueError("empty coordinate vector")
        self.coords = cs

    @property
    def n(self) -> int:
        return len(self.coords)

    def __eq__(self, other):
        if not isinstance(other, SpApartmentPoint):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(("sp", self.coords))

    def __repr__(self):
        return f"SpApartmentPoint({', '.join(str(c) for c in self.coords)})"


def embed_point(x: SpApartmentPoint) -> ApartmentPoint:
    """Embedding into the special-linear apartment: (x, -reversed(x))."""
    cs = x.coords
    return ApartmentPoint(cs + tuple(-c for c in reversed(cs)))


def _require_symplectic(g: FieldMatrix):
    if not is_symplectic(g):
        raise NotSymplecticError("matrix does not preserve the symplectic form")


def sp_stabilizer_membership(g: FieldMatrix, x: SpApartmentPoint) -> bool:
    """Is the symplectic matrix g in the stabilizer of the apartment point x?"""
    _require_symplectic(g)
    if g.size != 2 * x.n:
        raise DimensionMismatchError("matrix and point dimensions differ")
    return stabilizes_tropically(g, embed_point(x).coords)


def sp_in_star_of_origin(coords) -> bool:
    """Star of the origin for the C_n arrangement: |2 x_i| < 1, |x_i ± x_j| < 1."""
    n = len(coords)
    for i in range(n):
        if abs(2 * coords[i]) >= 1:
            return False
        for j in range(i + 1, n):
            if abs(coords[i] - coords[j]) >= 1 or abs(coords[i] + coords[j]) >= 1:
                return False
    return True


def sp_parahoric_oracle(g: FieldMatrix, x: SpApartmentPoint) -> bool:
    """Residue-flag test through the embedding, valid on the star of the origin."""
    _require_symplectic(g)
    if g.size != 2 * x.n:
        raise DimensionMismatchError("matrix and point dimensions differ")
    if not sp_in_star_of_origin(x.coords):
        raise OutOfStarError("point outside the star of the origin")
    if not g.is_integral():
        return False
    ys = embed_point(x).coords
    res = g.residue()
    for i in range(g.size):
        for j in range(g.size):
            if ys[i] < ys[j] and res[i][j] != 0:
                return False
    return True


def sp_normalizer_action(m: FieldMatrix, x: SpApartmentPoint) -> SpApartmentPoint:
    """Action of a symplectic monomial matrix, computed in the embedded picture."""
    _require_symplectic(m)
    mono = MonomialMatrix.from_matrix(m)
    y = normalizer_action(mono, embed_point(x))
    cs = y.coords
    n = len(cs) // 2
    if any(cs[i] != -cs[len(cs) - 1 - i] for i in range(n)):
        raise ValueError("matrix does not act on the symplectic apartment")
    return SpApartmentPoint(cs[:n])
