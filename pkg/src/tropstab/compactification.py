"""Boundary points of the compactified apartment and their stabilizers.

The compactified apartment of the identity representation is the set of
vectors over the rationals with minus infinity adjoined, not all entries
infinite, modulo a common finite shift.  The stratum of a point is the set
of finite positions.  Boundary points arise as limits along fan
directions; their stabilizers are computed by the same tropical
fixed-point test, and independently by a block condition: the matrix must
preserve the coordinate subspace of the stratum and its restriction must
fix the finite part.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .apartment import ApartmentPoint
from .errors import (AllInfiniteError, DeterminantNotOneError,
                     DimensionMismatchError, InvalidDirectionError,
                     NotSymplecticError)
from .matrices import FieldMatrix
from .symplectic import SpApartmentPoint, embed_point, is_symplectic
from .tropical import NEG_INF, stabilizes_tropically, trop_vector
from .weights import Cone, sl_identity_character, weight_fan


def stratum(x) -> frozenset:
    """Indices of the finite entries of a tropical vector."""
    xs = trop_vector(x)
    fin = frozenset(i for i, e in enumerate(xs) if e is not NEG_INF)
    if not fin:
        raise AllInfiniteError("vector has no finite entry")
    return fin


class BoundaryPoint:
    """A point of the compactified apartment, anchored at its first finite entry."""

    __slots__ = ("coords", "stratum")

    def __init__(self, coords):
        xs = trop_vector(coords)
        fin = [i for i, e in enumerate(xs) if e is not NEG_INF]
        if not fin:
            raise AllInfiniteError("vector has no finite entry")
        anchor = Fraction(xs[fin[0]])
        self.coords = tuple(
            NEG_INF if e is NEG_INF else Fraction(e) - anchor for e in xs)
        self.stratum = frozenset(fin)

    @property
    def n(self) -> int:
        return len(self.coords)

    def __eq__(self, other):
        if not isinstance(other, BoundaryPoint):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"BoundaryPoint({', '.join(repr(c) for c in self.coords)})"


@dataclass(frozen=True)
class FanDirection:
    """A fan cone together with a rational point of it, read as a recession direction."""

    cone: Cone
    point: tuple

    def __post_init__(self):
        pt = tuple(Fraction(c) for c in self.point)
        object.__setattr__(self, "point", pt)
        if self.cone.functionals and len(self.cone.functionals[0]) != len(pt):
            raise InvalidDirectionError("direction dimension does not match the cone")
        if not self.cone.contains(pt):
            raise InvalidDirectionError("direction point lies outside the cone")


def direction_for_stratum(indices, n: int) -> FanDirection:
    """Canonical direction whose limit lands in the given stratum."""
    I = sorted(set(indices))
    if not I or any(i < 0 or i >= n for i in I):
        raise InvalidDirectionError("stratum must be a nonempty subset of the indices")
    fan = weight_fan(sl_identity_character(n))
    lead = [0] * n
    lead[min(I)] = 1
    cone = next(fc.cone for fc in fan.maximal_cones if fc.vertex == tuple(lead))
    c = [Fraction(1) if i in I else Fraction(0) for i in range(n)]
    shift = sum(c) / n
    return FanDirection(cone, tuple(v - shift for v in c))


def boundary_point_from_direction(x: ApartmentPoint, d: FanDirection) -> BoundaryPoint:
    """Limit of x along the direction: coordinates stay finite exactly where
    the coordinate weights attain their maximum on the direction point."""
    n = x.n
    if len(d.point) != n:
        raise InvalidDirectionError("direction dimension does not match the point")
    top = max(d.point)
    return BoundaryPoint(tuple(
        x.coords[i] if d.point[i] == top else NEG_INF for i in range(n)))


def _require_det_one(g: FieldMatrix):
    if g.determinant() != g.spec.one():
        raise DeterminantNotOneError("determinant-one matrix required")


def boundary_stabilizes(g: FieldMatrix, b: BoundaryPoint) -> bool:
    """Does g fix the boundary point tropically?"""
    _require_det_one(g)
    if g.size != b.n:
        raise DimensionMismatchError("matrix and point dimensions differ")
    return stabilizes_tropically(g, b.coords)


def boundary_block_oracle(g: FieldMatrix, b: BoundaryPoint) -> bool:
    """Independent check: g preserves the stratum subspace and the restricted
    block fixes the finite part, attainment of every row maximum included."""
    _require_det_one(g)
    if g.size != b.n:
        raise DimensionMismatchError("matrix and point dimensions differ")
    inside = sorted(b.stratum)
    outside = [i for i in range(b.n) if i not in b.stratum]
    for i in outside:
        for j in inside:
            if not g.rows[i][j].is_zero():
                return False
    for i in inside:
        best = None
        for j in inside:
            e = g.rows[i][j]
            if e.is_zero():
                continue
            t = b.coords[j] - e.valuation()
            if best is None or t > best:
                best = t
        if best is None or best != b.coords[i]:
            return False
    return True


def permute_boundary(b: BoundaryPoint, perm) -> BoundaryPoint:
    """Coordinate i of the result at position perm[i]."""
    out = [NEG_INF] * b.n
    for i, target in enumerate(perm):
        out[target] = b.coords[i]
    return BoundaryPoint(out)


def sp_boundary_point(x: SpApartmentPoint, d: FanDirection) -> BoundaryPoint:
    """Embedded limit point: the weights of the standard symplectic
    representation evaluated on the direction decide which of the 2n
    embedded coordinates stay finite."""
    n = x.n
    if len(d.point) != n:
        raise InvalidDirectionError("direction dimension does not match the point")
    c = d.point
    embedded_dir = c + tuple(-v for v in reversed(c))
    top = max(embedded_dir)
    ys = embed_point(x).coords
    return BoundaryPoint(tuple(
        ys[i] if embedded_dir[i] == top else NEG_INF for i in range(2 * n)))


def sp_boundary_stabilizes(g: FieldMatrix, x: SpApartmentPoint, d: FanDirection) -> bool:
    """Does the symplectic matrix g fix the embedded limit point tropically?"""
    if not is_symplectic(g):
        raise NotSymplecticError("matrix does not preserve the symplectic form")
    b = sp_boundary_point(x, d)
    if g.size != b.n:
        raise DimensionMismatchError("matrix and point dimensions differ")
    return stabilizes_tropically(g, b.coords)
