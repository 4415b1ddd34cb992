"""Weight systems of the built-in representations and their geometry.

A WeightedCharacter is a finite map from integer weight vectors to
multiplicities.  From it we compute the dominance cone of each extreme
weight, the complete fan of such cones, the vertex set of the weight
polytope (by exact linear feasibility), and membership in the tropical
hypersurface cut out by the character, whose locus coincides with the
codimension-one skeleton of the fan.  Schur polynomials are evaluated by
two independent routes: semistandard tableau enumeration and the
bialternant determinant ratio.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .apartment import ApartmentPoint
from .errors import (DimensionMismatchError, NotAVertexError,
                     RepeatedValuesError, TooManyPartsError,
                     TypeMismatchError, WeightMismatchError)
from .feasibility import strictly_feasible
from .fields import FieldSpec, int_valuation

GROUP_SL = "sln"
GROUP_SP = "sp2n"


# ----------------------------------------------------------------------
# partitions, tableaux, Kostka numbers, Schur polynomials

def as_partition(lam) -> tuple:
    """Validate and normalize a partition: weakly decreasing, trailing zeros dropped."""
    t = tuple(int(a) for a in lam)
    if any(a < 0 for a in t):
        raise ValueError("partition parts must be nonnegative")
    if any(t[i] < t[i + 1] for i in range(len(t) - 1)):
        raise ValueError("partition parts must be weakly decreasing")
    while t and t[-1] == 0:
        t = t[:-1]
    return t


def kostka_number(lam, mu) -> int:
    """Number of semistandard tableaux of shape lam and content mu.

    Counted by direct backtracking: rows weakly increase, columns strictly
    increase, letter i is used exactly mu_i times.
    """
    lam = as_partition(lam)
    mu = tuple(int(m) for m in mu)
    if any(m < 0 for m in mu):
        raise ValueError("content entries must be nonnegative")
    if sum(lam) != sum(mu):
        raise WeightMismatchError("partition size and content size differ")
    if not lam:
        return 1
    letters = len(mu)
    cells = [(r, c) for r in range(len(lam)) for c in range(lam[r])]
    grid = [[0] * lam[r] for r in range(len(lam))]
    remaining = list(mu)
    total = 0

    def fill(k):
        nonlocal total
        if k == len(cells):
            total += 1
            return
        r, c = cells[k]
        lo = grid[r][c - 1] if c else 1
        if r:
            lo = max(lo, grid[r - 1][c] + 1)
        for v in range(lo, letters + 1):
            if remaining[v - 1]:
                remaining[v - 1] -= 1
                grid[r][c] = v
                fill(k + 1)
                remaining[v - 1] += 1
        grid[r][c] = 0

    fill(0)
    return total


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def partitions_of(m: int, max_parts: int | None = None):
    """All partitions of m, largest part first, optionally with bounded length."""
    limit = m if max_parts is None else max_parts

    def rec(rest, cap, room):
        if rest == 0:
            yield ()
            return
        if room == 0:
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first, room - 1):
                yield (first,) + tail

    yield from rec(m, m, limit)


class WeightedCharacter:
    """Finite weight-multiplicity map of a representation on the torus."""

    __slots__ = ("group", "rank", "_map", "_vertices", "_fan", "_dominant")

    def __init__(self, group: str, rank: int, multiplicities):
        if group not in (GROUP_SL, GROUP_SP):
            raise ValueError(f"unknown group tag {group!r}")
        mp = {}
        for mu, c in dict(multiplicities).items():
            mu = tuple(int(a) for a in mu)
            if len(mu) != rank:
                raise ValueError("weight length does not match the rank")
            c = int(c)
            if c < 1:
                raise ValueError("multiplicities must be positive")
            mp[mu] = c
        if not mp:
            raise ValueError("empty character")
        self.group = group
        self.rank = rank
        self._map = mp
        self._vertices = None
        self._fan = None
        self._dominant = None

    @property
    def weights(self) -> tuple:
        return tuple(sorted(self._map))

    def items(self):
        return tuple(sorted(self._map.items()))

    def multiplicity(self, mu) -> int:
        return self._map.get(tuple(mu), 0)

    def dimension(self) -> int:
        return sum(self._map.values())

    def __eq__(self, other):
        if not isinstance(other, WeightedCharacter):
            return NotImplemented
        return (self.group, self.rank, self._map) == (other.group, other.rank, other._map)

    def __repr__(self):
        return f"WeightedCharacter({self.group}, rank={self.rank}, dim={self.dimension()})"


def sl_identity_character(n: int) -> WeightedCharacter:
    """Weights of the identity representation: the n coordinate characters."""
    if n < 2:
        raise ValueError("rank at least two required")
    weights = {}
    for i in range(n):
        e = [0] * n
        e[i] = 1
        weights[tuple(e)] = 1
    return WeightedCharacter(GROUP_SL, n, weights)


def sp_standard_character(n: int) -> WeightedCharacter:
    """Weights of the standard symplectic representation: plus-minus coordinates."""
    if n < 1:
        raise ValueError("rank at least one required")
    weights = {}
    for i in range(n):
        for s in (1, -1):
            e = [0] * n
            e[i] = s
            weights[tuple(e)] = 1
    return WeightedCharacter(GROUP_SP, n, weights)


@lru_cache(maxsize=None)
def _partition_character(lam: tuple, n: int) -> WeightedCharacter:
    weights = {}
    for mu in _compositions(sum(lam), n):
        k = kostka_number(lam, mu)
        if k:
            weights[mu] = k
    return WeightedCharacter(GROUP_SL, n, weights)


def sl_partition_character(lam, n: int) -> WeightedCharacter:
    """Weight multiplicities of the irreducible representation attached to a partition.

    The multiplicity of a content vector mu is the Kostka number for
    (lam, mu); contents with Kostka number zero are omitted.
    """
    lam = as_partition(lam)
    if len(lam) > n:
        raise TooManyPartsError("partition has more parts than the rank")
    return _partition_character(lam, n)


def schur_eval_tableaux(lam, z: Sequence) -> Fraction:
    """Schur polynomial value as the content-generating sum over tableaux."""
    lam = as_partition(lam)
    zs = tuple(Fraction(v) for v in z)
    n = len(zs)
    if len(lam) > n:
        raise TooManyPartsError("partition has more parts than variables")
    if not lam:
        return Fraction(1)
    total = Fraction(0)
    for mu, k in sl_partition_character(lam, n).items():
        term = Fraction(k)
        for zi, mi in zip(zs, mu):
            if mi:
                term *= zi ** mi
        total += term
    return total


def _det_fractions(rows):
    n = len(rows)
    a = [list(map(Fraction, r)) for r in rows]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            if a[r][col]:
                f = a[r][col] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


def schur_eval_bialternant(lam, z: Sequence) -> Fraction:
    """Schur polynomial value as a ratio of alternant determinants."""
    lam = as_partition(lam)
    zs = tuple(Fraction(v) for v in z)
    n = len(zs)
    if len(lam) > n:
        raise TooManyPartsError("partition has more parts than variables")
    if len(set(zs)) != n:
        raise RepeatedValuesError("bialternant requires pairwise distinct values")
    padded = lam + (0,) * (n - len(lam))
    num = _det_fractions([[zj ** (padded[i] + n - 1 - i) for zj in zs] for i in range(n)])
    den = _det_fractions([[zj ** (n - 1 - i) for zj in zs] for i in range(n)])
    return num / den


def schur_eval(lam, z: Sequence) -> Fraction:
    """Evaluate by both routes and insist that they agree."""
    a = schur_eval_tableaux(lam, z)
    b = schur_eval_bialternant(lam, z)
    if a != b:
        raise ArithmeticError(f"tableau and bialternant evaluations differ: {a} vs {b}")
    return a


# ----------------------------------------------------------------------
# Weyl elements, cones, fans

@dataclass(frozen=True)
class WeylElement:
    """A (signed) permutation: index i goes to perm[i] with sign signs[i]."""

    perm: tuple
    signs: tuple

    def apply(self, vec):
        out = [0] * len(vec)
        for i, (p, s) in enumerate(zip(self.perm, self.signs)):
            out[p] = vec[i] if s == 1 else -vec[i]
        return tuple(out)

    def compose(self, other: "WeylElement") -> "WeylElement":
        """First apply other, then self."""
        n = len(self.perm)
        perm = [0] * n
        signs = [1] * n
        for i in range(n):
            perm[i] = self.perm[other.perm[i]]
            signs[i] = other.signs[i] * self.signs[other.perm[i]]
        return WeylElement(tuple(perm), tuple(signs))

    @classmethod
    def identity(cls, n: int) -> "WeylElement":
        return cls(tuple(range(n)), (1,) * n)


def weyl_elements(group: str, n: int):
    """All Weyl elements: permutations, or signed permutations for the symplectic type."""
    if group == GROUP_SL:
        for perm in itertools.permutations(range(n)):
            yield WeylElement(perm, (1,) * n)
    elif group == GROUP_SP:
        for perm in itertools.permutations(range(n)):
            for signs in itertools.product((1, -1), repeat=n):
                yield WeylElement(perm, signs)
    else:
        raise ValueError(f"unknown group tag {group!r}")


def _canonical_functional(row) -> tuple:
    from math import gcd
    g = 0
    for c in row:
        g = gcd(g, abs(c))
    if g > 1:
        row = tuple(c // g for c in row)
    return tuple(row)


@dataclass(frozen=True)
class Cone:
    """Closed polyhedral cone in H-representation: all functionals nonnegative."""

    functionals: tuple

    def contains(self, coords) -> bool:
        return all(sum(c * x for c, x in zip(f, coords)) >= 0
                   for f in self.functionals)

    @property
    def ambient_dim(self) -> int:
        return len(self.functionals[0]) if self.functionals else 0


@dataclass(frozen=True)
class FanCone:
    vertex: tuple
    cone: Cone


@dataclass(frozen=True)
class Fan:
    """Maximal cones of a complete fan, each tagged with its extreme weight."""

    group: str
    rank: int
    maximal_cones: tuple

    def __len__(self):
        return len(self.maximal_cones)


def point_coords(x, rank: int) -> tuple:
    """Coordinates of an apartment point, symplectic point, or raw sequence."""
    if isinstance(x, ApartmentPoint):
        cs = x.coords
    elif hasattr(x, "coords"):
        cs = x.coords
    else:
        cs = tuple(Fraction(c) for c in x)
    if len(cs) != rank:
        raise DimensionMismatchError("point dimension does not match the rank")
    return cs


def weight_eval(mu, coords) -> Fraction:
    return sum((Fraction(m) * c for m, c in zip(mu, coords)), Fraction(0))


def dominant_weight(char: WeightedCharacter) -> tuple:
    """The extreme weight that dominates a regular point of the leading chamber."""
    if char._dominant is None:
        probe = tuple(Fraction(char.rank - i) for i in range(char.rank))
        best = None
        best_val = None
        tie = False
        for mu in char.weights:
            val = weight_eval(mu, probe)
            if best_val is None or val > best_val:
                best, best_val, tie = mu, val, False
            elif val == best_val:
                tie = True
        if tie:
            raise ValueError("character has no unique leading extreme weight")
        char._dominant = best
    return char._dominant


def _check_weyl(char: WeightedCharacter, w: WeylElement):
    if len(w.perm) != char.rank:
        raise TypeMismatchError("Weyl element rank does not match the character")
    if char.group == GROUP_SL and any(s != 1 for s in w.signs):
        raise TypeMismatchError("signed permutations act only on the symplectic type")


def _cone_of_vertex(char: WeightedCharacter, mu0) -> Cone:
    fns = set()
    for mu in char.weights:
        if mu == mu0:
            continue
        fns.add(_canonical_functional(tuple(a - b for a, b in zip(mu0, mu))))
    return Cone(tuple(sorted(fns)))


def dominance_cone(char: WeightedCharacter, w: WeylElement) -> Cone:
    """Locus where the w-image of the leading extreme weight dominates all weights."""
    _check_weyl(char, w)
    return _cone_of_vertex(char, w.apply(dominant_weight(char)))


def weight_fan(char: WeightedCharacter) -> Fan:
    """All dominance cones, one per extreme weight in the Weyl orbit."""
    if char._fan is None:
        dom = dominant_weight(char)
        seen = {}
        for w in weyl_elements(char.group, char.rank):
            mu0 = w.apply(dom)
            if mu0 not in seen:
                seen[mu0] = _cone_of_vertex(char, mu0)
        char._fan = Fan(char.group, char.rank,
                        tuple(FanCone(v, seen[v]) for v in sorted(seen)))
    return char._fan


def polytope_vertices(char: WeightedCharacter) -> frozenset:
    """Weights exposed by some linear functional, by strict feasibility."""
    if char._vertices is None:
        verts = []
        ws = char.weights
        for mu in ws:
            rows = [tuple(a - b for a, b in zip(mu, nu)) for nu in ws if nu != mu]
            if strictly_feasible(rows):
                verts.append(mu)
        char._vertices = frozenset(verts)
    return char._vertices


def normal_cone_member(char: WeightedCharacter, mu, x) -> bool:
    """Is x in the normal cone of the given polytope vertex?"""
    mu = tuple(int(a) for a in mu)
    if mu not in polytope_vertices(char):
        raise NotAVertexError(f"{mu} is not a vertex of the weight polytope")
    coords = point_coords(x, char.rank)
    top = weight_eval(mu, coords)
    return all(weight_eval(nu, coords) <= top for nu in char.weights)


# ----------------------------------------------------------------------
# tropical character hypersurface and fan skeleton

def tropical_hypersurface_member(char: WeightedCharacter, field, x) -> bool:
    """Tie detection for the tropicalized character.

    Each weight contributes minus the p-adic valuation of its multiplicity
    plus the pairing with x; membership means the maximum is attained at
    least twice.  Multiplicities are read in characteristic zero.
    """
    p = field.p if isinstance(field, FieldSpec) else int(field)
    coords = point_coords(x, char.rank)
    best = None
    count = 0
    for mu, c in char.items():
        t = weight_eval(mu, coords) - int_valuation(c, p)
        if best is None or t > best:
            best, count = t, 1
        elif t == best:
            count += 1
    return count >= 2


def skeleton_member(fan: Fan, x) -> bool:
    """Is x in at least two distinct maximal cones of the fan?"""
    coords = point_coords(x, fan.rank)
    hits = 0
    for fc in fan.maximal_cones:
        if fc.cone.contains(coords):
            hits += 1
            if hits >= 2:
                return True
    return False


def weyl_cone(group: str, n: int, w: WeylElement) -> Cone:
    """The w-image of the leading Weyl chamber, as an H-representation."""
    base = []
    if group == GROUP_SL:
        for i in range(n - 1):
            row = [0] * n
            row[i], row[i + 1] = 1, -1
            base.append(tuple(row))
    elif group == GROUP_SP:
        for i in range(n - 1):
            row = [0] * n
            row[i], row[i + 1] = 1, -1
            base.append(tuple(row))
        last = [0] * n
        last[n - 1] = 1
        base.append(tuple(last))
    else:
        raise ValueError(f"unknown group tag {group!r}")
    return Cone(tuple(sorted(_canonical_functional(w.apply(f)) for f in base)))


def canonical_weight(group: str, mu) -> tuple:
    """Canonical representative: for the special linear type, last coordinate zero."""
    mu = tuple(int(a) for a in mu)
    if group == GROUP_SL and mu:
        last = mu[-1]
        if last:
            mu = tuple(a - last for a in mu)
    return mu
