import random
from fractions import Fraction

import pytest

from tropstab import sampling
from tropstab.apartment import ApartmentPoint, origin, stabilizer_membership
from tropstab.compactification import (BoundaryPoint, FanDirection,
                                       boundary_block_oracle,
                                       boundary_point_from_direction,
                                       boundary_stabilizes,
                                       direction_for_stratum, permute_boundary,
                                       sp_boundary_point,
                                       sp_boundary_stabilizes, stratum)
from tropstab.errors import (AllInfiniteError, DeterminantNotOneError,
                             InvalidDirectionError, NotSymplecticError)
from tropstab.fields import FieldSpec
from tropstab.matrices import FieldMatrix
from tropstab.symplectic import SpApartmentPoint, sp_stabilizer_membership
from tropstab.tropical import NEG_INF, stabilizes_tropically
from tropstab.weights import sl_identity_character, sp_standard_character, weight_fan

Q2 = FieldSpec("Qp", 2)
Q5 = FieldSpec("Qp", 5)
F3T = FieldSpec("FpT", 3)


def test_stratum_examples():
    assert stratum((0, NEG_INF, 3)) == frozenset({0, 2})
    assert stratum((Fraction(1, 2), 1, 0)) == frozenset({0, 1, 2})
    assert stratum((NEG_INF, 0)) == frozenset({1})
    with pytest.raises(AllInfiniteError):
        stratum((NEG_INF, NEG_INF))


def test_boundary_point_canonical_form():
    b = BoundaryPoint((3, NEG_INF, 5))
    assert b.coords == (0, NEG_INF, 2)
    assert b.stratum == frozenset({0, 2})
    assert b == BoundaryPoint((Fraction(-1), NEG_INF, 1))
    assert b != BoundaryPoint((0, NEG_INF, 3))


def test_fan_direction_validation():
    fan = weight_fan(sl_identity_character(3))
    top = next(fc for fc in fan.maximal_cones if fc.vertex == (1, 0, 0))
    FanDirection(top.cone, (2, 1, 0))
    with pytest.raises(InvalidDirectionError):
        FanDirection(top.cone, (0, 1, 0))


def test_boundary_point_from_direction_examples():
    n = 3
    x = ApartmentPoint((Fraction(5), Fraction(7), Fraction(11)))
    interior = direction_for_stratum({0}, n)
    b = boundary_point_from_direction(x, interior)
    assert b.coords == (0, NEG_INF, NEG_INF)

    pair = direction_for_stratum({0, 1}, n)
    b2 = boundary_point_from_direction(origin(3), pair)
    assert b2.coords == (0, 0, NEG_INF)

    trivial = direction_for_stratum({0, 1, 2}, n)
    b3 = boundary_point_from_direction(x, trivial)
    assert b3.stratum == frozenset({0, 1, 2})
    assert b3 == BoundaryPoint(x.coords)


def test_direction_for_stratum_rejects_bad_input():
    with pytest.raises(InvalidDirectionError):
        direction_for_stratum(set(), 3)
    with pytest.raises(InvalidDirectionError):
        direction_for_stratum({5}, 3)


def test_boundary_stabilizes_half_infinite_case():
    rng = random.Random(3)
    b = BoundaryPoint((0, NEG_INF))
    for _ in range(120):
        g = (sampling.random_block_triangular(Q2, 2, [0], rng)
             if rng.random() < 0.5 else sampling.random_sl(Q2, 2, rng, 4))
        explicit = g.rows[1][0].is_zero() and \
            (not g.rows[0][0].is_zero()) and g.rows[0][0].valuation() == 0
        assert boundary_stabilizes(g, b) == explicit


def test_identity_stabilizes_every_boundary_point():
    identity = FieldMatrix.identity(Q5, 3)
    for coords in ((0, NEG_INF, NEG_INF), (NEG_INF, 2, Fraction(1, 2)),
                   (1, 2, 3)):
        assert boundary_stabilizes(identity, BoundaryPoint(coords))


def test_full_stratum_reduces_to_plain_stabilization():
    rng = random.Random(5)
    for _ in range(60):
        n = rng.choice((2, 3))
        x = sampling.random_point(rng, n)
        g = sampling.random_sl(Q2, n, rng, 4)
        assert boundary_stabilizes(g, BoundaryPoint(x)) == \
            stabilizes_tropically(g, x)


def test_boundary_requires_determinant_one():
    with pytest.raises(DeterminantNotOneError):
        boundary_stabilizes(FieldMatrix.diagonal(Q2, [2, 1]),
                            BoundaryPoint((0, NEG_INF)))


def test_block_oracle_equivalence():
    rng = random.Random(7)
    for spec in (Q2, F3T):
        for n in (2, 3):
            strata = [s for k in range(1, n + 1)
                      for s in __import__("itertools").combinations(range(n), k)]
            for inside in strata:
                for _ in range(30):
                    coords = [NEG_INF] * n
                    for i in inside:
                        coords[i] = Fraction(rng.randint(-3, 3), rng.choice((1, 2)))
                    b = BoundaryPoint(coords)
                    g = (sampling.random_block_triangular(spec, n, inside, rng)
                         if rng.random() < 0.5
                         else sampling.random_sl(spec, n, rng, 4))
                    assert boundary_stabilizes(g, b) == boundary_block_oracle(g, b)


def test_boundary_group_property():
    rng = random.Random(9)
    b = BoundaryPoint((0, Fraction(1, 2), NEG_INF))
    hits = 0
    for _ in range(200):
        g = sampling.random_block_triangular(Q2, 3, [0, 1], rng)
        h = sampling.random_block_triangular(Q2, 3, [0, 1], rng)
        if boundary_stabilizes(g, b) and boundary_stabilizes(h, b):
            hits += 1
            assert boundary_stabilizes(g * h, b)
            assert boundary_stabilizes(g.inverse(), b)
    assert hits > 0


def test_monomial_equivariance():
    rng = random.Random(11)
    for _ in range(60):
        n = rng.choice((2, 3))
        inside = rng.choice([s for k in range(1, n + 1)
                             for s in __import__("itertools").combinations(range(n), k)])
        coords = [NEG_INF] * n
        for i in inside:
            coords[i] = Fraction(rng.randint(-2, 2))
        b = BoundaryPoint(coords)
        mono = sampling.random_monomial(Q2, n, rng)
        g = (sampling.random_block_triangular(Q2, n, inside, rng)
             if rng.random() < 0.5 else sampling.random_sl(Q2, n, rng, 4))
        m = mono.to_matrix()
        assert boundary_stabilizes(g, b) == \
            boundary_stabilizes(m * g * m.inverse(), permute_boundary(b, mono.perm))


def test_limit_coherence_one_directional():
    rng = random.Random(13)
    n = 3
    hits = 0
    for _ in range(100):
        stratum_set = rng.choice([(0,), (1,), (2,), (0, 1), (0, 2), (1, 2)])
        d = direction_for_stratum(stratum_set, n)
        x = ApartmentPoint(tuple(Fraction(rng.randint(-2, 2)) for _ in range(n)))
        g = sampling.random_ray_stabilizing(Q2, x.coords, d.point, rng)
        along = all(
            stabilizes_tropically(g, tuple(c + s * v
                                           for c, v in zip(x.coords, d.point)))
            for s in range(11))
        if along:
            hits += 1
            assert boundary_stabilizes(g, boundary_point_from_direction(x, d))
    assert hits > 0


def test_converse_of_limit_coherence_fails():
    # stabilizing the limit does not require stabilizing the ray: this
    # matrix fixes (0, -inf) but moves the ray's base point (0, 0)
    p = Q2.uniformizer()
    g = FieldMatrix(Q2, [[1, p.inv()], [0, 1]])
    b = BoundaryPoint((0, NEG_INF))
    assert boundary_stabilizes(g, b)
    assert not stabilizes_tropically(g, (0, 0))


# ----------------------------------------------------------------------
# symplectic boundary

def _sp4_direction(c):
    fan = weight_fan(sp_standard_character(2))
    cone = next(fc.cone for fc in fan.maximal_cones if fc.cone.contains(c))
    return FanDirection(cone, c)


def test_sp_boundary_point_examples():
    x = SpApartmentPoint((0, 0))
    d = _sp4_direction((Fraction(1), Fraction(0)))
    b = sp_boundary_point(x, d)
    assert b.coords == (0, NEG_INF, NEG_INF, NEG_INF)

    ray = _sp4_direction((Fraction(1), Fraction(1)))
    b2 = sp_boundary_point(SpApartmentPoint((Fraction(1, 2), 0)), ray)
    assert b2.coords == (0, Fraction(-1, 2), NEG_INF, NEG_INF)

    trivial = _sp4_direction((Fraction(0), Fraction(0)))
    b3 = sp_boundary_point(x, trivial)
    assert b3.stratum == frozenset(range(4))


def test_sp_rank_one_boundary_matches_special_linear():
    rng = random.Random(17)
    fan = weight_fan(sp_standard_character(1))
    cone = next(fc.cone for fc in fan.maximal_cones if fc.vertex == (1,))
    d = FanDirection(cone, (Fraction(1),))
    x = SpApartmentPoint((0,))
    for _ in range(60):
        g = sampling.random_sp(Q2, 1, rng)
        expected = boundary_stabilizes(g, BoundaryPoint((0, NEG_INF)))
        assert sp_boundary_stabilizes(g, x, d) == expected


def test_sp_trivial_direction_reduces_to_stabilizer():
    rng = random.Random(19)
    d = _sp4_direction((Fraction(0), Fraction(0)))
    for _ in range(40):
        g = sampling.random_sp(Q2, 2, rng)
        x = SpApartmentPoint(sampling.random_point(rng, 2))
        assert sp_boundary_stabilizes(g, x, d) == sp_stabilizer_membership(g, x)


def test_sp_boundary_requires_symplectic():
    d = _sp4_direction((Fraction(1), Fraction(0)))
    with pytest.raises(NotSymplecticError):
        sp_boundary_stabilizes(FieldMatrix.diagonal(Q2, [2, 1, 1, 1]),
                               SpApartmentPoint((0, 0)), d)


def test_sp_limit_coherence():
    rng = random.Random(23)
    hits = 0
    for c in ((Fraction(1), Fraction(0)), (Fraction(1), Fraction(1)),
              (Fraction(0), Fraction(-1)), (Fraction(-1), Fraction(1))):
        d = _sp4_direction(c)
        for _ in range(30):
            x = SpApartmentPoint(tuple(Fraction(rng.randint(-1, 1))
                                       for _ in range(2)))
            g = sampling.random_sp_ray_adapted(Q2, 2, x.coords, d.point, rng)
            along = all(
                sp_stabilizer_membership(
                    g, SpApartmentPoint(tuple(b + s * v
                                              for b, v in zip(x.coords, d.point))))
                for s in range(11))
            if along:
                hits += 1
                assert sp_boundary_stabilizes(g, x, d)
    assert hits > 0
