import random
from fractions import Fraction

import pytest

from tropstab import sampling
from tropstab.apartment import (ApartmentPoint, MonomialMatrix, face_address,
                                in_star_of_origin, normalizer_action, origin,
                                parahoric_oracle, stabilizer_membership,
                                translation_point)
from tropstab.errors import DeterminantNotOneError, OutOfStarError
from tropstab.fields import FieldSpec
from tropstab.matrices import FieldMatrix
from tropstab.suites import face_point, ordered_set_partitions

Q2 = FieldSpec("Qp", 2)
Q5 = FieldSpec("Qp", 5)
F3T = FieldSpec("FpT", 3)


def test_points_are_classes_modulo_diagonal():
    a = ApartmentPoint((1, 2, 3))
    b = ApartmentPoint((0, 1, 2))
    assert a == b
    assert sum(a.coords) == 0
    assert a != ApartmentPoint((0, 0, 0))


def test_translation_point_examples():
    p = Q5.uniformizer()
    assert translation_point([p, p.inv()]) == ApartmentPoint((-1, 1))
    assert translation_point([Q5.one()] * 3) == origin(3)
    t = F3T.uniformizer()
    assert translation_point([t, t, t ** -2]) == ApartmentPoint((-1, -1, 2))


def test_translation_point_requires_determinant_one():
    p = Q5.uniformizer()
    with pytest.raises(DeterminantNotOneError):
        translation_point([p, Q5.one()])


def test_translation_point_accepts_diagonal_matrix():
    p = Q5.uniformizer()
    m = FieldMatrix.diagonal(Q5, [p, p.inv()])
    assert translation_point(m) == ApartmentPoint((-1, 1))
    with pytest.raises(ValueError):
        translation_point(FieldMatrix(Q5, [[1, 1], [0, 1]]))


def test_normalizer_action_cases():
    perm = MonomialMatrix(Q2, (1, 2, 0), (Q2.one(),) * 3)
    x = ApartmentPoint((Fraction(1), Fraction(2), Fraction(-3)))
    moved = normalizer_action(perm, x)
    assert moved == ApartmentPoint((Fraction(-3), Fraction(1), Fraction(2)))

    p = Q2.uniformizer()
    trans = MonomialMatrix(Q2, (0, 1), (p, p.inv()))
    assert normalizer_action(trans, origin(2)) == translation_point([p, p.inv()])

    anti = MonomialMatrix.from_matrix(FieldMatrix(Q2, [[0, 1], [-1, 0]]))
    x = ApartmentPoint((Fraction(1, 2), Fraction(-1, 2)))
    assert normalizer_action(anti, x) == ApartmentPoint((Fraction(-1, 2), Fraction(1, 2)))


def test_monomial_from_matrix_round_trip():
    rng = random.Random(3)
    for _ in range(10):
        mono = sampling.random_monomial(Q5, 3, rng)
        again = MonomialMatrix.from_matrix(mono.to_matrix())
        assert again == mono


def test_face_address_examples():
    assert all(kind == "wall" for (_, _, kind, _) in face_address(origin(3)).relations)
    a = face_address(ApartmentPoint((Fraction(1, 4), Fraction(-1, 4))))
    assert a.relations == ((0, 1, "strip", 0),)
    b = face_address(ApartmentPoint((Fraction(1, 3), 0, Fraction(-1, 3))))
    assert all(kind == "strip" and m == 0 for (_, _, kind, m) in b.relations)


def test_face_address_separates_faces():
    assert face_address(origin(2)) != face_address(ApartmentPoint((Fraction(1, 4), 0)))
    assert face_address(ApartmentPoint((Fraction(1, 4), 0))) != \
        face_address(ApartmentPoint((0, Fraction(1, 4))))


def test_stabilizer_at_origin_is_integrality():
    rng = random.Random(11)
    for spec in (Q2, F3T):
        for _ in range(40):
            g = sampling.random_sl(spec, 3, rng, 5)
            assert stabilizer_membership(g, origin(3)) == g.is_integral()


def test_stabilizer_at_translate_is_conjugated_integrality():
    rng = random.Random(13)
    p = Q2.uniformizer()
    diag = [p ** 2, p.inv(), p.inv()]
    t = FieldMatrix.diagonal(Q2, diag)
    x = translation_point(diag)
    for _ in range(40):
        g = sampling.random_sl(Q2, 3, rng, 5)
        conj = t.inverse() * g * t
        assert stabilizer_membership(g, x) == conj.is_integral()


def test_iwahori_point():
    rng = random.Random(17)
    x = ApartmentPoint((Fraction(1, 4), Fraction(-1, 4)))
    for _ in range(60):
        g = sampling.random_sl(Q2, 2, rng, 5)
        explicit = (g.rows[0][0].valuation() >= 0
                    and g.rows[0][1].valuation() >= 0
                    and g.rows[1][1].valuation() >= 0
                    and g.rows[1][0].valuation() >= 1)
        assert stabilizer_membership(g, x) == explicit


def test_parahoric_at_origin_is_integrality():
    rng = random.Random(19)
    for _ in range(30):
        g = sampling.random_sl(Q5, 3, rng, 5)
        assert parahoric_oracle(g, origin(3)) == g.is_integral()


def test_parahoric_outside_star_raises():
    with pytest.raises(OutOfStarError):
        parahoric_oracle(FieldMatrix.identity(Q2, 2), ApartmentPoint((1, 0)))


def test_parahoric_agrees_on_partial_flag():
    rng = random.Random(23)
    eps = Fraction(1, 5)
    x = ApartmentPoint((eps, eps, -2 * eps))
    for _ in range(200):
        g = (sampling.random_sl_integral(Q2, 3, rng)
             if rng.random() < 0.5 else sampling.random_sl(Q2, 3, rng))
        assert parahoric_oracle(g, x) == stabilizer_membership(g, x)


def test_parahoric_agrees_on_every_face_of_star():
    rng = random.Random(29)
    for n in (2, 3):
        for blocks in ordered_set_partitions(range(n)):
            x = face_point(blocks, n)
            assert in_star_of_origin(x.coords)
            for _ in range(25):
                g = (sampling.random_sl_integral(F3T, n, rng)
                     if rng.random() < 0.5 else sampling.random_sl(F3T, n, rng))
                assert parahoric_oracle(g, x) == stabilizer_membership(g, x)


def test_equivariance_under_normalizer():
    rng = random.Random(31)
    for _ in range(40):
        n = rng.choice((2, 3))
        g = sampling.random_sl(Q2, n, rng, 4)
        mono = sampling.random_monomial(Q2, n, rng)
        x = ApartmentPoint(sampling.random_point(rng, n))
        m = mono.to_matrix()
        assert stabilizer_membership(g, x) == \
            stabilizer_membership(m * g * m.inverse(), normalizer_action(mono, x))


def test_stabilizer_group_property():
    rng = random.Random(37)
    x = ApartmentPoint((Fraction(1, 2), 0, Fraction(-1, 2)))
    for _ in range(20):
        g = sampling.random_stabilizing(Q5, x.coords, rng)
        h = sampling.random_stabilizing(Q5, x.coords, rng)
        assert stabilizer_membership(g, x) and stabilizer_membership(h, x)
        assert stabilizer_membership(g * h, x)
        assert stabilizer_membership(g.inverse(), x)
