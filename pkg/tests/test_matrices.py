import random
from fractions import Fraction

import pytest

from tropstab import sampling
from tropstab.errors import DimensionMismatchError, DomainError, SingularMatrixError
from tropstab.fields import FieldSpec
from tropstab.matrices import FieldMatrix, perm_sign

Q2 = FieldSpec("Qp", 2)
Q5 = FieldSpec("Qp", 5)
F3T = FieldSpec("FpT", 3)


def test_perm_sign():
    assert perm_sign((0, 1, 2)) == 1
    assert perm_sign((1, 0, 2)) == -1
    assert perm_sign((1, 2, 0)) == 1


def test_constructor_rejects_non_square():
    with pytest.raises(DimensionMismatchError):
        FieldMatrix(Q2, [[1, 2]])
    with pytest.raises(DimensionMismatchError):
        FieldMatrix(Q2, [])


def test_determinant_small_cases():
    assert FieldMatrix(Q5, [[1, 2], [3, 4]]).determinant() == Q5.element(-2)
    assert FieldMatrix.identity(Q5, 4).determinant() == Q5.one()
    t = F3T.uniformizer()
    m = FieldMatrix(F3T, [[t, 1], [0, t.inv()]])
    assert m.determinant() == F3T.one()


def test_determinant_multiplicative():
    rng = random.Random(7)
    for spec in (Q2, F3T):
        for _ in range(10):
            a = sampling.random_sl(spec, 3, rng, 4)
            b = sampling.random_sl(spec, 3, rng, 4)
            assert (a * b).determinant() == a.determinant() * b.determinant()


def test_sampled_words_have_determinant_one():
    rng = random.Random(17)
    for spec in (Q2, Q5, F3T):
        for n in (2, 3, 4):
            for _ in range(5):
                assert sampling.random_sl(spec, n, rng).determinant() == spec.one()
                assert sampling.random_sl_integral(spec, n, rng).determinant() == spec.one()


def test_inverse_round_trip():
    rng = random.Random(23)
    for spec in (Q5, F3T):
        for _ in range(8):
            g = sampling.random_sl(spec, 3, rng, 4)
            assert g * g.inverse() == FieldMatrix.identity(spec, 3)
            assert g.inverse() * g == FieldMatrix.identity(spec, 3)


def test_inverse_of_singular():
    with pytest.raises(SingularMatrixError):
        FieldMatrix(Q2, [[1, 1], [1, 1]]).inverse()


def test_residue_matrix():
    m = FieldMatrix(Q5, [[Fraction(7, 2), 5], [0, 1]])
    assert m.residue() == ((1, 0), (0, 1))
    with pytest.raises(DomainError):
        FieldMatrix(Q5, [[Fraction(1, 5), 0], [0, 5]]).residue()


def test_integrality():
    assert FieldMatrix(Q2, [[1, 3], [5, 7]]).is_integral()
    assert not FieldMatrix(Q2, [[Fraction(1, 2), 0], [0, 2]]).is_integral()
