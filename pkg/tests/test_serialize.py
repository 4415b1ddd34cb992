import random
from fractions import Fraction

import pytest

from tropstab import sampling
from tropstab.fields import FieldSpec
from tropstab.serialize import (InputError, element_from_json, element_to_json,
                                fraction_from_json, fraction_to_str,
                                matrix_from_json, matrix_to_json,
                                point_from_json, point_to_json, spec_from_json,
                                spec_to_json, trop_from_json, trop_to_json)
from tropstab.tropical import NEG_INF

Q5 = FieldSpec("Qp", 5)
F3T = FieldSpec("FpT", 3)


def test_fraction_strings():
    assert fraction_to_str(Fraction(7, 2)) == "7/2"
    assert fraction_to_str(Fraction(-4)) == "-4"
    assert fraction_from_json("7/2") == Fraction(7, 2)
    assert fraction_from_json(3) == Fraction(3)
    with pytest.raises(InputError):
        fraction_from_json("1/0")
    with pytest.raises(InputError):
        fraction_from_json(True)


def test_trop_scalar_round_trip():
    assert trop_to_json(NEG_INF) == "-inf"
    assert trop_from_json("-inf") is NEG_INF
    assert trop_from_json(trop_to_json(Fraction(-3, 4))) == Fraction(-3, 4)


def test_spec_round_trip():
    for spec in (Q5, F3T):
        assert spec_from_json(spec_to_json(spec)) == spec
    with pytest.raises(InputError):
        spec_from_json({"kind": "Qp"})


def test_qp_element_round_trip():
    e = Q5.element(Fraction(-7, 10))
    assert element_to_json(e) == "-7/10"
    assert element_from_json(Q5, "-7/10") == e


def test_fpt_element_round_trip():
    t = F3T.uniformizer()
    e = (t ** 2 + 1) / (t + 2)
    data = element_to_json(e)
    assert set(data) == {"num", "den"}
    assert element_from_json(F3T, data) == e
    assert element_from_json(F3T, 2) == F3T.element(2)
    assert element_from_json(F3T, "1/2") == F3T.element(Fraction(1, 2))


def test_matrix_round_trip():
    rng = random.Random(1)
    for spec in (Q5, F3T):
        g = sampling.random_sl(spec, 3, rng)
        assert matrix_from_json(spec, matrix_to_json(g)) == g
    with pytest.raises(InputError):
        matrix_from_json(Q5, "nope")


def test_point_round_trip():
    coords = (Fraction(1, 2), NEG_INF, Fraction(-3))
    assert point_from_json(point_to_json(coords)) == list(coords)
    with pytest.raises(InputError):
        point_from_json([])
