import random

import pytest

from colourgl.grading import (CommutativeFactor, GradingGroup, ShapeError,
                              has_unit_modulus_property, omega_eval,
                              omega_parity, superalgebra_factor)
from colourgl.scalars import MINUS_ONE, ONE, Q


def random_degree(group, rng, span=5):
    coords = [rng.randint(-span, span) for _ in range(group.free_rank)]
    coords += [rng.randint(0, 1) for _ in range(group.torsion2_rank)]
    return group.degree(*coords)


def test_superalgebra_factor_values():
    factor = superalgebra_factor()
    g = factor.group
    one = g.degree(1)
    assert omega_eval(factor, one, one) == MINUS_ONE
    assert omega_eval(factor, g.zero(), one) == ONE
    assert omega_parity(factor, one) == -1
    assert omega_parity(factor, g.zero()) == 1


def test_q_form_example():
    group = GradingGroup(2, 0)
    factor = CommutativeFactor(group, ((0, 0), (0, 0)), ((0, 1), (-1, 0)))
    a, b = group.degree(1, 0), group.degree(0, 1)
    assert omega_eval(factor, a, b) == Q
    assert omega_eval(factor, b, a) == Q.inverse()
    assert omega_parity(factor, a) == 1


def test_unit_modulus_property():
    group = GradingGroup(2, 0)
    zero = ((0, 0), (0, 0))
    signs = ((1, 1), (1, 0))
    assert has_unit_modulus_property(CommutativeFactor(group, signs, zero))
    skew = ((0, 1), (-1, 0))
    assert not has_unit_modulus_property(CommutativeFactor(group, zero, skew))
    trivial = CommutativeFactor.trivial(GradingGroup(0, 0))
    assert has_unit_modulus_property(trivial)


def test_bicharacter_axioms_random():
    rng = random.Random(3)
    group = GradingGroup(2, 2)
    factor = CommutativeFactor(
        group,
        ((1, 0, 1, 0), (0, 0, 0, 1), (1, 0, 1, 1), (0, 1, 1, 0)),
        ((0, 2, 0, 0), (-2, 0, 0, 0), (0, 0, 0, 0), (0, 0, 0, 0)))
    for _ in range(200):
        a, b, c = (random_degree(group, rng) for _ in range(3))
        assert factor.omega(a, b + c) == factor.omega(a, b) * factor.omega(a, c)
        assert factor.omega(a + b, c) == factor.omega(a, c) * factor.omega(b, c)
        assert (factor.omega(a, b) * factor.omega(b, a)).is_one()
        assert (factor.omega(a, a) ** 2).is_one()
        assert factor.omega(group.zero(), b).is_one()


def test_torsion_reduction_and_arithmetic():
    group = GradingGroup(1, 1)
    a = group.degree(2, 3)
    assert a.coords == (2, 1)
    b = group.degree(-1, 1)
    assert (a + b).coords == (1, 0)
    assert (a - b).coords == (3, 0)
    assert (-a).coords == (-2, 1)
    assert group.degree(0, 0).is_zero()


def test_validation_errors():
    group = GradingGroup(2, 1)
    with pytest.raises(ShapeError):
        group.degree(1)
    ok_s = ((0, 0, 0), (0, 0, 0), (0, 0, 1))
    ok_b = ((0, 1, 0), (-1, 0, 0), (0, 0, 0))
    CommutativeFactor(group, ok_s, ok_b)
    with pytest.raises(ValueError):
        CommutativeFactor(group, ((0, 1, 0), (0, 0, 0), (0, 0, 0)), ok_b)
    with pytest.raises(ValueError):
        CommutativeFactor(group, ok_s, ((0, 1, 0), (1, 0, 0), (0, 0, 0)))
    with pytest.raises(ValueError):
        # q-exponents are not allowed on torsion coordinates
        CommutativeFactor(group, ok_s,
                          ((0, 0, 1), (0, 0, 0), (-1, 0, 0)))
    other = GradingGroup(1, 0)
    factor = CommutativeFactor(group, ok_s, ok_b)
    with pytest.raises(ShapeError):
        factor.omega(other.degree(1), group.degree(0, 0, 0))


def test_json_round_trip():
    group = GradingGroup(1, 1)
    factor = CommutativeFactor(group, ((1, 0), (0, 1)), ((0, 0), (0, 0)))
    doc = factor.to_json()
    assert CommutativeFactor.from_json(doc) == factor
    with pytest.raises(ValueError):
        CommutativeFactor.from_json({"free_rank": 1})
