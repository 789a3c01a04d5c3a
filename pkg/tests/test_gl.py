import itertools
import random
from fractions import Fraction

import pytest

from colourgl.gl import (GlElement, GradedSpace, SpaceMismatch, basis_weight,
                         bilinear_form, bracket, jacobi_defect,
                         pbw_dimension_nilradical, positive_roots, rho,
                         skew_defect, supertrace, weight_inner, weyl_orbit)
from colourgl.presets import super_space
from colourgl.scalars import ONE, Scalar


def units(space):
    return [GlElement.matrix_unit(space, a, b)
            for a in range(space.dim) for b in range(space.dim)]


def test_distinguished_order(glq21, z2z2_all):
    assert glq21.parities == (1, 1, -1)
    # even components always precede odd ones regardless of input order
    assert all(p == 1 for p in z2z2_all.parities)


def test_cartan_bracket_rule(super21):
    space = super21
    for a in range(space.dim):
        h = GlElement.matrix_unit(space, a, a)
        assert bracket(h, h).is_zero()
        for c in range(space.dim):
            for d in range(space.dim):
                e = GlElement.matrix_unit(space, c, d)
                expected = e.scale(Scalar.from_rational(
                    int(a == c) - int(a == d)))
                assert bracket(h, e) == expected


def test_gl11_bracket(super11):
    e01 = GlElement.matrix_unit(super11, 0, 1)
    e10 = GlElement.matrix_unit(super11, 1, 0)
    result = bracket(e01, e10)
    expected = GlElement(super11, {(0, 0): ONE, (1, 1): ONE})
    assert result == expected


def test_jacobi_and_skew_exhaustive(super11, super21):
    for space in (super11, super21):
        us = units(space)
        for x, y in itertools.product(us, repeat=2):
            assert skew_defect(x, y).is_zero()
        for x, y, z in itertools.product(us, repeat=3):
            assert jacobi_defect(x, y, z).is_zero()


def test_jacobi_random_combinations(glq11, super22):
    rng = random.Random(5)
    for space in (glq11, super22):
        us = units(space)
        by_degree = {}
        for u in us:
            by_degree.setdefault(u.degree(), []).append(u)
        degrees = sorted(by_degree, key=lambda d: d.coords)
        for _ in range(30):
            # random homogeneous combinations within a fixed degree
            def combo():
                deg = rng.choice(degrees)
                out = GlElement(space)
                for u in by_degree[deg]:
                    out = out + u.scale(
                        Scalar.from_rational(rng.randint(-2, 2)))
                return out if not out.is_zero() else by_degree[deg][0]
            x, y = combo(), combo()
            z = rng.choice(us) + rng.choice(us)
            assert jacobi_defect(x, y, z).is_zero()
            assert skew_defect(x, y).is_zero()


def test_jacobi_rejects_inhomogeneous(super11):
    x = GlElement(super11, {(0, 1): ONE, (0, 0): ONE})
    y = GlElement.matrix_unit(super11, 1, 0)
    assert x.degree() is None
    with pytest.raises(ValueError):
        jacobi_defect(x, y, y)


def test_positive_roots(super11, super21, super22):
    even, odd = positive_roots(super11)
    assert even == [] and odd == [(1, -1)]
    even, odd = positive_roots(super21)
    assert len(even) == 1 and len(odd) == 2
    even, odd = positive_roots(super22)
    assert len(odd) == 4 and len(even) == 2


def test_rho(super11, super21):
    assert rho(super11) == (Fraction(-1, 2), Fraction(1, 2))
    assert rho(super21) == (0, -1, 1)
    for space in (super11, super21):
        r = rho(space)
        mp, mm = space.m_plus, space.m_minus
        for i in range(1, mp + 1):
            for s in range(1, mm + 1):
                root = tuple(
                    Fraction(int(a == i - 1)) - Fraction(int(a == mp + s - 1))
                    for a in range(space.dim))
                assert weight_inner(space, r, root) == mp - s - i + 1


def test_weight_inner(super11):
    e0 = basis_weight(super11, 0)
    e1 = basis_weight(super11, 1)
    assert weight_inner(super11, e0, e0) == 1
    assert weight_inner(super11, e1, e1) == -1
    assert weight_inner(super11, e0, e1) == 0


def test_supertrace_and_form(super21):
    space = super21
    identity = GlElement(space, {(a, a): ONE for a in range(space.dim)})
    assert supertrace(identity) == Scalar.from_rational(
        space.m_plus - space.m_minus)
    e01 = GlElement.matrix_unit(space, 0, 1)
    e10 = GlElement.matrix_unit(space, 1, 0)
    assert bilinear_form(e01, e10) == ONE  # omega(gamma_0, gamma_0) = +1
    rng = random.Random(9)
    us = units(space)
    for _ in range(40):
        x, y, z = (rng.choice(us) for _ in range(3))
        assert supertrace(bracket(x, y)).is_zero()
        assert bilinear_form(bracket(x, y), z) == \
            bilinear_form(x, bracket(y, z))


def test_form_basis_relation(super11, glq11):
    # (E_ab, E_cd) = parity(a) delta_bc delta_ad
    for space in (super11, glq11):
        for a in range(space.dim):
            for b in range(space.dim):
                for c in range(space.dim):
                    for d in range(space.dim):
                        val = bilinear_form(
                            GlElement.matrix_unit(space, a, b),
                            GlElement.matrix_unit(space, c, d))
                        if b == c and a == d:
                            assert val == Scalar.from_rational(
                                space.parities[a])
                        else:
                            assert val.is_zero()


def test_weyl_orbit(super21):
    lam = (Fraction(1), Fraction(0), Fraction(5))
    orbit = weyl_orbit(super21, lam)
    assert orbit == {(1, 0, 5), (0, 1, 5)}
    const = (Fraction(2), Fraction(2), Fraction(7))
    assert weyl_orbit(super21, const) == {const}
    lam2 = (Fraction(3), Fraction(1), Fraction(0))
    assert 24 % (len(weyl_orbit(super21, lam2)) or 1) == 0


def test_even_reflections_are_block_transpositions(super21, super22):
    # sigma_Y(mu) = mu - 2 (mu, Y)/(Y, Y) Y for Y in Phi0+ swaps the two
    # coordinates of Y, so the generated group is Sym_{M+} x Sym_{M-}
    for space in (super21, super22):
        even, _ = positive_roots(space)
        mu = tuple(Fraction(3 * a + 1, 2) for a in range(space.dim))
        for root in even:
            ry = weight_inner(space, root, root)
            assert abs(ry) == 2
            coef = 2 * weight_inner(space, mu, root) / ry
            image = tuple(m - coef * y for m, y in zip(mu, root))
            a = root.index(1)
            b = root.index(-1)
            swapped = list(mu)
            swapped[a], swapped[b] = swapped[b], swapped[a]
            assert image == tuple(swapped)
            assert image in weyl_orbit(space, mu)


def test_pbw_dimension(super11, super22, super20):
    assert pbw_dimension_nilradical(super11) == 2
    assert pbw_dimension_nilradical(super22) == 16
    assert pbw_dimension_nilradical(super20) == 1


def test_space_mismatch(super11, super21):
    x = GlElement.matrix_unit(super11, 0, 1)
    y = GlElement.matrix_unit(super21, 0, 1)
    with pytest.raises(SpaceMismatch):
        bracket(x, y)


def test_gl_element_json_round_trip(super21):
    x = GlElement(super21, {(0, 1): Scalar.parse("q+1"), (2, 0): ONE})
    doc = x.to_json()
    assert doc == [[0, 1, "q+1"], [2, 0, "1"]]
    assert GlElement.from_json(super21, doc) == x


def test_degree_and_homogeneity(glq11):
    x = GlElement.matrix_unit(glq11, 0, 1)
    assert x.degree() == glq11.degrees[0] - glq11.degrees[1]
    mixed = x + GlElement.matrix_unit(glq11, 1, 1)
    assert mixed.degree() is None
    parts = mixed.homogeneous_parts()
    assert len(parts) == 2


def test_duplicate_degree_rejected(super11):
    with pytest.raises(ValueError):
        GradedSpace(super11.factor,
                    [(super11.degrees[0], 1), (super11.degrees[0], 2)])
