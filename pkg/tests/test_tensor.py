import itertools
import random
from fractions import Fraction

import pytest

from colourgl.gl import GlElement
from colourgl.partitions import (count_hook_tableaux, count_standard_tableaux,
                                 dim_glN, partitions_of)
from colourgl.presets import super_space
from colourgl.scalars import MINUS_ONE, ONE
from colourgl.tensor import (SymGroupElement, TensorVector, apply_permutation,
                             braiding_apply, dual_act, dual_pairing,
                             dual_weight_vector, gl_act_tensor,
                             highest_weight_vector, is_highest_weight,
                             row_column_groups, schur_weyl_table, seed_word,
                             total_symmetrizers, word_weight,
                             young_symmetrizer)
from colourgl.weyl import rank_of_rows


def test_braiding_on_odd_vector():
    space = super_space(0, 1)
    v = TensorVector.basis_word(space, (0, 0))
    assert braiding_apply(0, v) == v.scale(MINUS_ONE)


def test_braiding_matches_operator_p(super21, glq11):
    # P = sum omega(beta,beta) E(a,b)_ij x E(b,a)_ji acting by the twisted
    # tensor-product rule reproduces the braiding on every basis word
    for space in (super21, glq11):
        for w in itertools.product(range(space.dim), repeat=2):
            v = TensorVector.basis_word(space, w)
            direct = braiding_apply(0, v)
            total = TensorVector(space, 2)
            for a in range(space.dim):
                for b in range(space.dim):
                    # (A x B)(v0 x v1) = omega(d(B), d(v0)) A v0 x B v1
                    x1, x2 = w
                    if b != x1 or a != x2:
                        continue
                    coef = space.omega(space.degrees[b] - space.degrees[a],
                                       space.degrees[x1])
                    par = space.omega_flat(b, b)
                    total = total + TensorVector.basis_word(
                        space, (a, b)).scale(par * coef)
            assert direct == total


def test_braid_relation_random(glq21):
    rng = random.Random(21)
    for _ in range(30):
        word = tuple(rng.randrange(glq21.dim) for _ in range(4))
        v = TensorVector.basis_word(glq21, word)
        lhs = braiding_apply(0, braiding_apply(1, braiding_apply(0, v)))
        rhs = braiding_apply(1, braiding_apply(0, braiding_apply(1, v)))
        assert lhs == rhs
        assert braiding_apply(2, braiding_apply(0, v)) == \
            braiding_apply(0, braiding_apply(2, v))


def test_braiding_range_error(super11):
    v = TensorVector.basis_word(super11, (0, 1))
    with pytest.raises(IndexError):
        braiding_apply(1, v)


def test_permutation_action_is_homomorphism(super21):
    rng = random.Random(4)
    perms = list(itertools.permutations(range(3)))
    for _ in range(40):
        p, q = rng.choice(perms), rng.choice(perms)
        word = tuple(rng.randrange(super21.dim) for _ in range(3))
        v = TensorVector.basis_word(super21, word)
        comp = tuple(p[q[i]] for i in range(3))
        assert apply_permutation(comp, v) == \
            apply_permutation(p, apply_permutation(q, v))


def test_diagonal_action_counts_occurrences(super11):
    v = TensorVector.basis_word(super11, (0, 0, 1))
    h0 = GlElement.matrix_unit(super11, 0, 0)
    assert gl_act_tensor(h0, v) == v.scale(ONE + ONE)
    assert word_weight(super11, (0, 0)) == (2, 0)


def test_gl_action_commutes_with_braiding(super21, glq11):
    rng = random.Random(17)
    for space in (super21, glq11):
        for _ in range(25):
            word = tuple(rng.randrange(space.dim) for _ in range(3))
            v = TensorVector.basis_word(space, word)
            a, b = rng.randrange(space.dim), rng.randrange(space.dim)
            x = GlElement.matrix_unit(space, a, b)
            for i in (0, 1):
                assert braiding_apply(i, gl_act_tensor(x, v)) == \
                    gl_act_tensor(x, braiding_apply(i, v))


def test_young_groups_431():
    rows, cols = row_column_groups((4, 3, 1))
    assert len(rows) == 24 * 6  # Sym{0..3} x Sym{4..6}
    assert len(cols) == 6 * 2 * 2  # Sym{0,4,7} x Sym{1,5} x Sym{2,6}
    for p in rows:
        assert set(p[:4]) == {0, 1, 2, 3} and set(p[4:7]) == {4, 5, 6}
    for p in cols:
        assert set(p[i] for i in (0, 4, 7)) == {0, 4, 7}


def test_row_symmetrizer_is_total_symmetrizer():
    plus, minus = total_symmetrizers(3)
    c = young_symmetrizer((3,))
    assert c == minus
    assert len(plus.terms) == 6


def test_symmetrizers_kill_repeats(super11):
    plus, minus = total_symmetrizers(2)
    even = TensorVector.basis_word(super11, (0, 0))
    odd = TensorVector.basis_word(super11, (1, 1))
    assert plus.apply(even).is_zero()
    assert not plus.apply(odd).is_zero()
    assert minus.apply(odd).is_zero()
    assert not minus.apply(even).is_zero()


def test_seed_word(super21):
    assert seed_word(super21, (3, 1, 1)) == (0, 0, 0, 1, 2)
    # row below M+ takes the leading odd vectors
    assert seed_word(super_space(1, 2), (2, 2)) == (0, 0, 1, 2)


def test_highest_weight_vectors_gl11(super11):
    v = highest_weight_vector(super11, (2,))
    assert not v.is_zero()
    assert v.weight() == (2, 0)
    assert is_highest_weight(super11, v)
    w = highest_weight_vector(super11, (1, 1))
    assert not w.is_zero()
    assert w.weight() == (1, 1)
    assert is_highest_weight(super11, w)


def test_highest_weight_vector_domain_error():
    space = super_space(1, 0)
    with pytest.raises(ValueError):
        highest_weight_vector(space, (1, 1))


def test_schur_weyl_table_gl11(super11):
    rows = schur_weyl_table(super11, 2)
    assert rows == [
        {"partition": (2,), "sharp": (2, 0), "k": 2, "f": 1},
        {"partition": (1, 1), "sharp": (1, 1), "k": 2, "f": 1},
    ]
    assert sum(r["k"] * r["f"] for r in rows) == 4


def test_schur_weyl_r1(super21):
    rows = schur_weyl_table(super21, 1)
    assert len(rows) == 1
    assert rows[0]["partition"] == (1,)
    assert rows[0]["sharp"] == (1, 0, 0)


def test_schur_weyl_reduces_to_classical(super20):
    rows = schur_weyl_table(super20, 3)
    for row in rows:
        assert row["k"] == dim_glN(row["partition"], 2)


def test_sym_isotypic_dimension(super11):
    # dim of the Sym_r-span of the highest weight vector equals f^lambda
    for r in (2, 3, 4):
        for lam in partitions_of(r):
            if count_hook_tableaux(lam, 1, 1) == 0:
                continue
            v = highest_weight_vector(super11, lam)
            vectors = [apply_permutation(p, v)
                       for p in itertools.permutations(range(r))]
            words = sorted({w for vec in vectors for w in vec.terms})
            index = {w: i for i, w in enumerate(words)}
            rows = [{index[w]: c for w, c in vec.terms.items()}
                    for vec in vectors if not vec.is_zero()]
            assert rank_of_rows(rows) == count_standard_tableaux(lam)


def test_dual_action(super21):
    space = super21
    # highest weight of V* is (0, ..., 0, -1): ebar_last is killed by all
    # raising operators
    last = space.dim - 1
    wbar = {last: ONE}
    assert dual_weight_vector(space, last) == (0, 0, -1)
    for a in range(space.dim):
        for b in range(a + 1, space.dim):
            x = GlElement.matrix_unit(space, a, b)
            assert dual_act(x, wbar) == {}
    # diagonal action: E_aa . ebar_a = -ebar_a
    for a in range(space.dim):
        h = GlElement.matrix_unit(space, a, a)
        image = dual_act(h, {a: ONE})
        assert image == {a: MINUS_ONE}


def test_pairing_invariance(super21, glq11):
    # <X.wbar, v> + omega(d(X), d(wbar)) <wbar, X.v> = 0
    for space in (super21, glq11):
        for a in range(space.dim):
            for b in range(space.dim):
                x = GlElement.matrix_unit(space, a, b)
                deg = space.degrees[a] - space.degrees[b]
                for c in range(space.dim):
                    wbar = {c: ONE}
                    for d in range(space.dim):
                        v = TensorVector.basis_word(space, (d,))
                        lhs = dual_pairing(dual_act(x, wbar), v)
                        om = space.omega(deg, -space.degrees[c])
                        rhs = om * dual_pairing(wbar, gl_act_tensor(x, v))
                        assert (lhs + rhs).is_zero()


def test_canonical_invariant(super21, glq11):
    # X . sum_a e_a x ebar_a = 0 under the coproduct action
    for space in (super21, glq11):
        for p in range(space.dim):
            for r in range(space.dim):
                x = GlElement.matrix_unit(space, p, r)
                deg = space.degrees[p] - space.degrees[r]
                total = {}
                for a in range(space.dim):
                    v = TensorVector.basis_word(space, (a,))
                    xv = gl_act_tensor(x, v)
                    for (idx,), coef in xv.terms.items():
                        key = (idx, a)
                        total[key] = total.get(key, ONE - ONE) + coef
                    om = space.omega(deg, space.degrees[a])
                    for idx, coef in dual_act(x, {a: ONE}).items():
                        key = (a, idx)
                        total[key] = total.get(key, ONE - ONE) + om * coef
                assert all(c.is_zero() for c in total.values())


def test_group_algebra_product():
    a = SymGroupElement(3, {(1, 0, 2): ONE})
    b = SymGroupElement(3, {(0, 2, 1): ONE})
    prod = a * b
    assert prod.terms == {(1, 2, 0): ONE}


def test_gl_act_inhomogeneous_extension(super21):
    # inhomogeneous operators act through their homogeneous parts
    x = GlElement.matrix_unit(super21, 0, 2) + \
        GlElement.matrix_unit(super21, 1, 1)
    v = TensorVector.basis_word(super21, (2, 1))
    total = gl_act_tensor(x, v)
    split = TensorVector(super21, 2)
    for part in x.homogeneous_parts().values():
        split = split + gl_act_tensor(part, v)
    assert total == split


def test_dual_action_is_representation(super21, glq11):
    # X(Y wbar) - omega(dX, dY) Y(X wbar) = [X, Y] wbar
    from colourgl.gl import bracket
    for space in (super21, glq11):
        for a in range(space.dim):
            for b in range(space.dim):
                for c in range(space.dim):
                    for d in range(space.dim):
                        x = GlElement.matrix_unit(space, a, b)
                        y = GlElement.matrix_unit(space, c, d)
                        om = space.omega(space.degrees[a] - space.degrees[b],
                                         space.degrees[c] - space.degrees[d])
                        for e in range(space.dim):
                            wbar = {e: ONE}
                            lhs = dual_act(x, dual_act(y, wbar))
                            for k, coef in dual_act(
                                    y, dual_act(x, wbar)).items():
                                cur = lhs.get(k, ONE - ONE) - om * coef
                                if cur:
                                    lhs[k] = cur
                                else:
                                    lhs.pop(k, None)
                            rhs = dual_act(bracket(x, y), wbar)
                            lhs = {k: v for k, v in lhs.items() if v}
                            rhs = {k: v for k, v in rhs.items() if v}
                            assert lhs == rhs, (a, b, c, d, e)
