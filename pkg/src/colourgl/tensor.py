"""Braided symmetric group action and gl(V)-action on tensor powers.

Basis words of V^(tensor r) are tuples of flat indices.  The adjacent
transposition s_i acts by swapping slots i, i+1 with the braiding factor
omega(d(v_i), d(v_{i+1})); general permutations act through reduced words
(well defined since the sigma_i satisfy the Coxeter relations exactly).
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .gl import GlElement, SpaceMismatch, basis_weight
from .partitions import (check_partition, count_hook_tableaux,
                         count_standard_tableaux, in_hook, lambda_sharp,
                         partitions_of, transpose)
from .scalars import ONE, Scalar, ZERO


class TensorVector:
    """A Scalar-linear combination of basis words of V^(tensor r)."""

    __slots__ = ("space", "power", "terms")

    def __init__(self, space, power, terms=None):
        self.space = space
        self.power = power
        self.terms = {}
        if terms:
            for word, coef in terms.items():
                if coef:
                    self.terms[word] = coef

    @classmethod
    def basis_word(cls, space, word, coef=ONE):
        word = tuple(word)
        if any(not 0 <= a < space.dim for a in word):
            raise IndexError("word letter out of range")
        return cls(space, len(word), {word: coef})

    def _check(self, other):
        if self.space != other.space or self.power != other.power:
            raise SpaceMismatch("tensor vectors of different type")

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for word, coef in other.terms.items():
            new = terms.get(word, ZERO) + coef
            if new:
                terms[word] = new
            else:
                terms.pop(word, None)
        return TensorVector(self.space, self.power, terms)

    def __sub__(self, other):
        return self + other.scale(-ONE)

    def scale(self, coef):
        if not coef:
            return TensorVector(self.space, self.power)
        return TensorVector(self.space, self.power,
                            {w: coef * c for w, c in self.terms.items()})

    def is_zero(self):
        return not self.terms

    def weight(self):
        """The h*-weight if all words share one, else None."""
        wt = None
        for word in self.terms:
            w = word_weight(self.space, word)
            if wt is None:
                wt = w
            elif wt != w:
                return None
        return wt

    def degree(self):
        deg = None
        for word in self.terms:
            d = self.space.word_degree(word)
            if deg is None:
                deg = d
            elif deg != d:
                return None
        return deg

    def __eq__(self, other):
        return (isinstance(other, TensorVector) and self.space == other.space
                and self.power == other.power and self.terms == other.terms)

    def __repr__(self):
        if not self.terms:
            return "TensorVector(0)"
        body = " + ".join(f"({c})*b{list(w)}"
                          for w, c in sorted(self.terms.items()))
        return f"TensorVector({body})"


def word_weight(space, word):
    coords = [0] * space.dim
    for a in word:
        coords[a] += 1
    return tuple(Fraction(c) for c in coords)


def braiding_apply(i, v):
    """sigma_i on V^(tensor r): swap slots i, i+1 (0-based) with the
    braiding factor omega(d(v_i), d(v_{i+1}))."""
    if not 0 <= i < v.power - 1:
        raise IndexError(f"sigma_{i} undefined on {v.power} tensor factors")
    space = v.space
    terms = {}
    for word, coef in v.terms.items():
        om = space.omega_flat(word[i], word[i + 1])
        swapped = word[:i] + (word[i + 1], word[i]) + word[i + 2:]
        new = terms.get(swapped, ZERO) + om * coef
        if new:
            terms[swapped] = new
        else:
            terms.pop(swapped, None)
    return TensorVector(space, v.power, terms)


def _bubble_word(perm):
    """Adjacent transposition indices whose left-to-right application
    realises perm as an action on words (apply s_j for j in the list)."""
    line = list(perm)
    word = []
    changed = True
    while changed:
        changed = False
        for j in range(len(line) - 1):
            if line[j] > line[j + 1]:
                line[j], line[j + 1] = line[j + 1], line[j]
                word.append(j)
                changed = True
    return word


def apply_permutation(perm, v):
    """nu_r(perm): the braided action of a permutation on a tensor vector.

    perm is a tuple with perm[i] the image of slot i: the letter in
    slot i moves to slot perm[i]."""
    for j in _bubble_word(perm):
        v = braiding_apply(j, v)
    return v


class SymGroupElement:
    """A formal Scalar-linear combination of permutations of r slots."""

    __slots__ = ("power", "terms")

    def __init__(self, power, terms=None):
        self.power = power
        self.terms = {}
        if terms:
            for perm, coef in terms.items():
                if coef:
                    self.terms[perm] = coef

    def __add__(self, other):
        if self.power != other.power:
            raise ValueError("group algebra elements of different degree")
        terms = dict(self.terms)
        for perm, coef in other.terms.items():
            new = terms.get(perm, ZERO) + coef
            if new:
                terms[perm] = new
            else:
                terms.pop(perm, None)
        return SymGroupElement(self.power, terms)

    def __mul__(self, other):
        """Product in the group algebra: (p*q) acts as p after q."""
        if self.power != other.power:
            raise ValueError("group algebra elements of different degree")
        terms = {}
        for p, cp in self.terms.items():
            for q, cq in other.terms.items():
                comp = tuple(p[q[i]] for i in range(self.power))
                new = terms.get(comp, ZERO) + cp * cq
                if new:
                    terms[comp] = new
                else:
                    terms.pop(comp, None)
        return SymGroupElement(self.power, terms)

    def apply(self, v):
        if v.power != self.power:
            raise ValueError("group algebra element does not match power")
        out = TensorVector(v.space, v.power)
        for perm, coef in self.terms.items():
            out = out + apply_permutation(perm, v).scale(coef)
        return out

    def __eq__(self, other):
        return (isinstance(other, SymGroupElement)
                and self.power == other.power and self.terms == other.terms)

    def __repr__(self):
        return f"SymGroupElement({self.terms})"


def perm_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def total_symmetrizers(r):
    """(Sigma+(r), Sigma-(r)) = (sum (-1)^|s| s, sum s): the skew and total
    symmetrisers.  Sigma+ kills words with a repeated even letter and
    Sigma- kills words with a repeated odd letter."""
    plus, minus = {}, {}
    for perm in itertools.permutations(range(r)):
        sign = perm_sign(perm)
        plus[perm] = ONE if sign == 1 else -ONE
        minus[perm] = ONE
    return SymGroupElement(r, plus), SymGroupElement(r, minus)


def canonical_tableau(lam):
    """Rows of box positions 0..r-1, filled row by row."""
    rows, pos = [], 0
    for part in lam:
        rows.append(list(range(pos, pos + part)))
        pos += part
    return rows


def _block_group(blocks, r):
    """All permutations preserving each block of positions setwise."""
    perms = []
    for images in itertools.product(
            *(itertools.permutations(b) for b in blocks)):
        perm = list(range(r))
        for block, image in zip(blocks, images):
            for src, dst in zip(block, image):
                perm[src] = dst
        perms.append(tuple(perm))
    return perms


def young_symmetrizer(lam):
    """C_lambda = B_lambda A_lambda for the canonical tableau: A the row
    sum, B the signed column sum."""
    lam = check_partition(lam)
    r = sum(lam)
    rows = canonical_tableau(lam)
    cols = []
    for j in range(lam[0] if lam else 0):
        cols.append([row[j] for row in rows if j < len(row)])
    a_elt = SymGroupElement(r, {p: ONE for p in _block_group(rows, r)})
    b_elt = SymGroupElement(
        r, {p: ONE if perm_sign(p) == 1 else -ONE
            for p in _block_group(cols, r)})
    return b_elt * a_elt


def row_column_groups(lam):
    """(P_lambda, Q_lambda) as lists of permutation tuples."""
    lam = check_partition(lam)
    r = sum(lam)
    rows = canonical_tableau(lam)
    cols = [[row[j] for row in rows if j < len(row)]
            for j in range(lam[0] if lam else 0)]
    return _block_group(rows, r), _block_group(cols, r)


def gl_act_tensor(x, v):
    """The gl(V)-action through the iterated coproduct:
    X(v_1 ... v_r) = sum_j omega(d(X), d(v_1..v_{j-1})) v_1..X(v_j)..v_r.
    Inhomogeneous X is split into homogeneous parts first."""
    if x.space != v.space:
        raise SpaceMismatch("operator and vector over different spaces")
    space = v.space
    parts = x.homogeneous_parts() if x.degree() is None else {x.degree(): x}
    out = TensorVector(space, v.power)
    for deg, part in parts.items():
        terms = {}
        for word, coef in v.terms.items():
            prefix = ONE
            for j, letter in enumerate(word):
                if j:
                    prefix = prefix * space.omega(deg, space.degrees[word[j - 1]])
                for (a, b), xc in part.terms.items():
                    if b == letter:
                        new_word = word[:j] + (a,) + word[j + 1:]
                        add = prefix * xc * coef
                        cur = terms.get(new_word, ZERO) + add
                        if cur:
                            terms[new_word] = cur
                        else:
                            terms.pop(new_word, None)
        out = out + TensorVector(space, v.power, terms)
    return out


def seed_word(space, lam):
    """The canonical filling: row i <= M+ gets b_i repeated lambda_i times,
    each lower row gets the leading odd vectors b_1bar, b_2bar, ..."""
    lam = check_partition(lam)
    mp = space.m_plus
    word = []
    for i, part in enumerate(lam):
        if i < mp:
            word.extend([i] * part)
        else:
            if part > space.m_minus:
                raise ValueError(f"{lam} does not fit the hook of {space}")
            word.extend(mp + j for j in range(part))
    return tuple(word)


def highest_weight_vector(space, lam):
    """C_lambda applied to the seed word: a nonzero gl(V)-highest weight
    vector of weight lambda# in V^(tensor |lambda|)."""
    lam = check_partition(lam)
    if not in_hook(lam, space.m_plus, space.m_minus):
        raise ValueError(
            f"{lam} is not in the {space.m_plus}|{space.m_minus} hook class")
    v = TensorVector.basis_word(space, seed_word(space, lam))
    return young_symmetrizer(lam).apply(v)


def is_highest_weight(space, v):
    """True iff every strictly upper matrix unit kills v."""
    for a in range(space.dim):
        for b in range(a + 1, space.dim):
            if not gl_act_tensor(
                    GlElement.matrix_unit(space, a, b), v).is_zero():
                return False
    return True


def schur_weyl_table(space, r, verify=True):
    """Rows (lambda, lambda#, k(lambda), f^lambda) over all lambda of r in
    the hook class; checks sum k*f = (dim V)^r and, when verify is set,
    witnesses each lambda# by an explicit highest weight vector."""
    mp, mm = space.m_plus, space.m_minus
    rows = []
    total = 0
    for lam in partitions_of(r):
        if not in_hook(lam, mp, mm):
            continue
        k = count_hook_tableaux(lam, mp, mm)
        f = count_standard_tableaux(lam)
        sharp = lambda_sharp(lam, mp, mm)
        total += k * f
        if verify:
            v = highest_weight_vector(space, lam)
            if v.is_zero():
                raise AssertionError(f"highest weight vector vanished: {lam}")
            wt = v.weight()
            expected = tuple(Fraction(c) for c in sharp)
            if wt != expected:
                raise AssertionError(
                    f"weight of hwv({lam}) is {wt}, expected {expected}")
            if not is_highest_weight(space, v):
                raise AssertionError(f"hwv({lam}) is not annihilated by n+")
        rows.append({"partition": lam, "sharp": sharp, "k": k, "f": f})
    if total != space.dim ** r:
        raise AssertionError(
            f"sum k(lambda) f^lambda = {total} != (dim V)^r = {space.dim**r}")
    return rows


# -- the dual module ---------------------------------------------------------

def dual_act(x, wbar):
    """Action on V*: for homogeneous X, <X.wbar, v> = omega(d(X), d(wbar))
    <wbar, S(X).v> with S(X) = -X.  wbar maps flat indices to Scalars,
    ebar_a having weight -eps_a and degree -gamma_a."""
    space = x.space
    parts = x.homogeneous_parts() if x.degree() is None else {x.degree(): x}
    out = {}
    for deg, part in parts.items():
        for (a, b), coef in part.terms.items():
            # E_ab . ebar_a = -omega(d(X), -gamma_a) ebar_b
            c = wbar.get(a)
            if c:
                om = space.omega(deg, -space.degrees[a])
                add = -om * coef * c
                cur = out.get(b, ZERO) + add
                if cur:
                    out[b] = cur
                else:
                    out.pop(b, None)
    return out


def dual_pairing(wbar, v):
    """<wbar, v> for v a rank-1 tensor vector (power 1)."""
    total = ZERO
    for (a,), coef in v.terms.items():
        c = wbar.get(a)
        if c:
            total = total + c * coef
    return total


def dual_weight_vector(space, a):
    """The weight of ebar_a, namely -eps_a."""
    return tuple(-x for x in basis_weight(space, a))
