"""Partitions, hook partitions and tableau counts.

Partitions are tuples of weakly decreasing positive integers.  k(lambda)
counts semistandard (M+, M-)-tableaux in the Berele-Regev convention:
letters 1 < ... < M+ < 1' < ... < M-', rows and columns weakly increasing,
unprimed letters strictly increasing down columns, primed letters strictly
increasing along rows.  The convention is pinned by the dimension identity
sum_lambda k(lambda) f^lambda = (M+ + M-)^r, which the tests enforce.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial


def is_partition(parts):
    parts = tuple(parts)
    return all(isinstance(p, int) and p > 0 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


def check_partition(parts):
    parts = tuple(int(p) for p in parts if p)
    if not is_partition(parts):
        raise ValueError(f"{parts} is not a partition")
    return parts


def transpose(lam):
    lam = check_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def partitions_of(n, max_part=None):
    """All partitions of n with parts bounded by max_part, lexicographically
    decreasing."""
    if n == 0:
        yield ()
        return
    cap = n if max_part is None else min(max_part, n)
    for first in range(cap, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def in_hook(lam, m_plus, m_minus):
    """Membership in P_{M+|M-}: lambda_{M+ + 1} <= M-."""
    lam = check_partition(lam)
    return len(lam) <= m_plus or lam[m_plus] <= m_minus


def hook_partitions(m_plus, m_minus, depth_bound, size):
    """All lambda of the given size in P_{M+|M-} with depth <= depth_bound."""
    return [lam for lam in partitions_of(size)
            if in_hook(lam, m_plus, m_minus)
            and len(lam) <= depth_bound]


def lambda_sharp(lam, m_plus, m_minus):
    """The highest weight (lambda_1..lambda_{M+}, theta(lambda'_j - M+))
    attached to a hook partition."""
    lam = check_partition(lam)
    if not in_hook(lam, m_plus, m_minus):
        raise ValueError(f"{lam} is not in the {m_plus}|{m_minus} hook class")
    lamt = transpose(lam)
    plus = tuple(lam[i] if i < len(lam) else 0 for i in range(m_plus))
    minus = tuple(max((lamt[j] if j < len(lamt) else 0) - m_plus, 0)
                  for j in range(m_minus))
    return plus + minus


def hooks(lam):
    lam = check_partition(lam)
    lamt = transpose(lam)
    return [[lam[i] - j + lamt[j] - i - 1 for j in range(lam[i])]
            for i in range(len(lam))]


def count_standard_tableaux(lam):
    """f^lambda by the hook length formula."""
    lam = check_partition(lam)
    n = sum(lam)
    denom = 1
    for row in hooks(lam):
        for h in row:
            denom *= h
    value, rem = divmod(factorial(n), denom)
    assert rem == 0
    return value


def dim_glN(lam, n):
    """Dimension of the simple polynomial gl_N module:
    prod (N + j - i)/hook(i, j); zero when depth(lambda) > N."""
    lam = check_partition(lam)
    if len(lam) > n:
        return 0
    value = Fraction(1)
    for i, row in enumerate(hooks(lam)):
        for j, h in enumerate(row):
            value *= Fraction(n + j - i, h)
    assert value.denominator == 1
    return int(value)


@lru_cache(maxsize=None)
def count_hook_tableaux(lam, m_plus, m_minus):
    """k(lambda): the number of semistandard (M+, M-)-tableaux of shape
    lambda, by exhaustive row-by-row enumeration with pruning."""
    lam = check_partition(lam)
    if not in_hook(lam, m_plus, m_minus):
        return 0
    if not lam:
        return 1
    letters = m_plus + m_minus  # x <= m_plus unprimed, x > m_plus primed
    rows = len(lam)

    def fill_row(i, prev_row, row, j, count):
        if j == lam[i]:
            return count + fill(i + 1, tuple(row))
        above = prev_row[j] if prev_row is not None else 0
        left = row[j - 1] if j > 0 else 0
        for x in range(max(above, left, 1), letters + 1):
            if x == left and x > m_plus:
                continue  # primed letters strict along rows
            if x == above and above <= m_plus:
                continue  # unprimed letters strict down columns
            row.append(x)
            count = fill_row(i, prev_row, row, j + 1, count)
            row.pop()
        return count

    def fill(i, prev_row):
        if i == rows:
            return 1
        return fill_row(i, prev_row, [], 0, 0)

    return fill(0, None)
