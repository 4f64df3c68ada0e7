"""Shared builders for the tests."""

from __future__ import annotations

import random
from fractions import Fraction

from hypothesis import strategies as st

from cayleyunits import AlgebraElement, FiniteGroup, involute


def rationals():
    return st.fractions(min_value=-5, max_value=5, max_denominator=4)


def elements(group: FiniteGroup):
    """Hypothesis strategy over algebra elements of a fixed group."""
    return st.dictionaries(
        st.integers(0, group.order - 1), rationals(), max_size=group.order
    ).map(lambda d: AlgebraElement(group, d))


def random_element(rng: random.Random, group: FiniteGroup) -> AlgebraElement:
    pairs = []
    for g in group.elements():
        if rng.random() < 0.6:
            pairs.append((g, Fraction(rng.randint(-4, 4), rng.randint(1, 3))))
    return AlgebraElement(group, pairs)


def random_skew(rng: random.Random, group, orientation) -> AlgebraElement:
    r = random_element(rng, group)
    return r - involute(r, orientation)


def mat_mul(a, b):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
