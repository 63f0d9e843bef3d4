"""Hypothesis strategies for Boolean functions."""
import numpy as np
from hypothesis import strategies as st

from bentkit.core import BooleanFunction


@st.composite
def functions(draw, min_n=1, max_n=6, n=None):
    if n is None:
        n = draw(st.integers(min_n, max_n))
    v = draw(st.integers(0, (1 << (1 << n)) - 1))
    table = [(v >> i) & 1 for i in range(1 << n)]
    return BooleanFunction(n, table)


@st.composite
def function_pairs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    return draw(functions(n=n)), draw(functions(n=n))


def seeds():
    return st.integers(0, 2**32 - 1)


def rng_from(seed):
    return np.random.default_rng(seed)
