"""Random bent functions and tuples with prescribed dual sums."""
from __future__ import annotations

import numpy as np

from .core import BooleanFunction, dot


def random_permutation(h: int, rng: np.random.Generator) -> np.ndarray:
    return rng.permutation(1 << h)


def random_mm_bent(n: int, rng: np.random.Generator) -> BooleanFunction:
    """x.pi(y) + g(y) with random pi and g, x and y of n/2 bits each."""
    if n % 2 or n < 2:
        raise ValueError("bent functions need an even n >= 2")
    from .constructions import mm_function

    h = n // 2
    g = BooleanFunction.random(h, rng)
    return mm_function(random_permutation(h, rng), g)


def shifted_triple(f: BooleanFunction, a: int, b: int) -> tuple[BooleanFunction, BooleanFunction, BooleanFunction]:
    """(f, f(x + a), f + b.x) for bent f.

    All four of f1, f2, f3 and f1+f2+f3 are bent, and the sum of their duals
    is the constant a.b.
    """
    idx = np.arange(f.size, dtype=np.int64)
    f2 = BooleanFunction(f.n, f.table[idx ^ a])
    f3 = f ^ BooleanFunction.linear(f.n, b)
    return f, f2, f3


def random_triple(n: int, rng: np.random.Generator, dual_sum: int | None = None):
    """A random shifted triple over a random MM bent; dual_sum fixes a.b when given."""
    f = random_mm_bent(n, rng)
    while True:
        a, b = (int(v) for v in rng.integers(0, 1 << n, size=2))
        if dual_sum is None or dot(a, b) == dual_sum:
            return shifted_triple(f, a, b)
