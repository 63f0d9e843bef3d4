"""Small linear algebra over F_2 on int-encoded vectors (x_1 = MSB)."""
from __future__ import annotations

from typing import Iterable


def reduced_basis(vectors: Iterable[int]) -> list[int]:
    """Reduced row echelon basis of span(vectors), rows in decreasing order.

    Every pivot (leading bit) is the only set bit of its column among the rows.
    """
    rows: list[int] = []
    for v in vectors:
        v = int(v)
        for r in rows:
            v = min(v, v ^ r)
        if v:
            # clear the new pivot from existing rows, keep existing pivots clean
            top = v.bit_length() - 1
            rows = [r ^ v if (r >> top) & 1 else r for r in rows]
            rows.append(v)
    rows.sort(reverse=True)
    # a final back-substitution pass so pivots are unique in their columns
    for i, r in enumerate(rows):
        top = r.bit_length() - 1
        for j in range(len(rows)):
            if j != i and (rows[j] >> top) & 1:
                rows[j] ^= r
    rows.sort(reverse=True)
    return rows


def rank(vectors: Iterable[int]) -> int:
    return len(reduced_basis(vectors))


def span(basis: Iterable[int]) -> list[int]:
    """All 2^d combinations; point i uses basis rows selected by the bits of i,
    most significant bit picking the first row."""
    basis = list(basis)
    d = len(basis)
    out = []
    for i in range(1 << d):
        v = 0
        for j, b in enumerate(basis):
            if (i >> (d - 1 - j)) & 1:
                v ^= b
        out.append(v)
    return out


def in_span(v: int, basis: list[int]) -> bool:
    for r in reduced_basis(basis):
        v = min(v, v ^ r)
    return v == 0


def orthogonal_complement(basis: Iterable[int], k: int) -> list[int]:
    """Basis of U^perp = {w : w.u = 0 for all u in U} inside F_2^k."""
    rows = reduced_basis(basis)
    pivots = [r.bit_length() - 1 for r in rows]
    free = [c for c in range(k) if c not in pivots]
    out = []
    for c in free:
        w = 1 << c
        for r, p in zip(rows, pivots):
            if (r >> c) & 1:
                w |= 1 << p
        out.append(w)
    return sorted(out, reverse=True)
