"""Verification oracles: bent/plateaued certificates, derivatives, MM split test."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

import numpy as np

from .core import (
    BooleanFunction,
    Tag,
    VectorialFunction,
    bent_dual,
    bitstring,
    classify,
    sequences_at_bent_distance,
    wht,
)
from .errors import DimensionMismatch, EqualDirections, OddArity, PreconditionFailed
from .synth import SequenceProfile, profile_violations


def verify_bent(f: BooleanFunction) -> bool:
    if f.n % 2:
        return False
    return bool(np.all(np.abs(wht(f).coeffs) == 1 << (f.n // 2)))


def verify_plateaued(f: BooleanFunction, s: int) -> bool:
    return classify(f).is_plateaued(s)


def _shift(f: BooleanFunction, a: int) -> np.ndarray:
    return f.table[np.arange(f.size, dtype=np.int64) ^ a]


def second_derivative(f: BooleanFunction, alpha: int, beta: int) -> BooleanFunction:
    """D_alpha D_beta f(x) = f(x) + f(x+alpha) + f(x+beta) + f(x+alpha+beta)."""
    alpha, beta = int(alpha), int(beta)
    if alpha == beta:
        raise EqualDirections(f"alpha = beta = {bitstring(alpha, f.n)}")
    t = f.table ^ _shift(f, alpha) ^ _shift(f, beta) ^ _shift(f, alpha ^ beta)
    return BooleanFunction(f.n, t)


class MmVerdict(str, Enum):
    OUTSIDE_FOR_THIS_SPLIT = "OutsideForThisSplit"
    NO_WITNESS_FOR_THIS_SPLIT = "NoWitnessForThisSplit"


@dataclass(frozen=True)
class MmCertificate:
    split: tuple[int, int]
    witness: tuple[int, int] | None
    verdict: MmVerdict

    def __str__(self) -> str:
        m = self.split[0]
        if self.witness is None:
            return f"{self.verdict.value} (split {m}|{m})"
        a, b = self.witness
        return f"{self.verdict.value} (split {m}|{m}, alpha'={bitstring(a, m)}, beta'={bitstring(b, m)})"


def outside_mm_certificate(f: BooleanFunction) -> MmCertificate:
    """Search alpha' < beta' (nonzero, in F_2^m) with D_(alpha',0) D_(beta',0) f(0, y) not identically 0.

    A function x.pi(y) + g(y) on this split is affine in x, so every such
    derivative vanishes; a witness rules out that shape for the canonical
    x | y decomposition only.
    """
    if f.n % 2:
        raise OddArity(f"{f.n} variables cannot be split in halves")
    m = f.n // 2
    t = f.table.reshape(1 << m, 1 << m)
    for alpha in range(1, 1 << m):
        for beta in range(alpha + 1, 1 << m):
            d = t[0] ^ t[alpha] ^ t[beta] ^ t[alpha ^ beta]
            if d.any():
                return MmCertificate((m, m), (alpha, beta), MmVerdict.OUTSIDE_FOR_THIS_SPLIT)
    return MmCertificate((m, m), None, MmVerdict.NO_WITNESS_FOR_THIS_SPLIT)


def is_self_dual(f: BooleanFunction) -> bool:
    return verify_bent(f) and bent_dual(f) == f


def disjoint_spectra(f: BooleanFunction, g: BooleanFunction) -> bool:
    if f.n != g.n:
        raise DimensionMismatch(f"{f.n} and {g.n} variables")
    return not np.any(wht(f).coeffs * wht(g).coeffs)


def dual_linearity_witness(h: VectorialFunction, S: Iterable[int]) -> int | None:
    """First w in S with (w.h)* != w.(h_1*, ..., h_k*), or None."""
    for i, c in enumerate(h.coords):
        if not verify_bent(c):
            raise PreconditionFailed(f"h_{i + 1} is not bent", witness=i + 1)
    duals = VectorialFunction([bent_dual(c) for c in h.coords])
    for w in sorted(int(w) for w in S):
        comp = h.component(w)
        if not verify_bent(comp):
            raise PreconditionFailed(f"w.h is not bent for w={bitstring(w, h.k)}", witness=w)
        if bent_dual(comp) != duals.component(w):
            return w
    return None


def dual_linearity_check(h: VectorialFunction, S: Iterable[int]) -> bool:
    """(w.h)* = w.(h_1*, ..., h_k*) for every w in S."""
    return dual_linearity_witness(h, S) is None


def profile_distance_check(fstar: BooleanFunction, profile: SequenceProfile) -> bool:
    """fstar is at bent distance to every entry of the profile."""
    return profile_violations(fstar, profile).size == 0


def bent_distance_to_all(fstar: BooleanFunction, sequences: np.ndarray) -> bool:
    return all(sequences_at_bent_distance(fstar.sequence, s) for s in sequences)


def spectrum_summary(f: BooleanFunction) -> dict[int, int]:
    return wht(f).distribution()


def is_bent_or_plateaued(f: BooleanFunction) -> bool:
    return classify(f).tag in (Tag.BENT, Tag.PLATEAUED)
