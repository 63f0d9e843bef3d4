"""Spectral-domain synthesis of plateaued functions from a support and a dual.

A support is an ordered list of points of F_2^k.  Either it is ordered as
``v + E`` with ``E`` increasing (``order_support``) or the caller fixes the
order row by row (``OrderedSupport.from_rows``), which is what the
multiset constructions built with ``Rows`` need.  Row ``i`` is identified
with the point ``x_i`` of F_2^(k-s) whose integer encoding is ``i``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import gf2
from .core import (
    BooleanFunction,
    WalshSpectrum,
    _log2_exact,
    _parity,
    bitstring,
    inverse_wht,
    lex_order,
)
from .errors import (
    DualNotAtBentDistance,
    DualWeightError,
    HeightMismatch,
    LengthMismatch,
    ParseError,
    RecursionViolated,
    RepeatedSupportPoint,
    RowOutOfRange,
    SizeNotPowerOfTwo,
    SpectrumNotBoolean,
    VInsideE,
)


def _support_dim(size: int) -> int:
    d = _log2_exact(size)
    if d % 2:
        raise SizeNotPowerOfTwo(f"support of size 2^{d}: the exponent k - s must be even")
    return d


@dataclass(frozen=True)
class OrderedSupport:
    """S = {omega_0, ..., omega_{2^(k-s)-1}} with omega_i = v + e_i."""

    k: int
    s: int
    v: int
    e_list: tuple[int, ...]
    omega_list: tuple[int, ...]
    lexicographic: bool = True

    @classmethod
    def from_rows(cls, rows: Sequence[int], k: int) -> "OrderedSupport":
        """Keep the given row order; the anchor is the first row."""
        rows = tuple(int(r) for r in rows)
        if not rows:
            raise SizeNotPowerOfTwo("empty support")
        d = _support_dim(len(rows))
        if any(r < 0 or r >> k for r in rows):
            raise ValueError(f"support rows must be points of F_2^{k}")
        if len(set(rows)) != len(rows):
            seen = set()
            dup = next(r for r in rows if r in seen or seen.add(r))
            raise RepeatedSupportPoint(f"row {bitstring(dup, k)} occurs twice")
        v = rows[0]
        return cls(k, k - d, v, tuple(r ^ v for r in rows), rows, False)

    @property
    def size(self) -> int:
        return len(self.omega_list)

    @property
    def dim(self) -> int:
        """k - s, the number of variables of the dual."""
        return self.k - self.s

    def points(self) -> np.ndarray:
        return np.array(self.omega_list, dtype=np.int64)

    def __repr__(self) -> str:
        rows = ", ".join(bitstring(w, self.k) for w in self.omega_list)
        return f"OrderedSupport(k={self.k}, s={self.s}, v={bitstring(self.v, self.k)}, rows=[{rows}])"


def order_support(points: Iterable[int], k: int, v: int | None = None) -> OrderedSupport:
    """Order ``points`` as v + E with E increasing; v defaults to the smallest point."""
    pts = sorted(set(int(p) for p in points))
    if not pts:
        raise SizeNotPowerOfTwo("empty support")
    if any(p < 0 or p >> k for p in pts):
        raise ValueError(f"support points must lie in F_2^{k}")
    d = _support_dim(len(pts))
    v, e_list = lex_order(pts, v)
    return OrderedSupport(k, k - d, v, tuple(e_list), tuple(v ^ e for e in e_list), True)


# --------------------------------------------------------------------------
# Row sets and the interleave operator


@dataclass(frozen=True)
class Rows:
    """An ordered multiset of rows of fixed width (a 2^t x width bit matrix)."""

    width: int
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))

    @property
    def height(self) -> int:
        return len(self.values)

    @classmethod
    def column(cls, f: BooleanFunction) -> "Rows":
        """T_f: the truth table of f as a single column."""
        return cls(1, tuple(f.table.tolist()))

    @classmethod
    def space(cls, m: int) -> "Rows":
        """F_2^m in increasing order."""
        return cls(m, tuple(range(1 << m)))

    def __or__(self, other: "Rows") -> "Rows":
        return interleave(self, other)

    def column_function(self, j: int) -> BooleanFunction:
        """Column j (0-based, left to right) read as a truth table."""
        bits = [(v >> (self.width - 1 - j)) & 1 for v in self.values]
        return BooleanFunction.from_table(bits)

    def support(self) -> OrderedSupport:
        return OrderedSupport.from_rows(self.values, self.width)

    def __str__(self) -> str:
        return "\n".join(bitstring(v, self.width) for v in self.values)


def interleave(*blocks: Rows) -> Rows:
    """A | B | ...: concatenate the rows of equal-height blocks side by side."""
    if not blocks:
        raise ValueError("nothing to interleave")
    h = blocks[0].height
    for b in blocks:
        if b.height != h:
            raise HeightMismatch(f"block heights {h} and {b.height} differ")
    width = 0
    vals = [0] * h
    for b in blocks:
        vals = [(x << b.width) | y for x, y in zip(vals, b.values)]
        width += b.width
    return Rows(width, tuple(vals))


def complement_pair(l: BooleanFunction) -> Rows:
    """T_l | T_(l+1): every row is (l(x_i), l(x_i) + 1)."""
    if l.n < 2:
        raise ValueError("complement pairs need at least two variables")
    return interleave(Rows.column(l), Rows.column(~l))


# --------------------------------------------------------------------------
# Affine structure


def is_affine_subspace(points: Iterable[int]) -> tuple[int, list[int]] | None:
    """(v, basis) if the set equals v + span(basis), else None.

    v is the smallest point; the basis is reduced row echelon, rows decreasing.
    """
    pts = sorted(set(int(p) for p in points))
    if not pts:
        return None
    size = len(pts)
    if size & (size - 1):
        return None
    v = pts[0]
    shifted = [p ^ v for p in pts]
    basis = gf2.reduced_basis(shifted)
    if 1 << len(basis) != size:
        return None
    if sorted(gf2.span(basis)) != shifted:
        return None
    return v, basis


def hadamard_row(m: int, r: int) -> np.ndarray:
    """Row r of the 2^m x 2^m Sylvester-Hadamard matrix, i.e. (-1)^(r.x)."""
    if not 0 <= r < 1 << m:
        raise RowOutOfRange(f"row {r} outside H_{1 << m}")
    x = np.arange(1 << m, dtype=np.int64)
    return (1 - 2 * _parity(x & r).astype(np.int8)).astype(np.int8)


def hadamard_matrix(m: int) -> np.ndarray:
    """H_{2^m} by the block recursion [[H, H], [H, -H]]."""
    h = np.ones((1, 1), dtype=np.int8)
    for _ in range(m):
        h = np.block([[h, h], [h, -h]])
    return h


def lexicographic_recursion_check(support: OrderedSupport | Sequence[int]) -> bool:
    """e_j = e_(2^i) + e_(j - 2^i) for every i and 2^i <= j < 2^(i+1)."""
    e = support.e_list if isinstance(support, OrderedSupport) else tuple(support)
    size = len(e)
    if size == 0 or size & (size - 1) or e[0] != 0:
        return False
    i = 1
    while i < size:
        for j in range(i, 2 * i):
            if e[j] != e[i] ^ e[j - i]:
                return False
        i <<= 1
    return True


# --------------------------------------------------------------------------
# Sequence profile


@dataclass(frozen=True)
class SequenceProfile:
    """entries[u] = ((-1)^(u.omega_0), ..., (-1)^(u.omega_{N-1})) for all u in F_2^k."""

    k: int
    entries: np.ndarray

    def entry(self, u: int) -> np.ndarray:
        return self.entries[u]

    def __len__(self) -> int:
        return self.entries.shape[0]

    @property
    def length(self) -> int:
        return self.entries.shape[1]

    def as_functions(self) -> list[BooleanFunction]:
        return [BooleanFunction.from_table(row < 0) for row in self.entries]


def sequence_profile(support: OrderedSupport) -> SequenceProfile:
    u = np.arange(1 << support.k, dtype=np.int64)[:, None]
    omega = support.points()[None, :]
    signs = 1 - 2 * _parity(u & omega).astype(np.int8)
    signs.setflags(write=False)
    return SequenceProfile(support.k, signs)


def profile_violations(dual: BooleanFunction, profile: SequenceProfile) -> np.ndarray:
    """Indices u whose profile entry is not at bent distance to ``dual``."""
    if profile.length != dual.size:
        raise LengthMismatch(f"dual of length {dual.size} vs profile entries of {profile.length}")
    corr = profile.entries.astype(np.int64) @ dual.sequence
    return np.flatnonzero(np.abs(corr) != 1 << (dual.n // 2))


# --------------------------------------------------------------------------
# Synthesis


@dataclass(frozen=True)
class SynthesisSpec:
    support: OrderedSupport
    dual: BooleanFunction

    def __post_init__(self):
        d = self.support.dim
        if d < 2:
            raise DualWeightError("the dual needs at least two variables (k - s >= 2)")
        if self.dual.n != d:
            raise LengthMismatch(f"dual on {self.dual.n} variables, support needs {d}")
        w = self.dual.weight
        if abs(w - (1 << (d - 1))) != 1 << (d // 2 - 1):
            raise DualWeightError(
                f"wt(dual) = {w}, expected 2^{d - 1} +- 2^{d // 2 - 1}"
            )


def spectrum_of(spec: SynthesisSpec) -> WalshSpectrum:
    sup = spec.support
    amp = 1 << ((sup.k + sup.s) // 2)
    coeffs = np.zeros(1 << sup.k, dtype=np.int64)
    coeffs[sup.points()] = amp * spec.dual.sequence
    return WalshSpectrum(sup.k, coeffs)


def synthesize_plateaued(spec: SynthesisSpec) -> BooleanFunction:
    """The function whose spectrum is 2^((k+s)/2) (-1)^dual(x_i) at omega_i, 0 elsewhere."""
    try:
        return inverse_wht(spectrum_of(spec))
    except SpectrumNotBoolean as exc:
        u = exc.index
        raise DualNotAtBentDistance(
            f"dual is not at bent distance to the profile entry u={bitstring(u, spec.support.k)}",
            index=u,
        ) from None


def synthesize(rows: Sequence[int] | Rows, dual: BooleanFunction, k: int | None = None) -> BooleanFunction:
    """Shorthand: synthesize from rows taken in the given order."""
    if isinstance(rows, Rows):
        k, rows = rows.width, rows.values
    if k is None:
        raise ValueError("k is required for plain row lists")
    return synthesize_plateaued(SynthesisSpec(OrderedSupport.from_rows(rows, k), dual))


def first_profile_violation(spec: SynthesisSpec) -> int | None:
    """Smallest u whose profile entry breaks the bent-distance condition."""
    bad = profile_violations(spec.dual, sequence_profile(spec.support))
    return int(bad[0]) if bad.size else None


# --------------------------------------------------------------------------
# Multisets for the reduced-condition constructions


def build_delta_multiset(E: Sequence[int], b_list: Sequence[int], v: int) -> list[int]:
    """v + (b_0 + E, b_1 + E, ...), block by block, E taken in the given order.

    E must be a 2-dimensional linear subspace (E[0] = 0) and the b_j must
    satisfy b_j = b_(2^i) + b_(j - 2^i).
    """
    E = [int(e) for e in E]
    if len(E) != 4 or E[0] != 0 or gf2.rank(E) != 2 or sorted(gf2.span(gf2.reduced_basis(E))) != sorted(E):
        raise ValueError("E must be a 2-dimensional linear subspace listed with 0 first")
    b_list = [int(b) for b in b_list]
    nb = len(b_list)
    if nb == 0 or nb & (nb - 1):
        raise SizeNotPowerOfTwo(f"{nb} shifts; need 2^(m-2)")
    Eset = set(E)
    for j, b in enumerate(b_list):
        if b not in Eset:
            raise RecursionViolated(f"b_{j} is not in E")
    i = 1
    while i < nb:
        for j in range(i, 2 * i):
            if b_list[j] != b_list[i] ^ b_list[j - i]:
                raise RecursionViolated(f"b_{j} != b_{i} + b_{j - i}")
        i <<= 1
    if v in Eset:
        raise VInsideE("v must lie outside E")
    return [v ^ b ^ e for b in b_list for e in E]


# --------------------------------------------------------------------------
# Support exchange format


def parse_support_text(text: str) -> tuple[Rows, BooleanFunction | None]:
    """One bit string per line (MSB first); an optional dual hex after a blank line."""
    blocks = [b for b in text.replace("\r\n", "\n").split("\n\n") if b.strip()]
    if not blocks or len(blocks) > 2:
        raise ParseError("expected a support block and at most one dual block", 0)
    lines = [ln.strip() for ln in blocks[0].splitlines() if ln.strip()]
    k = len(lines[0])
    rows = []
    for i, ln in enumerate(lines):
        if len(ln) != k or set(ln) - {"0", "1"}:
            raise ParseError(f"line {i + 1} is not a bit string of length {k}", i + 1)
        rows.append(int(ln, 2))
    fdual = None
    if len(blocks) == 2:
        hex_lines = [ln.strip() for ln in blocks[1].splitlines() if ln.strip()]
        if len(hex_lines) != 1:
            raise ParseError("the dual block must be one hex line", len(lines) + 2)
        fdual = BooleanFunction.from_hex(hex_lines[0])
    return Rows(k, tuple(rows)), fdual


def format_support_text(rows: Rows, dual: BooleanFunction | None = None) -> str:
    out = str(rows) + "\n"
    if dual is not None:
        out += "\n" + dual.to_hex() + "\n"
    return out
