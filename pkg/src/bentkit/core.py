"""Boolean functions on F_2^n: truth tables, ANF, Walsh spectra, duals.

Index convention (used by every module): the input ``x = (x_1, ..., x_n)``
is stored at table index ``sum(x_j << (n - j))``, i.e. ``x_1`` is the most
significant bit.  Points of F_2^k (supports, directions, masks) are plain
ints under the same convention.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import (
    CapacityError,
    DimensionMismatch,
    InvariantBreach,
    NotPlateauedOrBent,
    ParseError,
    SizeNotPowerOfTwo,
    SpectrumNotBoolean,
    VNotInSupport,
)

N_MAX = 28

_HEX = "0123456789abcdef"


def checks_enabled() -> bool:
    """Extra self-checks (Parseval on every transform etc.), off by default."""
    return os.environ.get("BENTKIT_CHECKS", "") not in ("", "0")


def _check_n(n: int) -> None:
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError(f"variable count must be a positive integer, got {n!r}")
    if n > N_MAX:
        raise CapacityError(f"n={n} exceeds N_MAX={N_MAX}")


def to_bits(v: int, k: int) -> tuple[int, ...]:
    """Bit tuple (x_1, ..., x_k) of the point encoded as ``v``."""
    return tuple((v >> (k - 1 - j)) & 1 for j in range(k))


def from_bits(bits: Iterable[int]) -> int:
    r = 0
    for b in bits:
        r = (r << 1) | (int(b) & 1)
    return r


def dot(a: int, b: int) -> int:
    return (int(a) & int(b)).bit_count() & 1


def bitstring(v: int, k: int) -> str:
    return format(v, f"0{k}b") if k else ""


def _log2_exact(size: int) -> int:
    n = size.bit_length() - 1
    if size <= 0 or (1 << n) != size:
        raise SizeNotPowerOfTwo(f"length {size} is not a power of two")
    return n


def _parity(arr: np.ndarray) -> np.ndarray:
    return (np.bitwise_count(arr) & 1).astype(np.uint8)


def _butterfly(a: np.ndarray) -> np.ndarray:
    # in-place Sylvester butterfly, O(n 2^n)
    h = 1
    while h < a.size:
        v = a.reshape(-1, 2, h)
        x = v[:, 0, :]
        y = v[:, 1, :]
        x += y
        y *= -2
        y += x
        h <<= 1
    return a


def _moebius(a: np.ndarray) -> np.ndarray:
    h = 1
    while h < a.size:
        v = a.reshape(-1, 2, h)
        v[:, 1, :] ^= v[:, 0, :]
        h <<= 1
    return a


class BooleanFunction:
    """An immutable truth table of a function F_2^n -> F_2."""

    __slots__ = ("n", "table")

    def __init__(self, n: int, table):
        _check_n(n)
        t = np.array(table, dtype=np.uint8).reshape(-1)
        if t.size != 1 << n:
            raise DimensionMismatch(f"table of length {t.size} for n={n}")
        if t.size and t.max(initial=0) > 1:
            raise ValueError("truth table entries must be 0 or 1")
        t.setflags(write=False)
        self.n = int(n)
        self.table = t

    # constructors ---------------------------------------------------------

    @classmethod
    def from_table(cls, table) -> "BooleanFunction":
        t = np.asarray(table, dtype=np.uint8).reshape(-1)
        return cls(_log2_exact(t.size), t)

    @classmethod
    def constant(cls, n: int, value: int = 0) -> "BooleanFunction":
        _check_n(n)
        return cls(n, np.full(1 << n, value & 1, dtype=np.uint8))

    @classmethod
    def variable(cls, n: int, j: int) -> "BooleanFunction":
        """The coordinate function x_j (1-based)."""
        if not 1 <= j <= n:
            raise ValueError(f"variable x{j} out of range for n={n}")
        _check_n(n)
        idx = np.arange(1 << n, dtype=np.int64)
        return cls(n, (idx >> (n - j)) & 1)

    @classmethod
    def linear(cls, n: int, a: int, c: int = 0) -> "BooleanFunction":
        """The affine function x -> a.x + c."""
        _check_n(n)
        idx = np.arange(1 << n, dtype=np.int64)
        return cls(n, _parity(idx & int(a)) ^ (c & 1))

    @classmethod
    def from_callable(cls, n: int, fn: Callable[..., int]) -> "BooleanFunction":
        """Tabulate ``fn(x_1, ..., x_n)``; slow, meant for tests and examples."""
        return cls(n, [fn(*to_bits(i, n)) & 1 for i in range(1 << n)])

    @classmethod
    def from_hex(cls, text: str) -> "BooleanFunction":
        s = text.strip().lower()
        if s.startswith("0x"):
            s = s[2:]
        for pos, ch in enumerate(s):
            if ch not in _HEX:
                raise ParseError(f"invalid hex digit {ch!r}", pos)
        if not s:
            raise ParseError("empty truth table", 0)
        try:
            n = _log2_exact(4 * len(s))
        except SizeNotPowerOfTwo:
            raise ParseError(f"hex length {len(s)} is not 2^n/4", len(s)) from None
        digits = np.array([_HEX.index(ch) for ch in s], dtype=np.uint8)
        bits = (digits[:, None] >> np.array([3, 2, 1, 0], dtype=np.uint8)) & 1
        return cls(n, bits.reshape(-1))

    @classmethod
    def from_anf(cls, text: str, n: int | None = None) -> "BooleanFunction":
        return function_of(Anf.parse(text, n))

    @classmethod
    def random(cls, n: int, rng: np.random.Generator) -> "BooleanFunction":
        _check_n(n)
        return cls(n, rng.integers(0, 2, size=1 << n, dtype=np.uint8))

    # views ------------------------------------------------------------------

    @property
    def size(self) -> int:
        return 1 << self.n

    @property
    def weight(self) -> int:
        return int(self.table.sum(dtype=np.int64))

    @property
    def sequence(self) -> np.ndarray:
        """The +-1 sequence ((-1)^f(x))_x."""
        return 1 - 2 * self.table.astype(np.int64)

    def support(self) -> list[int]:
        return np.flatnonzero(self.table).tolist()

    def to_hex(self) -> str:
        if self.n < 2:
            raise ValueError("hex format needs n >= 2")
        digits = self.table.reshape(-1, 4) @ np.array([8, 4, 2, 1])
        return "".join(_HEX[d] for d in digits)

    def __call__(self, x) -> int:
        if not isinstance(x, (int, np.integer)):
            x = from_bits(x)
        return int(self.table[x])

    # algebra ----------------------------------------------------------------

    def _same_n(self, other: "BooleanFunction") -> None:
        if not isinstance(other, BooleanFunction):
            raise TypeError(f"expected BooleanFunction, got {type(other).__name__}")
        if other.n != self.n:
            raise DimensionMismatch(f"n={self.n} vs n={other.n}")

    def __xor__(self, other):
        if isinstance(other, (int, np.integer)):
            return BooleanFunction(self.n, self.table ^ (int(other) & 1))
        self._same_n(other)
        return BooleanFunction(self.n, self.table ^ other.table)

    __rxor__ = __xor__
    __add__ = __xor__
    __radd__ = __xor__

    def __and__(self, other):
        if isinstance(other, (int, np.integer)):
            return BooleanFunction(self.n, self.table & (int(other) & 1))
        self._same_n(other)
        return BooleanFunction(self.n, self.table & other.table)

    __rand__ = __and__
    __mul__ = __and__
    __rmul__ = __and__

    def __invert__(self) -> "BooleanFunction":
        return BooleanFunction(self.n, self.table ^ 1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BooleanFunction):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.table, other.table)

    def __hash__(self) -> int:
        return hash((self.n, self.table.tobytes()))

    def lift(self, before: int = 0, after: int = 0) -> "BooleanFunction":
        """This function placed on a middle block of ``before + n + after`` variables."""
        t = np.repeat(self.table, 1 << after)
        t = np.tile(t, 1 << before)
        return BooleanFunction(before + self.n + after, t)

    def restrict(self, fixed: dict[int, int]) -> "BooleanFunction":
        """Fix some variables (1-based index -> bit); the rest keep their order."""
        if len(fixed) >= self.n:
            raise ValueError("restriction must leave at least one free variable")
        cube = self.table.reshape([2] * self.n)
        index = tuple(
            int(fixed[j]) & 1 if j in fixed else slice(None) for j in range(1, self.n + 1)
        )
        return BooleanFunction(self.n - len(fixed), cube[index].reshape(-1))

    def __repr__(self) -> str:
        if self.n >= 2:
            return f"BooleanFunction(n={self.n}, hex={self.to_hex()!r})"
        return f"BooleanFunction(n={self.n}, table={self.table.tolist()})"

    def __str__(self) -> str:
        return str(anf_of(self))


def concat(*parts: BooleanFunction) -> BooleanFunction:
    """Truth-table concatenation f_0 || f_1 || ... (new variables on the left)."""
    n = parts[0].n
    for p in parts:
        if p.n != n:
            raise DimensionMismatch("concatenated parts must share n")
    return BooleanFunction.from_table(np.concatenate([p.table for p in parts]))


# --------------------------------------------------------------------------
# Algebraic normal form


@dataclass(frozen=True)
class Anf:
    """ANF as the set of monomial exponent vectors (ints, x_1 = MSB)."""

    n: int
    monomials: frozenset[int] = field(default_factory=frozenset)

    @property
    def degree(self) -> int:
        return max((u.bit_count() for u in self.monomials), default=0)

    def terms(self) -> list[tuple[int, ...]]:
        """Monomials as sorted tuples of 1-based variable indices."""
        out = []
        for u in self.monomials:
            out.append(tuple(j for j in range(1, self.n + 1) if (u >> (self.n - j)) & 1))
        out.sort(key=lambda t: (len(t), t))
        return out

    def __str__(self) -> str:
        if not self.monomials:
            return "0"
        parts = ["*".join(f"x{j}" for j in t) if t else "1" for t in self.terms()]
        return " + ".join(parts)

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "Anf":
        """Parse ``x1*x2 + x3 + 1`` style text.  ``n`` defaults to the largest index."""
        terms: list[list[int]] = []
        current: list[int] = []
        expect_factor = True
        saw_zero = False
        i = 0
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
                continue
            if expect_factor:
                if ch == "x":
                    j = i + 1
                    while j < len(text) and text[j].isdigit():
                        j += 1
                    if j == i + 1:
                        raise ParseError("expected variable index after 'x'", i + 1)
                    idx = int(text[i + 1 : j])
                    if idx < 1:
                        raise ParseError(f"variables are 1-based, got x{idx}", i)
                    current.append(idx)
                    i = j
                elif ch == "1" and not (i + 1 < len(text) and text[i + 1].isdigit()):
                    i += 1
                elif ch == "0" and not terms and not current and text[i + 1 :].strip() == "":
                    saw_zero = True
                    i += 1
                else:
                    raise ParseError(f"unexpected {ch!r}", i)
                expect_factor = False
            else:
                if ch == "*":
                    expect_factor = True
                elif ch == "+":
                    terms.append(current)
                    current = []
                    expect_factor = True
                else:
                    raise ParseError(f"expected '+' or '*', got {ch!r}", i)
                i += 1
        if expect_factor:
            raise ParseError("unexpected end of input", len(text))
        if not saw_zero:
            terms.append(current)
        top = max((v for t in terms for v in t), default=0)
        if n is None:
            n = max(top, 1)
        elif top > n:
            raise ParseError(f"x{top} exceeds n={n}", len(text))
        _check_n(n)
        monos: set[int] = set()
        for t in terms:
            u = 0
            for v in t:
                u |= 1 << (n - v)
            monos ^= {u}
        return cls(n, frozenset(monos))


def anf_of(f: BooleanFunction) -> Anf:
    coeffs = _moebius(f.table.copy())
    return Anf(f.n, frozenset(np.flatnonzero(coeffs).tolist()))


def function_of(a: Anf) -> BooleanFunction:
    t = np.zeros(1 << a.n, dtype=np.uint8)
    for u in a.monomials:
        t[u] = 1
    return BooleanFunction(a.n, _moebius(t))


def algebraic_degree(f: BooleanFunction) -> int:
    coeffs = _moebius(f.table.copy())
    nz = np.flatnonzero(coeffs)
    return int(np.bitwise_count(nz).max()) if nz.size else 0


# --------------------------------------------------------------------------
# Walsh-Hadamard transform


class WalshSpectrum:
    """All 2^n Walsh coefficients of a function, as exact integers."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs):
        _check_n(n)
        c = np.array(coeffs, dtype=np.int64).reshape(-1)
        if c.size != 1 << n:
            raise DimensionMismatch(f"spectrum of length {c.size} for n={n}")
        c.setflags(write=False)
        self.n = int(n)
        self.coeffs = c

    def __getitem__(self, u: int) -> int:
        return int(self.coeffs[u])

    def __len__(self) -> int:
        return self.coeffs.size

    def __eq__(self, other) -> bool:
        if not isinstance(other, WalshSpectrum):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.coeffs, other.coeffs)

    def support(self) -> list[int]:
        return np.flatnonzero(self.coeffs).tolist()

    def distribution(self) -> dict[int, int]:
        vals, counts = np.unique(self.coeffs, return_counts=True)
        return {int(v): int(c) for v, c in zip(vals, counts)}

    def parseval_ok(self) -> bool:
        return int(np.dot(self.coeffs, self.coeffs)) == 1 << (2 * self.n)

    def __repr__(self) -> str:
        return f"WalshSpectrum(n={self.n}, distribution={self.distribution()})"


def wht(f: BooleanFunction) -> WalshSpectrum:
    """W_f(u) = sum_x (-1)^(f(x) + u.x), by an in-place butterfly."""
    if f.n > N_MAX:
        raise CapacityError(f"n={f.n} exceeds N_MAX={N_MAX}")
    dtype = np.int32 if f.n <= 28 else np.int64
    a = (1 - 2 * f.table.astype(dtype))
    spec = WalshSpectrum(f.n, _butterfly(a))
    if checks_enabled() and not spec.parseval_ok():
        raise InvariantBreach("Parseval identity violated")
    return spec


def inverse_wht(spectrum) -> BooleanFunction:
    """Recover f from W_f; raises SpectrumNotBoolean if no such f exists."""
    if isinstance(spectrum, WalshSpectrum):
        n, coeffs = spectrum.n, spectrum.coeffs
    else:
        coeffs = np.asarray(spectrum, dtype=np.int64).reshape(-1)
        n = _log2_exact(coeffs.size)
    raw = _butterfly(np.array(coeffs, dtype=np.int64))
    scale = 1 << n
    ok = (raw == scale) | (raw == -scale)
    if not ok.all():
        bad = int(np.flatnonzero(~ok)[0])
        raise SpectrumNotBoolean(
            f"reconstructed value {raw[bad]}/2^{n} at x={bad} is not +-1", index=bad
        )
    return BooleanFunction(n, (raw < 0).astype(np.uint8))


# --------------------------------------------------------------------------
# Spectral classification


class Tag(str, Enum):
    BENT = "bent"
    PLATEAUED = "plateaued"
    AFFINE = "affine"
    OTHER = "other"


@dataclass(frozen=True)
class SpectrumClass:
    tag: Tag
    s: int | None
    distribution: dict[int, int]

    @property
    def is_bent(self) -> bool:
        return self.tag is Tag.BENT

    def is_plateaued(self, s: int | None = None) -> bool:
        return self.tag is Tag.PLATEAUED and (s is None or self.s == s)

    def __str__(self) -> str:
        if self.tag is Tag.PLATEAUED:
            return f"Plateaued{{{self.s}}}"
        return self.tag.value.capitalize()


def _classify(n: int, spec: WalshSpectrum, f0: int) -> SpectrumClass:
    dist = spec.distribution()
    nonzero = {v: c for v, c in dist.items() if v != 0}
    amps = {abs(v) for v in nonzero}
    if len(amps) != 1:
        return SpectrumClass(Tag.OTHER, None, dist)
    amp = amps.pop()
    e = amp.bit_length() - 1
    if (1 << e) != amp:
        return SpectrumClass(Tag.OTHER, None, dist)
    s = 2 * e - n
    if s == 0:
        return SpectrumClass(Tag.BENT, 0, dist)
    if s == n:
        return SpectrumClass(Tag.AFFINE, None, dist)
    if s < 1 or s > n - 1 or (n % 2 == 0 and s < 2):
        return SpectrumClass(Tag.OTHER, None, dist)
    size = 1 << n
    pos, neg = nonzero.get(amp, 0), nonzero.get(-amp, 0)
    sign = -1 if f0 else 1
    half = 1 << ((n - s) // 2 - 1)
    if (
        dist.get(0, 0) != size - (1 << (n - s))
        or pos != (1 << (n - s - 1)) + sign * half
        or neg != (1 << (n - s - 1)) - sign * half
    ):
        raise InvariantBreach(f"plateaued distribution {dist} contradicts Parseval")
    return SpectrumClass(Tag.PLATEAUED, s, dist)


def classify(f: BooleanFunction, spectrum: WalshSpectrum | None = None) -> SpectrumClass:
    """Bent / Plateaued{s} / Affine / Other, with the value distribution."""
    if spectrum is None:
        spectrum = wht(f)
    return _classify(f.n, spectrum, int(f.table[0]))


def walsh_support(f: BooleanFunction) -> list[int]:
    return wht(f).support()


def lex_order(points: Iterable[int], v: int | None = None) -> tuple[int, list[int]]:
    """Write a point set as v + E with E sorted increasingly; returns (v, E)."""
    pts = sorted(set(int(p) for p in points))
    if not pts:
        raise ValueError("empty point set")
    if v is None:
        v = pts[0]
    elif v not in set(pts):
        raise VNotInSupport(f"anchor {v} is not in the support")
    return v, sorted(p ^ v for p in pts)


def dual(f: BooleanFunction, v: int | None = None) -> tuple[int, BooleanFunction]:
    """Dual of a bent or plateaued f, read through S_f = v + E (E sorted).

    Returns the anchor and f* on n - s variables, where
    W_f(v + e_j) = 2^((n+s)/2) (-1)^(f*(j)).
    """
    spec = wht(f)
    cls = _classify(f.n, spec, int(f.table[0]))
    if cls.tag not in (Tag.BENT, Tag.PLATEAUED):
        raise NotPlateauedOrBent(f"dual needs a bent or plateaued function, got {cls}")
    v, e_list = lex_order(spec.support(), v)
    omegas = np.array(e_list, dtype=np.int64) ^ v
    return v, BooleanFunction(f.n - cls.s, (spec.coeffs[omegas] < 0).astype(np.uint8))


def bent_dual(f: BooleanFunction) -> BooleanFunction:
    """f* with W_f(u) = 2^(n/2) (-1)^f*(u); raises if f is not bent."""
    spec = wht(f)
    if f.n % 2 or not np.all(np.abs(spec.coeffs) == 1 << (f.n // 2)):
        raise NotPlateauedOrBent("function is not bent")
    return BooleanFunction(f.n, (spec.coeffs < 0).astype(np.uint8))


def hamming_distance(f: BooleanFunction, g: BooleanFunction) -> int:
    f._same_n(g)
    return int(np.count_nonzero(f.table != g.table))


def bent_distance(f: BooleanFunction, g: BooleanFunction) -> bool:
    """d_H(f, g) = 2^(n-1) +- 2^(n/2-1); always False for odd n."""
    f._same_n(g)
    if f.n % 2:
        return False
    d = hamming_distance(f, g)
    return abs(d - (1 << (f.n - 1))) == 1 << (f.n // 2 - 1)


def sequences_at_bent_distance(a: np.ndarray, b: np.ndarray) -> bool:
    """Bent distance for two +-1 sequences of equal length 2^m."""
    m = _log2_exact(len(a))
    if m % 2:
        return False
    return abs(int(np.dot(a.astype(np.int64), b.astype(np.int64)))) == 1 << (m // 2)


# --------------------------------------------------------------------------
# Vectorial functions


@dataclass(frozen=True)
class VectorialFunction:
    """H = (h_1, ..., h_k) with all coordinates on the same n variables."""

    coords: tuple[BooleanFunction, ...]

    def __init__(self, coords: Sequence[BooleanFunction]):
        coords = tuple(coords)
        if not coords:
            raise ValueError("a vectorial function needs at least one coordinate")
        n = coords[0].n
        for h in coords:
            if h.n != n:
                raise DimensionMismatch("all coordinates must share n")
        object.__setattr__(self, "coords", coords)

    @property
    def n(self) -> int:
        return self.coords[0].n

    @property
    def k(self) -> int:
        return len(self.coords)

    def values(self) -> np.ndarray:
        """H(x) for every x, encoded as ints with h_1 as most significant bit."""
        out = np.zeros(1 << self.n, dtype=np.int64)
        for h in self.coords:
            out = (out << 1) | h.table
        return out

    def component(self, w) -> BooleanFunction:
        return component(self, w)

    def __getitem__(self, i: int) -> BooleanFunction:
        return self.coords[i]

    def __len__(self) -> int:
        return self.k


def component(H: VectorialFunction, w) -> BooleanFunction:
    """w_1 h_1 + ... + w_k h_k; ``w`` is an int (w_1 = MSB) or a bit tuple."""
    if isinstance(w, (int, np.integer)):
        w = int(w)
        if w < 0 or w >= 1 << H.k:
            raise DimensionMismatch(f"w={w} is not a point of F_2^{H.k}")
        bits = to_bits(w, H.k)
    else:
        bits = tuple(w)
        if len(bits) != H.k:
            raise DimensionMismatch(f"w has length {len(bits)}, expected {H.k}")
    t = np.zeros(1 << H.n, dtype=np.uint8)
    for b, h in zip(bits, H.coords):
        if b:
            t ^= h.table
    return BooleanFunction(H.n, t)
