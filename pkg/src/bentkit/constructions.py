"""Secondary constructions of bent and plateaued functions.

Every construction computes F(x) = f(h_1(x), ..., h_k(x)) for an outer
form f.  Each one is available as a closed formula and, with
``via_form=True``, as ``compose`` of the form synthesized from its Walsh
support and dual; the two must agree.

Variable layout is fixed: the initial functions occupy consecutive blocks
in argument order (x, then y, z, w) and any fresh variables come last.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import gf2
from .core import (
    BooleanFunction,
    SpectrumClass,
    Tag,
    VectorialFunction,
    WalshSpectrum,
    bent_dual,
    bitstring,
    classify,
    dual,
    wht,
)
from .errors import (
    ArityMismatch,
    DimensionMismatch,
    InvariantBreach,
    ModeConditionFailed,
    NegativeT,
    NotDirectSum,
    NotPlateauedOrBent,
    PreconditionFailed,
    SupportNotSplittable,
    SupportsNotLinear,
)
from .synth import (
    Rows,
    complement_pair,
    interleave,
    is_affine_subspace,
    synthesize,
)

VERIFY_LIMIT = 16


def _verify_on(verify: bool | None, n: int) -> bool:
    return n <= VERIFY_LIMIT if verify is None else bool(verify)


def is_bent(f: BooleanFunction) -> bool:
    if f.n % 2:
        return False
    return bool(np.all(np.abs(wht(f).coeffs) == 1 << (f.n // 2)))


def _require_bent(named: dict[str, BooleanFunction]) -> None:
    for name, f in named.items():
        if not is_bent(f):
            raise PreconditionFailed(f"{name} is not bent", witness=name)


def _same_n(*fs: BooleanFunction) -> int:
    n = fs[0].n
    for f in fs:
        if f.n != n:
            raise DimensionMismatch("initial functions must share their variable count")
    return n


def _var(n: int, j: int) -> BooleanFunction:
    return BooleanFunction.variable(n, j)


# --------------------------------------------------------------------------
# Composite representation


@dataclass(frozen=True)
class CompositeSpec:
    form: BooleanFunction
    coords: VectorialFunction

    def __post_init__(self):
        if not isinstance(self.coords, VectorialFunction):
            object.__setattr__(self, "coords", VectorialFunction(self.coords))
        if self.form.n != self.coords.k:
            raise ArityMismatch(f"form has {self.form.n} inputs, coords give {self.coords.k}")


def compose(form, coords=None) -> BooleanFunction:
    """F(x) = form(h_1(x), ..., h_k(x)); accepts a CompositeSpec or (form, coords)."""
    spec = form if isinstance(form, CompositeSpec) else CompositeSpec(form, coords)
    return BooleanFunction(spec.coords.n, spec.form.table[spec.coords.values()])


def _component_spectra(coords: VectorialFunction, omegas) -> np.ndarray:
    out = np.empty((len(omegas), 1 << coords.n), dtype=np.int64)
    for i, w in enumerate(omegas):
        out[i] = wht(coords.component(int(w))).coeffs
    return out


def composite_wht_identity_check(spec: CompositeSpec, u: int | None = None, reduced: bool = False) -> bool:
    """Check 2^k W_F(u) = sum_w W_f(w) W_(w.h)(u) exactly (all u when u is None).

    With ``reduced`` the sum runs over the Walsh support of a bent or
    plateaued form only, with the signs read from its dual.
    """
    k = spec.form.n
    lhs = wht(compose(spec)).coeffs
    if reduced:
        v, fstar = dual(spec.form)
        sf = wht(spec.form).coeffs
        omegas = np.flatnonzero(sf)
        # map dual entries back through the ordered support v + E
        e_sorted = np.sort(omegas ^ v)
        omegas = e_sorted ^ v
        cls = classify(spec.form, WalshSpectrum(k, sf))
        amp = 1 << ((k + (cls.s or 0)) // 2)
        weights = amp * fstar.sequence
    else:
        weights = wht(spec.form).coeffs
        omegas = np.flatnonzero(weights)
        weights = weights[omegas]
    comp = _component_spectra(spec.coords, omegas)
    rhs = weights @ comp
    if u is None:
        return bool(np.array_equal(rhs, lhs << k))
    return int(rhs[u]) == int(lhs[u]) << k


# --------------------------------------------------------------------------
# Forms synthesized from support data


def _table(bits) -> BooleanFunction:
    return BooleanFunction.from_table(bits)


def _anf(text: str, n: int) -> BooleanFunction:
    return BooleanFunction.from_anf(text, n)


@lru_cache(maxsize=None)
def rothaus_form() -> BooleanFunction:
    """5-variable form of (a, b, c, y_1, y_2); support {a, b, c, a+b+c} x F_2^2."""
    return synthesize(Rows(5, (0b10000, 0b01010, 0b00101, 0b11111)), _table([0, 0, 0, 1]))


def delta_support(E, b_list, v, s: int, m: int) -> Rows:
    from .synth import build_delta_multiset

    return interleave(Rows(s, tuple(build_delta_multiset(E, b_list, v))), Rows.space(m))


@lru_cache(maxsize=None)
def gen_rothaus_a_form() -> BooleanFunction:
    rows = delta_support((0, 0b110, 0b101, 0b011), (0, 0b101, 0b101, 0), 0b100, 3, 4)
    return synthesize(rows, _anf("x1*x3 + x2*x3 + x2*x4 + x3*x4 + x3", 4))


@lru_cache(maxsize=None)
def gen_rothaus_b_form() -> BooleanFunction:
    g = _anf("x3*x4", 4)
    rows = interleave(Rows.column(g), Rows.column(~g), Rows.space(4))
    return synthesize(rows, _anf("x1*x3 + x2*x4", 4))


def pair_support(ells: Sequence[BooleanFunction]) -> Rows:
    return interleave(*[complement_pair(l) for l in ells])


@lru_cache(maxsize=None)
def _pair_form(ells: tuple[BooleanFunction, ...], xi_dual: BooleanFunction, free: int) -> BooleanFunction:
    blocks = [complement_pair(l) for l in ells]
    if free:
        blocks.append(Rows.space(free))
    return synthesize(interleave(*blocks), xi_dual)


def pair_form(ells: Sequence[BooleanFunction], xi_dual: BooleanFunction, free: int = 0) -> BooleanFunction:
    """Form whose support is M_1 | ... | M_k (| F_2^free), M_i = T_l_i | T_(l_i+1)."""
    return _pair_form(tuple(ells), xi_dual, free)


def _vars(t: int) -> tuple[BooleanFunction, ...]:
    return tuple(_var(t, i) for i in range(1, t + 1))


def indirect_sum_form() -> BooleanFunction:
    x1, x2 = _vars(2)
    return pair_form((x1, x2), _anf("x1*x2 + x1 + x2 + 1", 2))


def gis_a_form() -> BooleanFunction:
    return pair_form(_vars(4), _anf("x1*x3 + x2*x4 + x3*x4", 4))


def gis_b_form() -> BooleanFunction:
    x1, x2 = _vars(2)
    return pair_form((x1, x2), _anf("x1*x2", 2), free=2)


def gis_c_form() -> BooleanFunction:
    return pair_form((_anf("x3*x4", 4), _anf("x2*x3", 4)), _anf("x1*x3 + x2*x4", 4), free=4)


@lru_cache(maxsize=None)
def majority_form() -> BooleanFunction:
    """x1x2 + x1x3 + x2x3: support {100, 010, 001, 111}, negative at 111."""
    return synthesize(Rows(3, (0b100, 0b010, 0b001, 0b111)), _table([0, 0, 0, 1]))


@lru_cache(maxsize=None)
def dualcor_form() -> BooleanFunction:
    """x3(x2 + x4) + x1(x2 + x3 + x4): support {1000, 0101, 0010, 1111}."""
    return synthesize(Rows(4, (0b1000, 0b0101, 0b0010, 0b1111)), _table([0, 0, 0, 1]))


# --------------------------------------------------------------------------
# Rothaus and its generalizations


def _extend(fs: Sequence[BooleanFunction], fresh: int) -> list[BooleanFunction]:
    return [f.lift(0, fresh) for f in fs]


def rothaus(a, b, c, verify: bool | None = None, via_form: bool = False) -> BooleanFunction:
    """ab + ac + bc + (a+b)y_2 + (a+c)y_1 + y_1y_2 on k+2 variables."""
    k = _same_n(a, b, c)
    n = k + 2
    if _verify_on(verify, n):
        _require_bent({"a": a, "b": b, "c": c, "a+b+c": a ^ b ^ c})
    A, B, C = _extend((a, b, c), 2)
    y1, y2 = _var(n, k + 1), _var(n, k + 2)
    if via_form:
        return compose(rothaus_form(), (A, B, C, y1, y2))
    return (A & B) ^ (A & C) ^ (B & C) ^ ((A ^ B) & y2) ^ ((A ^ C) & y1) ^ (y1 & y2)


def generalized_rothaus_a(a, b, c, verify: bool | None = None, via_form: bool = False) -> BooleanFunction:
    """b(y1+y2) + a(1+y1+y3) + (c+y1)(y2+y3) + (y1+y2)y4 on r+4 variables."""
    r = _same_n(a, b, c)
    n = r + 4
    if _verify_on(verify, n):
        _require_bent({"a": a, "b": b, "c": c, "a+b+c": a ^ b ^ c})
    A, B, C = _extend((a, b, c), 4)
    y1, y2, y3, y4 = (_var(n, r + i) for i in range(1, 5))
    if via_form:
        return compose(gen_rothaus_a_form(), (A, B, C, y1, y2, y3, y4))
    return (B & (y1 ^ y2)) ^ (A & (y1 ^ y3 ^ 1)) ^ ((C ^ y1) & (y2 ^ y3)) ^ ((y1 ^ y2) & y4)


def generalized_rothaus_b(a, b, verify: bool | None = None, via_form: bool = False) -> BooleanFunction:
    """b + (a+b)y1y2 + y1y3 + y2y4 on r+4 variables."""
    r = _same_n(a, b)
    n = r + 4
    if _verify_on(verify, n):
        _require_bent({"a": a, "b": b})
    A, B = _extend((a, b), 4)
    y1, y2, y3, y4 = (_var(n, r + i) for i in range(1, 5))
    if via_form:
        return compose(gen_rothaus_b_form(), (A, B, y1, y2, y3, y4))
    return B ^ ((A ^ B) & y1 & y2) ^ (y1 & y3) ^ (y2 & y4)


@dataclass(frozen=True)
class P1Result:
    function: BooleanFunction
    dual: BooleanFunction | None
    report: SpectrumClass


def split_support(form: BooleanFunction, m: int) -> dict[int, int]:
    """theta -> delta for a support Delta | F_2^m where each theta occurs once."""
    k = form.n
    t = k - m
    support = wht(form).support()
    theta_map: dict[int, int] = {}
    for w in support:
        delta, theta = w >> m, w & ((1 << m) - 1)
        if theta in theta_map:
            raise SupportNotSplittable(
                f"theta={bitstring(theta, m)} occurs twice in the support", witness=theta
            )
        theta_map[theta] = delta
    if len(theta_map) != 1 << m:
        raise SupportNotSplittable("the last m coordinates of the support do not cover F_2^m")
    if 0 in theta_map.values():
        raise SupportNotSplittable(f"0_{t} lies in Delta", witness=0)
    return theta_map


def theorem_p1_construct(form: BooleanFunction, h: VectorialFunction, mode: str = "i",
                         verify: bool | None = None) -> P1Result:
    """F(x, y) = form(h_1(x), ..., h_s(x), y) for an s-plateaued form with support Delta | F_2^m.

    mode "i": every delta.h bent, F bent, dual returned.
    mode "ii": every delta.h c-plateaued for one c, F c-plateaued.
    mode "iii": amplitudes may differ; only the spectrum report is returned.
    """
    if mode not in ("i", "ii", "iii"):
        raise ValueError(f"unknown mode {mode!r}")
    cls = classify(form)
    if cls.tag is not Tag.PLATEAUED:
        raise NotPlateauedOrBent(f"the form must be plateaued, got {cls}")
    s = cls.s
    if h.k != s:
        raise ArityMismatch(f"form is {s}-plateaued, so it needs {s} coordinate functions, got {h.k}")
    k, r = form.n, h.n
    m = k - s
    theta_map = split_support(form, m)
    n = r + m
    deltas = sorted(set(theta_map.values()))
    comps = {d: h.component(d) for d in deltas}
    classes = {d: classify(c) for d, c in comps.items()}
    check = _verify_on(verify, n)
    if mode == "i" and check:
        for d in deltas:
            if not classes[d].is_bent:
                raise ModeConditionFailed(f"delta.h is not bent for delta={bitstring(d, s)}", witness=d)
    if mode == "ii" and check:
        cs = set()
        for d in deltas:
            if classes[d].tag is not Tag.PLATEAUED:
                raise ModeConditionFailed(f"delta.h is not plateaued for delta={bitstring(d, s)}", witness=d)
            cs.add(classes[d].s)
        if len(cs) != 1:
            raise ModeConditionFailed(f"delta.h have different amplitudes {sorted(cs)}")
    coords = [c.lift(0, m) for c in h.coords] + [_var(n, r + j) for j in range(1, m + 1)]
    result = compose(form, coords)
    report = classify(result)
    fdual = None
    if mode == "i" and all(c.is_bent for c in classes.values()):
        sf = wht(form).coeffs
        table = np.empty((1 << r, 1 << m), dtype=np.uint8)
        duals = {d: bent_dual(comps[d]).table for d in deltas}
        for theta, d in theta_map.items():
            sign = int(sf[(d << m) | theta] < 0)
            table[:, theta] = duals[d] ^ sign
        fdual = BooleanFunction(n, table.reshape(-1))
    if check:
        if mode == "i" and not report.is_bent:
            raise InvariantBreach(f"mode i result is {report}, expected Bent")
        if mode == "ii" and report.tag is not Tag.PLATEAUED:
            raise InvariantBreach(f"mode ii result is {report}, expected plateaued")
    return P1Result(result, fdual, report)


def theorem_p2_construct(d: BooleanFunction, a: BooleanFunction, h: VectorialFunction | None,
                         verify: bool | None = None) -> BooleanFunction:
    """a(x) + d(h_1(x), ..., h_t(x), y) with d bent on k = t + m variables."""
    t = 0 if h is None else h.k
    r = a.n
    if h is not None and h.n != r:
        raise DimensionMismatch("a and h must share their variables")
    k = d.n
    m = k - t
    if m < 0:
        raise ArityMismatch(f"d has {k} inputs but h gives {t} coordinates")
    n = r + m
    if _verify_on(verify, n):
        p2_precondition(d, a, h)
    coords = ([] if h is None else [c.lift(0, m) for c in h.coords])
    coords += [_var(n, r + j) for j in range(1, m + 1)]
    return a.lift(0, m) ^ compose(d, coords)


def p2_precondition(d: BooleanFunction, a: BooleanFunction, h: VectorialFunction | None) -> None:
    """Raise PreconditionFailed unless the bent-distance hypothesis holds.

    The witness is ``delta`` for a non-bent member of a + <h>, or the first
    ``(v, u)`` (v outer, u inner, increasing) breaking the distance condition.
    """
    if not is_bent(d):
        raise PreconditionFailed("d is not bent", witness="d")
    t = 0 if h is None else h.k
    m = d.n - t
    dstar = bent_dual(d).table.reshape(1 << t, 1 << m).astype(np.int64)
    gstar = np.empty((1 << t, 1 << a.n), dtype=np.int64)
    for delta in range(1 << t):
        g = a if h is None else a ^ h.component(delta)
        if not is_bent(g):
            raise PreconditionFailed(f"a + delta.h is not bent for delta={bitstring(delta, t)}", witness=delta)
        gstar[delta] = bent_dual(g).table
    corr = (1 - 2 * dstar).T @ (1 - 2 * gstar)
    bad = np.argwhere(np.abs(corr) != 1 << (t // 2)) if t % 2 == 0 else np.argwhere(corr == corr)
    if bad.size:
        v, u = (int(z) for z in bad[0])
        raise PreconditionFailed(
            f"d*(., v) and (a + .h)*(u) are not at bent distance for v={bitstring(v, m)}, u={u}",
            witness=(v, u),
        )


def bent_concatenation(f1, f2, f3, verify: bool | None = None, via_form: bool = False) -> BooleanFunction:
    """f1 + y1(f1+f3) + y2(f1+f2); its four restrictions are f1, f2, f3, f1+f2+f3."""
    r = _same_n(f1, f2, f3)
    n = r + 2
    f4 = f1 ^ f2 ^ f3
    if _verify_on(verify, n):
        _require_bent({"f1": f1, "f2": f2, "f3": f3, "f4": f4})
        s = bent_dual(f1) ^ bent_dual(f2) ^ bent_dual(f3) ^ bent_dual(f4)
        if s.weight != s.size:
            bad = int(np.flatnonzero(s.table == 0)[0])
            raise PreconditionFailed("f1* + f2* + f3* + f4* is not the constant 1", witness=bad)
    if via_form:
        h = VectorialFunction([f1 ^ f3, f1 ^ f2])
        return theorem_p2_construct(_anf("x1*x3 + x2*x4", 4), f1, h, verify=False)
    F1, F2, F3 = _extend((f1, f2, f3), 2)
    y1, y2 = _var(n, r + 1), _var(n, r + 2)
    return F1 ^ (y1 & (F1 ^ F3)) ^ (y2 & (F1 ^ F2))


# --------------------------------------------------------------------------
# Indirect sums


def _indirect_sum_formula(f1, f2, g1, g2) -> BooleanFunction:
    r, m = f1.n, g1.n
    F1, F2 = f1.lift(0, m), f2.lift(0, m)
    G1, G2 = g1.lift(r, 0), g2.lift(r, 0)
    return F1 ^ G1 ^ ((F1 ^ F2) & (G1 ^ G2))


def _duals_if_bent(fs) -> list[BooleanFunction] | None:
    if all(is_bent(f) for f in fs):
        return [bent_dual(f) for f in fs]
    return None


def indirect_sum(f1, f2, g1, g2, verify: bool | None = None,
                 via_form: bool = False) -> tuple[BooleanFunction, BooleanFunction | None]:
    """f1(x) + g1(y) + (f1+f2)(x)(g1+g2)(y) and its dual by the same formula."""
    _same_n(f1, f2)
    _same_n(g1, g2)
    n = f1.n + g1.n
    if _verify_on(verify, n):
        _require_bent({"f1": f1, "f2": f2, "g1": g1, "g2": g2})
    if via_form:
        result = DisjointBundle([(f1, f2), (g1, g2)]).compose(indirect_sum_form())
    else:
        result = _indirect_sum_formula(f1, f2, g1, g2)
    duals = _duals_if_bent((f1, f2, g1, g2))
    return result, (None if duals is None else _indirect_sum_formula(*duals))


@dataclass(frozen=True)
class DisjointBundle:
    """Tuples of functions, tuple i living on its own block of r_i variables."""

    blocks: tuple[tuple[BooleanFunction, ...], ...]

    def __init__(self, blocks):
        blocks = tuple(tuple(b) for b in blocks)
        if not blocks:
            raise ValueError("empty bundle")
        for b in blocks:
            if not b:
                raise ValueError("empty block")
            _same_n(*b)
        object.__setattr__(self, "blocks", blocks)

    @property
    def sizes(self) -> list[int]:
        return [b[0].n for b in self.blocks]

    @property
    def n(self) -> int:
        return sum(self.sizes)

    def placed(self) -> list[BooleanFunction]:
        """All functions lifted to the full variable space, block by block."""
        out = []
        before = 0
        total = self.n
        for b in self.blocks:
            r = b[0].n
            out.extend(f.lift(before, total - before - r) for f in b)
            before += r
        return out

    def starred(self) -> "DisjointBundle":
        return DisjointBundle([[bent_dual(f) for f in b] for b in self.blocks])

    def all_functions(self) -> list[BooleanFunction]:
        return [f for b in self.blocks for f in b]

    def compose(self, form: BooleanFunction, fresh: int = 0) -> BooleanFunction:
        """form(h_1, ..., h_k, z_1, ..., z_fresh) with fresh variables last."""
        coords = [f.lift(0, fresh) for f in self.placed()]
        n = self.n + fresh
        coords += [_var(n, self.n + j) for j in range(1, fresh + 1)]
        return compose(form, coords)


def _gis_a_formula(fs: Sequence[BooleanFunction]) -> BooleanFunction:
    f1, f2, g1, g2, l1, l2, d1, d2 = fs
    return f2 ^ g2 ^ l2 ^ d2 ^ ((g1 ^ g2) & (f1 ^ f2 ^ d1 ^ d2)) ^ ((l1 ^ l2) & (f1 ^ f2))


def _pair_bundle(bundle, count: int | None = None) -> DisjointBundle:
    if not isinstance(bundle, DisjointBundle):
        bundle = DisjointBundle(bundle)
    for b in bundle.blocks:
        if len(b) != 2:
            raise ArityMismatch("every block must hold a pair of functions")
    if count is not None and len(bundle.blocks) != count:
        raise ArityMismatch(f"expected {count} blocks, got {len(bundle.blocks)}")
    return bundle


def gen_indirect_sum_a(bundle, verify: bool | None = None,
                       via_form: bool = False) -> tuple[BooleanFunction, BooleanFunction | None]:
    """Four pairs (f, g, l, d) on disjoint blocks; dual by the same formula on the duals."""
    bundle = _pair_bundle(bundle, 4)
    if _verify_on(verify, bundle.n):
        _require_bent({f"h{i + 1}": f for i, f in enumerate(bundle.all_functions())})
    if via_form:
        result = bundle.compose(gis_a_form())
    else:
        result = _gis_a_formula(bundle.placed())
    duals = _duals_if_bent(bundle.all_functions())
    fdual = None if duals is None else _gis_a_formula(bundle.starred().placed())
    return result, fdual


def default_ells(k: int) -> tuple[list[BooleanFunction], BooleanFunction]:
    """Column functions and bent dual used when none are supplied."""
    if k in (2, 3):
        x1, x2 = _vars(2)
        ells = [x1, x2, ~x1][:k]
        return ells, _anf("x1*x2", 2)
    if k == 4:
        return list(_vars(4)), _anf("x1*x3 + x2*x4 + x3*x4", 4)
    raise ValueError(f"no default column functions for k={k}; pass ells and xi_dual")


def gen_indirect_sum_k(bundle, ells: Sequence[BooleanFunction] | None = None,
                       xi_dual: BooleanFunction | None = None, verify: bool | None = None
                       ) -> tuple[BooleanFunction, BooleanFunction | None]:
    """xi(H_1(x^(1)), ..., H_k(x^(k))), xi synthesized on M_1 | ... | M_k with a bent dual.

    The columns T_l_1 | ... | T_l_k must form an affine subspace of dimension t.
    """
    bundle = _pair_bundle(bundle)
    k = len(bundle.blocks)
    if ells is None:
        ells, default_dual = default_ells(k)
        xi_dual = xi_dual if xi_dual is not None else default_dual
    if xi_dual is None:
        raise ValueError("xi_dual is required with custom column functions")
    if len(ells) != k:
        raise ArityMismatch(f"{len(ells)} column functions for {k} pairs")
    t = _same_n(*ells)
    cols = interleave(*[Rows.column(l) for l in ells])
    aff = is_affine_subspace(cols.values)
    if aff is None or len(aff[1]) != t or len(set(cols.values)) != len(cols.values):
        raise PreconditionFailed("the column functions do not form an affine subspace of full dimension")
    if _verify_on(verify, bundle.n):
        _require_bent({f"h{i + 1}": f for i, f in enumerate(bundle.all_functions())})
    xi = pair_form(ells, xi_dual)
    result = bundle.compose(xi)
    fdual = None
    if _duals_if_bent(bundle.all_functions()) is not None:
        fdual = bundle.starred().compose(xi)
    return result, fdual


def gen_indirect_sum_b(f1, f2, g1, g2, verify: bool | None = None, via_form: bool = False) -> BooleanFunction:
    """f2 + g2 + (g1+g2+z2)(f1+f2+z1) on r+m+2 variables."""
    _same_n(f1, f2)
    _same_n(g1, g2)
    r, m = f1.n, g1.n
    n = r + m + 2
    if _verify_on(verify, n):
        _require_bent({"f1": f1, "f2": f2, "g1": g1, "g2": g2})
    bundle = DisjointBundle([(f1, f2), (g1, g2)])
    if via_form:
        return bundle.compose(gis_b_form(), fresh=2)
    F1, F2, G1, G2 = (f.lift(0, 2) for f in bundle.placed())
    z1, z2 = _var(n, r + m + 1), _var(n, r + m + 2)
    return F2 ^ G2 ^ ((G1 ^ G2 ^ z2) & (F1 ^ F2 ^ z1))


def gen_indirect_sum_c(f1, f2, g1, g2, verify: bool | None = None, via_form: bool = False) -> BooleanFunction:
    """f2 + g2 + z1(g1+g2+z2)(f1+f2) + z1z4(g1+g2) + z2z4 + z1z3 on r+m+4 variables."""
    _same_n(f1, f2)
    _same_n(g1, g2)
    r, m = f1.n, g1.n
    n = r + m + 4
    if _verify_on(verify, n):
        _require_bent({"f1": f1, "f2": f2, "g1": g1, "g2": g2})
    bundle = DisjointBundle([(f1, f2), (g1, g2)])
    if via_form:
        return bundle.compose(gis_c_form(), fresh=4)
    F1, F2, G1, G2 = (f.lift(0, 4) for f in bundle.placed())
    z1, z2, z3, z4 = (_var(n, r + m + i) for i in range(1, 5))
    return (F2 ^ G2 ^ (z1 & (G1 ^ G2 ^ z2) & (F1 ^ F2)) ^ (z1 & z4 & (G1 ^ G2))
            ^ (z2 & z4) ^ (z1 & z3))


# --------------------------------------------------------------------------
# Indicator-set forms


@dataclass(frozen=True)
class IndicatorSpec:
    """F = a + phi_U(h_1, ..., h_k) with U = span(basis) inside F_2^k."""

    a: BooleanFunction
    coords: VectorialFunction
    basis: tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.coords, VectorialFunction):
            object.__setattr__(self, "coords", VectorialFunction(self.coords))
        basis = tuple(int(b) for b in self.basis)
        object.__setattr__(self, "basis", basis)
        if self.a.n != self.coords.n:
            raise DimensionMismatch("a and h must share their variables")
        k = self.coords.k
        if any(b <= 0 or b >> k for b in basis):
            raise ValueError(f"basis vectors must be nonzero points of F_2^{k}")
        if gf2.rank(basis) != len(basis):
            raise ValueError("basis vectors are linearly dependent")

    @property
    def k(self) -> int:
        return self.coords.k

    @property
    def tau(self) -> int:
        return len(self.basis)

    def perp(self) -> list[int]:
        """All points of U^perp, in increasing order."""
        return sorted(gf2.span(gf2.orthogonal_complement(self.basis, self.k)))


def indicator_form(spec: IndicatorSpec) -> BooleanFunction:
    """phi_U on F_2^k as the product of (lambda_i . x + 1) over a basis of U^perp."""
    k = spec.k
    out = BooleanFunction.constant(k, 1)
    for lam in gf2.orthogonal_complement(spec.basis, k):
        out = out & ~BooleanFunction.linear(k, lam)
    return out


def indicator_construct(spec: IndicatorSpec) -> BooleanFunction:
    return spec.a ^ compose(indicator_form(spec), spec.coords)


def indicator_wht_identity_check(spec: IndicatorSpec) -> bool:
    """2^k W_F = 2^k W_a - 2 #U sum_(w in U^perp) W_(a + w.h), pointwise and exactly."""
    k = spec.k
    lhs = wht(indicator_construct(spec)).coeffs << k
    wa = wht(spec.a).coeffs
    total = np.zeros_like(wa)
    for w in spec.perp():
        total += wht(spec.a ^ spec.coords.component(w)).coeffs
    rhs = (wa << k) - 2 * (1 << spec.tau) * total
    return bool(np.array_equal(lhs, rhs))


def indicator_divisibility_witness(spec: IndicatorSpec) -> int | None:
    """First v where 2^(k - tau) fails to divide sum_(w in U^perp) (-1)^((a + w.h)*(v))."""
    total = np.zeros(1 << spec.a.n, dtype=np.int64)
    for w in spec.perp():
        g = spec.a ^ spec.coords.component(w)
        if not is_bent(g):
            raise PreconditionFailed(f"a + w.h is not bent for w={bitstring(w, spec.k)}", witness=w)
        total += bent_dual(g).sequence
    bad = np.flatnonzero(total % (1 << (spec.k - spec.tau)))
    return int(bad[0]) if bad.size else None


def indicator_divisibility_check(spec: IndicatorSpec) -> bool:
    """2^(k - tau) divides sum_(w in U^perp) (-1)^((a + w.h)*(v)) for every v."""
    return indicator_divisibility_witness(spec) is None


def _dual_sum(fs) -> BooleanFunction:
    out = bent_dual(fs[0])
    for f in fs[1:]:
        out = out ^ bent_dual(f)
    return out


def generic_method_a(f1, f2, f3, m: int = 0, verify: bool | None = None,
                     via_form: bool = False) -> BooleanFunction:
    """f1 + (m.x + 1)(f1+f2+1)(f1+f3+1) for bent f1..f4 with dual sum 0.

    The dual-sum hypothesis alone does not make the result bent once m != 0,
    so verification also runs the divisibility test on
    a = f1, h = (m.x, f1+f2, f1+f3), U = {0} and reports the first bad v.
    """
    n = _same_n(f1, f2, f3)
    if not 0 <= int(m) < 1 << n:
        raise DimensionMismatch(f"m={m} is not a point of F_2^{n}")
    ell = BooleanFunction.linear(n, int(m))
    spec = IndicatorSpec(f1, VectorialFunction([ell, f1 ^ f2, f1 ^ f3]))
    if _verify_on(verify, n):
        f4 = f1 ^ f2 ^ f3
        _require_bent({"f1": f1, "f2": f2, "f3": f3, "f4": f4})
        s = _dual_sum((f1, f2, f3, f4))
        if s.weight:
            raise PreconditionFailed("f1* + f2* + f3* + f4* is not the constant 0",
                                     witness=int(np.flatnonzero(s.table)[0]))
        v = indicator_divisibility_witness(spec)
        if v is not None:
            raise PreconditionFailed(f"8 does not divide the dual sum over U^perp at v={bitstring(v, n)}",
                                     witness=v)
    if via_form:
        return indicator_construct(spec)
    return f1 ^ (~ell & (f1 ^ f2 ^ 1) & (f1 ^ f3 ^ 1))


def mesnager_g(f1, f2, f3, verify: bool | None = None,
               via_form: bool = False) -> tuple[BooleanFunction, BooleanFunction | None]:
    """g = f1f2 + f1f3 + f2f3 and g* = f1*f2* + f1*f3* + f2*f3*."""
    n = _same_n(f1, f2, f3)
    psi = f1 ^ f2 ^ f3
    if _verify_on(verify, n):
        _require_bent({"f1": f1, "f2": f2, "f3": f3, "f1+f2+f3": psi})
        s = _dual_sum((f1, f2, f3, psi))
        if s.weight:
            raise PreconditionFailed("f1* + f2* + f3* + psi* is not 0",
                                     witness=int(np.flatnonzero(s.table)[0]))
    if via_form:
        g = compose(majority_form(), (f1, f2, f3))
    else:
        g = (f1 & f2) ^ (f1 & f3) ^ (f2 & f3)
    duals = _duals_if_bent((f1, f2, f3))
    gdual = None
    if duals is not None:
        a, b, c = duals
        gdual = (a & b) ^ (a & c) ^ (b & c)
    return g, gdual


def _check_permutation(p, h: int, name: str) -> np.ndarray:
    p = np.asarray(p, dtype=np.int64).reshape(-1)
    if p.size != 1 << h or sorted(p.tolist()) != list(range(1 << h)):
        raise ValueError(f"{name} is not a permutation of F_2^{h}")
    return p


def mm_function(pi, g: BooleanFunction | None = None) -> BooleanFunction:
    """x.pi(y) + g(y) on F_2^h x F_2^h (x first)."""
    pi = np.asarray(pi, dtype=np.int64)
    h = int(pi.size).bit_length() - 1
    x = np.arange(1 << h, dtype=np.int64)[:, None]
    t = (np.bitwise_count(x & pi[None, :]) & 1).astype(np.uint8)
    if g is not None:
        t ^= g.table[None, :]
    return BooleanFunction(2 * h, t.reshape(-1))


def dualcor_coords(pi, phi, g1: BooleanFunction, g2: BooleanFunction) -> VectorialFunction:
    """(x.pi(y) + g1(y), x.pi(y), x.phi(y), g2(y))."""
    h = g1.n
    return VectorialFunction([mm_function(pi, g1), mm_function(pi), mm_function(phi), g2.lift(h, 0)])


def dualcor_dual_coords(pi, phi, g1: BooleanFunction, g2: BooleanFunction) -> VectorialFunction:
    """(h_1*, h_2*, h_3*, g2(pi^-1(x))) for the coordinates above."""
    h = g1.n
    c = dualcor_coords(pi, phi, g1, g2)
    inv = np.argsort(np.asarray(pi))
    last = BooleanFunction(h, g2.table[inv]).lift(0, h)
    return VectorialFunction([bent_dual(c[0]), bent_dual(c[1]), bent_dual(c[2]), last])


def dualcor_family(pi, phi, g1: BooleanFunction, g2: BooleanFunction, verify: bool | None = None,
                   via_form: bool = False) -> BooleanFunction:
    """x.pi(y) + [x.(pi+phi)(y)] lambda(y) + eta(y), lambda = g1+g2, eta = g1g2."""
    h = _same_n(g1, g2)
    pi = _check_permutation(pi, h, "pi")
    phi = _check_permutation(phi, h, "phi")
    n = 2 * h
    lam = (g1 ^ g2).table
    if _verify_on(verify, n):
        bad = np.flatnonzero(lam[np.argsort(pi)] != lam[np.argsort(phi)])
        if bad.size:
            raise PreconditionFailed("lambda(pi^-1(y)) != lambda(phi^-1(y))", witness=int(bad[0]))
    if via_form:
        return compose(dualcor_form(), dualcor_coords(pi, phi, g1, g2))
    P, Q = mm_function(pi), mm_function(phi)
    L = (g1 ^ g2).lift(h, 0)
    eta = (g1 & g2).lift(h, 0)
    return P ^ ((P ^ Q) & L) ^ eta


def disjoint_spectra_construct(a: BooleanFunction, h: VectorialFunction, basis: Sequence[int] = (),
                               z: int | None = None, verify: bool | None = None) -> BooleanFunction:
    """a + phi_U(h) where the four a + w.h (w in U^perp, dim U = k - 2) are
    z-plateaued with pairwise disjoint supports.  Gives Plateaued{z-2}, or bent for z = 2."""
    spec = IndicatorSpec(a, h, tuple(basis))
    if spec.tau != spec.k - 2:
        raise ValueError(f"dim U must be k - 2 = {spec.k - 2}, got {spec.tau}")
    n = a.n
    check = _verify_on(verify, n)
    if check:
        supports = []
        for w in spec.perp():
            g = a ^ h.component(w)
            spec_g = wht(g)
            amp = np.abs(spec_g.coeffs).max()
            zg = 2 * (int(amp).bit_length() - 1) - n
            if z is None:
                z = zg
            nonzero = np.abs(spec_g.coeffs[spec_g.coeffs != 0])
            if zg != z or np.any(nonzero != amp):
                raise PreconditionFailed(f"a + w.h is not {z}-plateaued for w={bitstring(w, spec.k)}", witness=w)
            supports.append((w, set(spec_g.support())))
        for i in range(len(supports)):
            for j in range(i + 1, len(supports)):
                if supports[i][1] & supports[j][1]:
                    raise PreconditionFailed("supports overlap",
                                             witness=(supports[i][0], supports[j][0]))
    result = indicator_construct(spec)
    if check:
        cls = classify(result)
        want_bent = z == 2
        if (want_bent and not cls.is_bent) or (not want_bent and not cls.is_plateaued(z - 2)):
            raise InvariantBreach(f"result is {cls}, expected {'Bent' if want_bent else f'Plateaued{{{z - 2}}}'}")
    return result


def direct_sum_parameter(ds: Sequence[BooleanFunction]) -> int:
    """t with nr - sum(s_i) + t = n, after checking linear supports in direct sum."""
    n = _same_n(*ds)
    dims = []
    bases = []
    for i, d in enumerate(ds):
        cls = classify(d)
        if cls.tag is Tag.BENT:
            s = 0
        elif cls.tag is Tag.PLATEAUED:
            s = cls.s
        else:
            raise NotPlateauedOrBent(f"d{i + 1} is {cls}, not plateaued")
        pts = wht(d).support()
        aff = is_affine_subspace(pts)
        if aff is None or aff[0] != 0:
            raise SupportsNotLinear(f"the support of d{i + 1} is not a linear subspace", witness=i)
        dims.append(n - s)
        bases.extend(aff[1])
    t = n - sum(dims)
    if t < 0:
        raise NegativeT(f"n r - sum(s_i) exceeds n by {-t}", witness=t)
    if gf2.rank(bases) != sum(dims):
        raise NotDirectSum("the supports intersect nontrivially")
    return t


def direct_sum_supports(ds: Sequence[BooleanFunction], verify: bool | None = None) -> BooleanFunction:
    """d_1 + ... + d_r, t-plateaued (bent for t = 0) when the supports form a direct sum."""
    t = direct_sum_parameter(ds)
    out = ds[0]
    for d in ds[1:]:
        out = out ^ d
    if _verify_on(verify, out.n):
        cls = classify(out)
        ok = cls.is_bent if t == 0 else cls.is_plateaued(t)
        if not ok:
            raise InvariantBreach(f"sum is {cls}, expected t={t}")
    return out
