"""Reference regressions: published worked examples, rebuilt and compared.

Expected values are written in their displayed (factored) shape and
tabulated pointwise, so a match is a bit-exact comparison of truth tables.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import constructions as cx
from .analysis import outside_mm_certificate, verify_bent
from .core import (
    BooleanFunction,
    VectorialFunction,
    algebraic_degree,
    bent_dual,
    bitstring,
    classify,
    wht,
)
from .synth import (
    Rows,
    SynthesisSpec,
    build_delta_multiset,
    interleave,
    is_affine_subspace,
    order_support,
    synthesize,
    synthesize_plateaued,
)


def tab(n: int, fn: Callable[..., int]) -> BooleanFunction:
    return BooleanFunction.from_callable(n, fn)


def anf(text: str, n: int) -> BooleanFunction:
    return BooleanFunction.from_anf(text, n)


@dataclass(frozen=True)
class Regression:
    id: str
    title: str
    expected: str
    compute: Callable[[], str]


@dataclass(frozen=True)
class RegressionResult:
    id: str
    title: str
    expected: str
    got: str

    @property
    def passed(self) -> bool:
        return self.expected == self.got


def _describe(f: BooleanFunction) -> str:
    return f"{f} | {classify(f)}"


# expected shapes ---------------------------------------------------------

AFFINE_SUPPORT_FORM = tab(5, lambda x1, x2, x3, x4, x5:
                          x4 & (x2 ^ x5) ^ x1 & (x2 ^ x4 ^ x5) ^ x3 & (1 ^ x2 ^ x4 ^ x5))
NONAFFINE_SUPPORT_FORM = tab(5, lambda x1, x2, x3, x4, x5: x1 & x2 & x5 ^ x1 & x3 ^ x2 & x4 ^ x5)
ROTHAUS_FORM = tab(5, lambda x1, x2, x3, x4, x5:
                   x1 & x2 ^ x1 & x3 ^ x2 & x3 ^ (x1 ^ x2) & x5 ^ (x1 ^ x3) & x4 ^ x4 & x5)
GEN_ROTHAUS_A_FORM = tab(7, lambda x1, x2, x3, x4, x5, x6, x7:
                         x2 & (x4 ^ x5) ^ x1 & (1 ^ x4 ^ x6) ^ (x3 ^ x4) & (x5 ^ x6) ^ (x4 ^ x5) & x7)
GEN_ROTHAUS_B_FORM = tab(6, lambda x1, x2, x3, x4, x5, x6:
                         x2 ^ (x1 ^ x2) & x3 & x4 ^ x3 & x5 ^ x4 & x6)
GIS_A_FORM = tab(8, lambda x1, x2, x3, x4, x5, x6, x7, x8:
                 x2 ^ x4 ^ x6 ^ x8 ^ (x3 ^ x4) & (x1 ^ x2 ^ x7 ^ x8) ^ (x5 ^ x6) & (x1 ^ x2))
GIS_B_FORM = tab(6, lambda x1, x2, x3, x4, x5, x6: x2 ^ x4 ^ (x3 ^ x4 ^ x6) & (x1 ^ x2 ^ x5))
GIS_C_FORM = tab(8, lambda x1, x2, x3, x4, x5, x6, x7, x8:
                 x2 ^ x4 ^ x5 & (x3 ^ x4 ^ x6) & (x1 ^ x2) ^ x5 & x8 & (x3 ^ x4) ^ x6 & x8 ^ x5 & x7)
DUALCOR_FORM = tab(4, lambda x1, x2, x3, x4: x3 & (x2 ^ x4) ^ x1 & (x2 ^ x3 ^ x4))
MAJORITY_FORM = tab(3, lambda x1, x2, x3: x1 & x2 ^ x1 & x3 ^ x2 & x3)


# computations ------------------------------------------------------------


def _affine_support() -> str:
    spec = SynthesisSpec(order_support([6, 13, 16, 27], 5), BooleanFunction.from_table([0, 0, 0, 1]))
    return _describe(synthesize_plateaued(spec))


def _nonaffine_support() -> str:
    rows = interleave(Rows.space(4), Rows.column(anf("x3*x4 + 1", 4)))
    f = synthesize_plateaued(SynthesisSpec(order_support(rows.values, 5), anf("x1*x3 + x2*x4", 4)))
    affine = "affine" if is_affine_subspace(rows.values) else "not affine"
    return f"{_describe(f)} | support {affine}"


def _support_ordering() -> str:
    sup = order_support([0b011, 0b010, 0b101, 0b100], 3, v=0b011)
    om = " ".join(bitstring(w, 3) for w in sup.omega_list)
    e = " ".join(bitstring(w, 3) for w in sup.e_list)
    return f"omega: {om} | E: {e}"


def _rothaus_form() -> str:
    f = cx.rothaus_form()
    rows = " ".join(bitstring(w, 5) for w in sorted(wht(f).support()))
    return f"{_describe(f)} | support {rows}"


def _rothaus_partition() -> str:
    """W_F(u, v) = +-2 W_g(u) with g = a, b, c, a+b+c for v = 00, 10, 01, 11."""
    a, b, c = anf("x1*x2", 2), anf("x1*x2 + x1", 2), anf("x1*x2 + x2", 2)
    F = cx.rothaus(a, b, c)
    w = wht(F).coeffs.reshape(4, 4)
    parts = [(0b00, a, 1), (0b10, b, 1), (0b01, c, 1), (0b11, a ^ b ^ c, -1)]
    ok = all(np.array_equal(w[:, v], sign * 2 * wht(g).coeffs) for v, g, sign in parts)
    return "partition holds" if ok else "partition broken"


def _gen_rothaus_a_form() -> str:
    return _describe(cx.gen_rothaus_a_form())


def _gen_rothaus_b_form() -> str:
    return _describe(cx.gen_rothaus_b_form())


def _gen_rothaus_b_restriction() -> str:
    F = cx.generalized_rothaus_b(anf("x1*x2 + x1", 2), anf("x1*x2", 2))
    r = F.restrict({5: 0, 6: 0})
    return f"{r} | bent: {verify_bent(r)}"


def _gis_a_form() -> str:
    return _describe(cx.gis_a_form())


def _gis_b_form() -> str:
    return _describe(cx.gis_b_form())


def _gis_c_form() -> str:
    return _describe(cx.gis_c_form())


def _minimal_bents():
    return anf("x1*x2", 2), anf("x1*x2 + x1", 2), anf("x1*x2", 2), anf("x1*x2 + x2", 2)


def _gis_b_restrictions() -> str:
    f1, f2, g1, g2 = _minimal_bents()
    F = cx.gen_indirect_sum_b(f1, f2, g1, g2)
    ind = cx._indirect_sum_formula(f2, f1, g2, g1)
    z00 = F.restrict({5: 0, 6: 0}) == ind
    z10 = F.restrict({5: 1, 6: 0}) == ind ^ (g1 ^ g2).lift(2, 0)
    return f"z=00 indirect sum: {z00} | z=10 plus g1+g2: {z10}"


def _gis_c_restrictions() -> str:
    f1, f2, g1, g2 = _minimal_bents()
    F = cx.gen_indirect_sum_c(f1, f2, g1, g2)
    ind = cx._indirect_sum_formula(f2, f1, g2, g1)
    r1 = F.restrict({5: 1, 6: 0, 7: 0, 8: 0}) == ind
    direct = (f2.lift(0, 2) ^ g2.lift(2, 0)).lift(0, 3) ^ (
        BooleanFunction.variable(7, 5) & BooleanFunction.variable(7, 7))
    r0 = F.restrict({5: 0}) == direct
    return f"z=1000 indirect sum: {r1} | z1=0 direct sum: {r0}"


def _outside_mm() -> str:
    # pi_i(y) = y + q_i with q = (00, 01, 10); g_1 = y_1 y_2, g_2 = g_3 = 0
    a = anf("x1*x3 + x2*x4 + x3*x4", 4)
    b = anf("x1*x3 + x2*x4 + x2", 4)
    c = anf("x1*x3 + x2*x4 + x1", 4)
    F = cx.generalized_rothaus_a(a, b, c)
    cert = outside_mm_certificate(F)
    witness = cert.witness is not None and 0 not in cert.witness
    return f"bent: {verify_bent(F)} | degree {algebraic_degree(F)} | {cert.verdict.value} | nonzero witness: {witness}"


def _mesnager() -> str:
    f = cx.majority_form()
    rows = " ".join(bitstring(w, 3) for w in wht(f).support())
    return f"{_describe(f)} | support {rows}"


def dualcor_instance():
    """n = 4: pi = id, phi(y) = (y_1, y_1 + y_2), g_1 = y_1, g_2 = 0."""
    pi = [0, 1, 2, 3]
    phi = [0, 1, 3, 2]
    g1, g2 = anf("x1", 2), BooleanFunction.constant(2, 0)
    return pi, phi, g1, g2


def _dualcor() -> str:
    pi, phi, g1, g2 = dualcor_instance()
    F = cx.dualcor_family(pi, phi, g1, g2)
    form_ok = cx.dualcor_form() == DUALCOR_FORM
    via = cx.compose(cx.dualcor_form(), cx.dualcor_coords(pi, phi, g1, g2)) == F
    fdual = cx.compose(cx.dualcor_form(), cx.dualcor_dual_coords(pi, phi, g1, g2))
    h = cx.dualcor_coords(pi, phi, g1, g2)
    maj = cx.compose(MAJORITY_FORM, (h[0], h[1] ^ h[3], h[2])) == F
    return (f"form: {form_ok} | composite: {via} | bent: {verify_bent(F)} | "
            f"dual via h': {bent_dual(F) == fdual} | majority of (h1, h2+h4, h3): {maj}")


def disjoint_spectra_instance():
    """Two 4-plateaued functions on F_2^6 with supports {0..3} and {4..7}; m = 001000."""
    d = anf("x1*x2", 2)
    f1 = synthesize(Rows(6, (0, 1, 2, 3)), d)
    f2 = synthesize(Rows(6, (4, 5, 6, 7)), d)
    return f1, f2, 0b001000


def _disjoint_spectra() -> str:
    f1, f2, m = disjoint_spectra_instance()
    h = VectorialFunction([f1 ^ f2, BooleanFunction.linear(6, m)])
    F = cx.disjoint_spectra_construct(f1, h, (), z=4)
    # the displayed shape drops the +1 of (h_1 + 1); the two differ by m.x + 1
    ell = BooleanFunction.linear(6, m)
    shape = f1 ^ ((f1 ^ f2) & ~ell)
    return (f"{classify(f1)}, {classify(f2)} -> {classify(F)} | displayed shape {classify(shape)}"
            f" | differs by m.x + 1: {F ^ shape == ~ell}")


def direct_sum_instance():
    d = anf("x1*x2", 2)
    return synthesize(Rows(4, (0, 1, 2, 3)), d), synthesize(Rows(4, (0, 4, 8, 12)), d)


def _direct_sum() -> str:
    d1, d2 = direct_sum_instance()
    t = cx.direct_sum_parameter([d1, d2])
    return f"{classify(d1)} + {classify(d2)} -> t={t}, {classify(cx.direct_sum_supports([d1, d2]))}"


def _delta_multiset() -> str:
    rows = build_delta_multiset([0, 0b110, 0b101, 0b011], [0, 0b101, 0b101, 0], 0b100)
    return " ".join(bitstring(w, 3) for w in rows)


REGRESSIONS: list[Regression] = [
    Regression("synth-affine-support", "plateaued form from a 2-dim affine support in F_2^5",
               f"{AFFINE_SUPPORT_FORM} | Plateaued{{3}}", _affine_support),
    Regression("synth-nonaffine-support", "plateaued form on F_2^4 | T_(x3x4+1)",
               f"{NONAFFINE_SUPPORT_FORM} | Plateaued{{1}} | support not affine", _nonaffine_support),
    Regression("support-ordering", "support v + E with E lexicographic, v = 011",
               "omega: 011 010 101 100 | E: 000 001 110 111", _support_ordering),
    Regression("rothaus-form", "Rothaus form and its Walsh support",
               f"{ROTHAUS_FORM} | Plateaued{{3}} | support 00101 01010 10000 11111", _rothaus_form),
    Regression("rothaus-spectrum-partition", "Rothaus spectrum splits into 2W_a, 2W_b, 2W_c, -2W_(a+b+c)",
               "partition holds", _rothaus_partition),
    Regression("delta-multiset", "v + (b_j + E) multiset for the generalized Rothaus A support",
               "100 010 001 111 001 111 100 010 001 111 100 010 100 010 001 111", _delta_multiset),
    Regression("gen-rothaus-a-form", "7-variable form of generalized Rothaus A",
               f"{GEN_ROTHAUS_A_FORM} | Plateaued{{3}}", _gen_rothaus_a_form),
    Regression("gen-rothaus-b-form", "6-variable form of generalized Rothaus B",
               f"{GEN_ROTHAUS_B_FORM} | Plateaued{{2}}", _gen_rothaus_b_form),
    Regression("gen-rothaus-b-restriction", "restriction y3 = y4 = 0 of generalized Rothaus B is not bent",
               "x1*x2 + x1*x3*x4 | bent: False", _gen_rothaus_b_restriction),
    Regression("gis-a-form", "8-variable form of generalized indirect sum A",
               f"{GIS_A_FORM} | Plateaued{{4}}", _gis_a_form),
    Regression("gis-b-form", "6-variable form of generalized indirect sum B",
               f"{GIS_B_FORM} | Plateaued{{4}}", _gis_b_form),
    Regression("gis-b-restrictions", "generalized indirect sum B restricted in z",
               "z=00 indirect sum: True | z=10 plus g1+g2: True", _gis_b_restrictions),
    Regression("gis-c-form", "8-variable form of generalized indirect sum C",
               f"{GIS_C_FORM} | Plateaued{{4}}", _gis_c_form),
    Regression("gis-c-restrictions", "generalized indirect sum C restricted in z",
               "z=1000 indirect sum: True | z1=0 direct sum: True", _gis_c_restrictions),
    Regression("outside-mm-certificate", "generalized Rothaus A on MM bents with pi_i(y) = y + q_i",
               "bent: True | degree 3 | OutsideForThisSplit | nonzero witness: True", _outside_mm),
    Regression("mesnager", "majority form, its support and dual",
               f"{MAJORITY_FORM} | Plateaued{{1}} | support 001 010 100 111", _mesnager),
    Regression("dualcor-family", "x.pi(y) + [x.(pi+phi)(y)] lambda(y) + eta(y) and its dual",
               "form: True | composite: True | bent: True | dual via h': True | majority of (h1, h2+h4, h3): True",
               _dualcor),
    Regression("disjoint-spectra", "indicator construction from disjoint-spectra 4-plateaued functions",
               "Plateaued{4}, Plateaued{4} -> Plateaued{2} | displayed shape Plateaued{2} | differs by m.x + 1: True", _disjoint_spectra),
    Regression("direct-sum-supports", "two 2-plateaued functions with complementary linear supports",
               "Plateaued{2} + Plateaued{2} -> t=0, Bent", _direct_sum),
]

BY_ID = {r.id: r for r in REGRESSIONS}


def run(only: list[str] | None = None) -> list[RegressionResult]:
    chosen = REGRESSIONS if not only else [BY_ID[i] for i in only]
    out = []
    for r in chosen:
        try:
            got = r.compute()
        except Exception as exc:  # failures are reported as data
            got = f"error: {type(exc).__name__}: {exc}"
        out.append(RegressionResult(r.id, r.title, r.expected, got))
    return out
