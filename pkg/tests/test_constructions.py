import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from bentkit import constructions as cx
from bentkit.analysis import verify_bent
from bentkit.core import BooleanFunction, VectorialFunction, bent_dual, classify, wht
from bentkit.errors import (
    ArityMismatch,
    InvariantBreach,
    ModeConditionFailed,
    NegativeT,
    NotDirectSum,
    NotPlateauedOrBent,
    PreconditionFailed,
    SupportNotSplittable,
    SupportsNotLinear,
)
from bentkit.regressions import direct_sum_instance, disjoint_spectra_instance, dualcor_instance
from bentkit.samples import random_mm_bent, random_triple, shifted_triple
from bentkit.synth import Rows, synthesize
from strategies import functions, rng_from, seeds

A = BooleanFunction.from_anf
sizes = st.sampled_from([2, 4])


def quad(n):
    return A(" + ".join(f"x{i}*x{i + n // 2}" for i in range(1, n // 2 + 1)), n)


# Rothaus family


@given(sizes, seeds())
def test_rothaus_family_bent_and_form_agrees(r, seed):
    rng = rng_from(seed)
    a, b, c = random_triple(r, rng)
    for fn in (cx.rothaus, cx.generalized_rothaus_a):
        F = fn(a, b, c)
        assert verify_bent(F)
        assert fn(a, b, c, via_form=True) == F
    F = cx.generalized_rothaus_b(a, b)
    assert verify_bent(F)
    assert cx.generalized_rothaus_b(a, b, via_form=True) == F


def test_rothaus_restrictions():
    a, b, c = A("x1*x2", 2), A("x1*x2 + x1", 2), A("x1*x2 + x2", 2)
    F = cx.rothaus(a, b, c)
    assert F.n == 4
    maj = (a & b) ^ (a & c) ^ (b & c)
    assert F.restrict({3: 0, 4: 0}) == maj
    assert F.restrict({3: 1, 4: 1}) == maj ^ b ^ c ^ A("1", 2)
    assert verify_bent(F)


def test_rothaus_rejects_non_bent_inputs():
    a = A("x1*x2", 2)
    with pytest.raises(PreconditionFailed):
        cx.rothaus(a, a, A("x1", 2))
    F = cx.rothaus(a, a, A("x1", 2), verify=False)
    assert not verify_bent(F)


# P1 and P2


def test_p1_mode_i_reproduces_rothaus():
    a, b, c = random_triple(2, np.random.default_rng(3))
    res = cx.theorem_p1_construct(cx.rothaus_form(), VectorialFunction([a, b, c]), "i")
    assert res.function == cx.rothaus(a, b, c)
    assert res.report.is_bent
    assert res.dual == bent_dual(res.function)


def test_p1_mode_ii_gives_plateaued():
    h = VectorialFunction([A("x1*x2", 3), A("x1*x3", 3), A("x2*x3", 3)])
    res = cx.theorem_p1_construct(cx.rothaus_form(), h, "ii")
    assert res.report.is_plateaued(1) and res.dual is None


def test_p1_mode_iii_reports_only():
    h = VectorialFunction([A("x1*x2", 2), A("x1", 2), A("x1*x2 + x2", 2)])
    res = cx.theorem_p1_construct(cx.rothaus_form(), h, "iii")
    assert res.report == classify(res.function)


def test_p1_errors():
    bad = VectorialFunction([A("x1*x2", 2), A("x1", 2), A("x1*x2 + x2", 2)])
    with pytest.raises(ModeConditionFailed) as exc:
        cx.theorem_p1_construct(cx.rothaus_form(), bad, "i")
    assert exc.value.witness == 0b010
    with pytest.raises(ModeConditionFailed):
        cx.theorem_p1_construct(cx.rothaus_form(), bad, "ii")
    with pytest.raises(ArityMismatch):
        cx.theorem_p1_construct(cx.rothaus_form(), VectorialFunction([A("x1*x2", 2)]))
    with pytest.raises(NotPlateauedOrBent):
        cx.theorem_p1_construct(A("x1 + x2", 2), VectorialFunction([A("x1*x2", 2)]))
    with pytest.raises(SupportNotSplittable):
        cx.theorem_p1_construct(cx.majority_form(), VectorialFunction([A("x1*x2", 2)]))
    with pytest.raises(ValueError):
        cx.theorem_p1_construct(cx.rothaus_form(), bad, "iv")


@given(sizes, seeds())
def test_p2_matches_bent_concatenation(r, seed):
    f1, f2, f3 = random_triple(r, rng_from(seed), dual_sum=1)
    F = cx.bent_concatenation(f1, f2, f3)
    assert verify_bent(F)
    assert cx.bent_concatenation(f1, f2, f3, via_form=True) == F
    assert [F.restrict({r + 1: i, r + 2: j}) for j in (0, 1) for i in (0, 1)] == [f1, f3, f2, f1 ^ f2 ^ f3]


def test_bent_concatenation_rejects_dual_sum_zero():
    f1, f2, f3 = shifted_triple(quad(2), 0b01, 0b10)
    with pytest.raises(PreconditionFailed) as exc:
        cx.bent_concatenation(f1, f2, f3)
    assert exc.value.witness == 0
    d = A("x1*x3 + x2*x4", 4)
    with pytest.raises(PreconditionFailed) as exc:
        cx.theorem_p2_construct(d, f1, VectorialFunction([f1 ^ f3, f1 ^ f2]))
    assert exc.value.witness == (0, 0)


def test_p2_without_h_is_direct_sum():
    a, d = quad(2), quad(4)
    F = cx.theorem_p2_construct(d, a, None)
    assert F == a.lift(0, 4) ^ d.lift(2, 0)
    assert verify_bent(F)
    with pytest.raises(PreconditionFailed):
        cx.theorem_p2_construct(d, A("x1", 2), None)


# Indirect sums


@given(sizes, sizes, seeds())
def test_indirect_sum(r, m, seed):
    rng = rng_from(seed)
    f1, f2, g1, g2 = (random_mm_bent(k, rng) for k in (r, r, m, m))
    F, Fd = cx.indirect_sum(f1, f2, g1, g2)
    assert verify_bent(F) and Fd == bent_dual(F)
    assert cx.indirect_sum(f1, f2, g1, g2, via_form=True)[0] == F
    # g1 = g2 collapses to the direct sum
    assert cx.indirect_sum(f1, f2, g1, g1)[0] == f1.lift(0, m) ^ g1.lift(r, 0)


@given(seeds())
def test_gen_indirect_sum_a_and_k(seed):
    rng = rng_from(seed)
    blocks = [(random_mm_bent(2, rng), random_mm_bent(2, rng)) for _ in range(4)]
    F, Fd = cx.gen_indirect_sum_a(blocks)
    assert verify_bent(F) and Fd == bent_dual(F)
    assert cx.gen_indirect_sum_a(blocks, via_form=True)[0] == F
    G, Gd = cx.gen_indirect_sum_k(blocks)
    assert G == F and Gd == Fd
    H, Hd = cx.gen_indirect_sum_k(blocks[:3])
    assert verify_bent(H) and Hd == bent_dual(H)


def test_gen_indirect_sum_k_errors():
    b = [(quad(2), quad(2))] * 3
    x1, x2 = A("x1", 2), A("x2", 2)
    with pytest.raises(PreconditionFailed):
        cx.gen_indirect_sum_k(b, [x1, x2, x1 & x2], A("x1*x2", 2))
    with pytest.raises(ArityMismatch):
        cx.gen_indirect_sum_k(b, [x1, x2], A("x1*x2", 2))
    with pytest.raises(ValueError):
        cx.gen_indirect_sum_k(b, [x1, x2, ~x1])
    with pytest.raises(ArityMismatch):
        cx.gen_indirect_sum_a(b)


@given(sizes, sizes, seeds())
def test_gen_indirect_sum_b_c(r, m, seed):
    rng = rng_from(seed)
    f1, f2, g1, g2 = (random_mm_bent(k, rng) for k in (r, r, m, m))
    for fn in (cx.gen_indirect_sum_b, cx.gen_indirect_sum_c):
        F = fn(f1, f2, g1, g2)
        assert verify_bent(F)
        assert fn(f1, f2, g1, g2, via_form=True) == F


# Indicator-set forms


@st.composite
def indicator_specs(draw):
    n = draw(st.integers(1, 4))
    k = draw(st.integers(1, 3))
    a = draw(functions(n=n))
    coords = [draw(functions(n=n)) for _ in range(k)]
    basis = []
    for _ in range(draw(st.integers(0, k))):
        v = draw(st.integers(1, (1 << k) - 1))
        from bentkit import gf2

        if not gf2.in_span(v, basis):
            basis.append(v)
    return cx.IndicatorSpec(a, VectorialFunction(coords), tuple(basis))


@given(indicator_specs())
def test_indicator_wht_identity(spec):
    assert cx.indicator_wht_identity_check(spec)
    phi = cx.indicator_form(spec)
    from bentkit import gf2

    assert sorted(phi.support()) == sorted(gf2.span(spec.basis))


@given(functions(1, 4), st.data())
def test_composite_identity(f, data):
    n = data.draw(st.integers(1, 4))
    coords = VectorialFunction([data.draw(functions(n=n)) for _ in range(f.n)])
    spec = cx.CompositeSpec(f, coords)
    assert cx.composite_wht_identity_check(spec)
    if classify(f).tag.name in ("BENT", "PLATEAUED"):
        assert cx.composite_wht_identity_check(spec, reduced=True)


def test_composite_arity():
    with pytest.raises(ArityMismatch):
        cx.CompositeSpec(quad(4), VectorialFunction([quad(2)]))


# Generic method A


COUNTER = (A("x1*x3 + x2*x4", 4), A("x1*x3 + x2*x4 + x2", 4), A("x1*x3 + x2*x4 + x3", 4), 0b1000)


def test_generic_method_a_counterexample_is_rejected():
    f1, f2, f3, m = COUNTER
    with pytest.raises(PreconditionFailed):
        cx.generic_method_a(f1, f2, f3, m)
    F = cx.generic_method_a(f1, f2, f3, m, verify=False)
    assert F == A("1 + x1 + x2 + x3 + x1*x2 + x2*x3 + x2*x4 + x1*x2*x3", 4)
    assert not verify_bent(F)


@given(sizes, seeds(), st.data())
def test_generic_method_a_gated(r, seed, data):
    f1, f2, f3 = random_triple(r, rng_from(seed), dual_sum=0)
    m = data.draw(st.sampled_from([0, data.draw(st.integers(0, (1 << r) - 1))]))
    assert cx.generic_method_a(f1, f2, f3, m, verify=False, via_form=True) == cx.generic_method_a(
        f1, f2, f3, m, verify=False)
    bent = verify_bent(cx.generic_method_a(f1, f2, f3, m, verify=False))
    try:
        cx.generic_method_a(f1, f2, f3, m)
    except PreconditionFailed:
        assert m != 0 and not bent
    else:
        assert bent


def test_generic_method_a_needs_dual_sum_zero():
    f1, f2, f3 = shifted_triple(quad(2), 0b01, 0b01)
    with pytest.raises(PreconditionFailed):
        cx.generic_method_a(f1, f2, f3, 0)


@given(sizes, seeds())
def test_mesnager_g(r, seed):
    f1, f2, f3 = random_triple(r, rng_from(seed), dual_sum=0)
    g, gd = cx.mesnager_g(f1, f2, f3)
    assert verify_bent(g) and gd == bent_dual(g)
    assert cx.mesnager_g(f1, f2, f3, via_form=True)[0] == g


# MM-based families


def test_mm_function_is_bent():
    rng = np.random.default_rng(0)
    for h in (1, 2, 3):
        assert verify_bent(cx.mm_function(rng.permutation(1 << h)))


def test_dualcor_family():
    pi, phi, g1, g2 = dualcor_instance()
    F = cx.dualcor_family(pi, phi, g1, g2)
    assert verify_bent(F)
    assert cx.dualcor_family(pi, phi, g1, g2, via_form=True) == F
    with pytest.raises(PreconditionFailed):
        cx.dualcor_family(pi, phi, A("x2", 2), g2)
    with pytest.raises(ValueError):
        cx.dualcor_family([0, 0, 1, 2], phi, g1, g2)


def test_disjoint_spectra():
    f1, f2, m = disjoint_spectra_instance()
    h = VectorialFunction([f1 ^ f2, BooleanFunction.linear(6, m)])
    assert classify(cx.disjoint_spectra_construct(f1, h)).is_plateaued(2)
    g = synthesize(Rows(6, (0, 1, 2, 3)), A("x1*x2 + 1", 2))
    with pytest.raises(PreconditionFailed):
        cx.disjoint_spectra_construct(f1, VectorialFunction([f1 ^ g, h[1]]))
    with pytest.raises(ValueError):
        cx.disjoint_spectra_construct(f1, h, (1,))


def test_disjoint_spectra_bent_case():
    fs = [synthesize(Rows(4, tuple(range(4 * i, 4 * i + 4))), A("x1*x2", 2)) for i in range(2)]
    h = VectorialFunction([fs[0] ^ fs[1], A("x1", 4)])
    # supports {0..3}, {4..7} and their shifts by 1000 are disjoint: amplitude 8 = 2^((4+2)/2)
    F = cx.disjoint_spectra_construct(fs[0], h)
    assert verify_bent(F)


def test_direct_sum_supports():
    d1, d2 = direct_sum_instance()
    assert cx.direct_sum_parameter([d1, d2]) == 0
    assert verify_bent(cx.direct_sum_supports([d1, d2]))
    with pytest.raises(NotDirectSum):
        cx.direct_sum_parameter([d1, d1 ^ A("1", 4)])
    with pytest.raises(NegativeT):
        cx.direct_sum_parameter([d1, d2, d1])
    with pytest.raises(SupportsNotLinear):
        cx.direct_sum_parameter([d1, synthesize(Rows(4, (4, 5, 6, 7)), A("x1*x2", 2))])
    with pytest.raises(NotPlateauedOrBent):
        cx.direct_sum_parameter([d1, A("x1", 4)])


def test_direct_sum_plateaued_result():
    d1 = synthesize(Rows(6, (0, 1, 2, 3)), A("x1*x2", 2))
    d2 = synthesize(Rows(6, (0, 4, 8, 12)), A("x1*x2", 2))
    assert cx.direct_sum_parameter([d1, d2]) == 2
    assert classify(cx.direct_sum_supports([d1, d2])).is_plateaued(2)


def test_invariant_breach_is_assertion():
    assert issubclass(InvariantBreach, AssertionError)
