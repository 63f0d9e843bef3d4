import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from bentkit.core import (
    Anf,
    BooleanFunction,
    Tag,
    VectorialFunction,
    WalshSpectrum,
    algebraic_degree,
    anf_of,
    bent_distance,
    bent_dual,
    bitstring,
    classify,
    concat,
    dot,
    dual,
    from_bits,
    function_of,
    hamming_distance,
    inverse_wht,
    lex_order,
    to_bits,
    wht,
)
from bentkit.errors import (
    CapacityError,
    DimensionMismatch,
    NotPlateauedOrBent,
    ParseError,
    SpectrumNotBoolean,
    VNotInSupport,
)
from oracles import bent_tables, naive_anf, naive_dual_bent, naive_wht
from strategies import function_pairs, functions

A = BooleanFunction.from_anf


# index convention and text formats


def test_x1_is_most_significant_bit():
    assert BooleanFunction.variable(3, 1).table.tolist() == [0, 0, 0, 0, 1, 1, 1, 1]
    assert BooleanFunction.variable(3, 3).table.tolist() == [0, 1, 0, 1, 0, 1, 0, 1]


def test_bits_roundtrip():
    assert to_bits(6, 3) == (1, 1, 0)
    assert from_bits((1, 1, 0)) == 6
    assert bitstring(5, 4) == "0101"
    assert dot(0b1101, 0b0111) == 0


def test_hex_reads_left_to_right():
    f = BooleanFunction.from_table([0, 0, 0, 1, 0, 1, 1, 1])
    assert f.to_hex() == "17"
    assert BooleanFunction.from_hex("17") == f
    assert A("x1*x2 + x3*x4", 4).to_hex() == "111e"


@pytest.mark.parametrize("bad", ["", "1g", "123"])
def test_hex_errors(bad):
    with pytest.raises(ParseError):
        BooleanFunction.from_hex(bad)


def test_anf_parse_and_print():
    f = A("x1*x2 + x3 + 1", 3)
    assert str(f) == "1 + x3 + x1*x2"
    assert str(A("0", 3)) == "0"
    assert A("x2*x1", 2) == A("x1*x2", 2)
    assert A("x1 + x1", 2) == BooleanFunction.constant(2, 0)


@pytest.mark.parametrize("bad,pos", [("x0", 0), ("x1 +", 4), ("x1 ** x2", 4), ("y1", 0), ("x", 1)])
def test_anf_parse_errors(bad, pos):
    with pytest.raises(ParseError) as exc:
        Anf.parse(bad)
    assert exc.value.position == pos


def test_anf_variable_beyond_n():
    with pytest.raises(ParseError):
        Anf.parse("x5", 3)


def test_capacity():
    with pytest.raises(CapacityError):
        BooleanFunction.constant(40)


# algebra


def test_lift_and_restrict():
    f = A("x1*x2", 2)
    g = f.lift(1, 2)
    assert g == A("x2*x3", 5)
    assert g.restrict({1: 0, 4: 1, 5: 0}) == f
    assert A("x1*x2 + x3", 3).restrict({3: 1}) == A("x1*x2 + 1", 2)


def test_concat_puts_new_variable_first():
    f0, f1 = A("x1", 2), A("x2", 2)
    assert concat(f0, f1) == A("x2 + x1*x2 + x1*x3", 3)


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        _ = A("x1", 2) ^ A("x1", 3)


# transforms against the oracles


@given(functions(max_n=6))
def test_wht_matches_naive(f):
    assert wht(f).coeffs.tolist() == naive_wht(f.table)


@given(functions(max_n=8))
def test_parseval_and_inverse(f):
    spec = wht(f)
    assert spec.parseval_ok()
    assert inverse_wht(spec) == f


@given(functions(max_n=6))
def test_anf_matches_naive(f):
    assert set(anf_of(f).monomials) == naive_anf(f.table)


@given(functions(max_n=8))
def test_anf_roundtrip(f):
    a = anf_of(f)
    assert function_of(a) == f
    assert BooleanFunction.from_anf(str(a), f.n) == f
    assert algebraic_degree(f) == a.degree


@given(functions(min_n=2, max_n=8))
def test_hex_roundtrip(f):
    assert BooleanFunction.from_hex(f.to_hex()) == f


def test_inverse_rejects_non_boolean_spectrum():
    with pytest.raises(SpectrumNotBoolean) as exc:
        inverse_wht([4, 0, 0, 1])
    assert exc.value.index == 0


@given(function_pairs(max_n=6))
def test_hamming_vs_correlation(pair):
    f, g = pair
    corr = int(np.dot(f.sequence, g.sequence))
    assert hamming_distance(f, g) == (f.size - corr) // 2


# classification


def test_classify_examples():
    assert classify(A("x1*x2 + x3*x4", 4)).tag is Tag.BENT
    assert classify(A("x1 + x3 + 1", 4)).tag is Tag.AFFINE
    c = classify(A("x1*x2 + x3", 3))
    assert c.tag is Tag.PLATEAUED and c.s == 1 and str(c) == "Plateaued{1}"
    assert classify(A("x1*x2*x3", 3)).tag is Tag.OTHER


def test_all_bent_functions_on_four_variables():
    found = 0
    for v in range(1 << 16):
        f = BooleanFunction(4, [(v >> (15 - i)) & 1 for i in range(16)])
        if (f.weight - 6) % 4:  # bent weights are 6 and 10
            continue
        if classify(f).is_bent:
            found += 1
    assert found == len(bent_tables(4)) == 896


def test_bent_dual_matches_oracle():
    for t in bent_tables(4)[::37]:
        f = BooleanFunction(4, t)
        assert bent_dual(f).table.tolist() == naive_dual_bent(t)
        assert bent_dual(bent_dual(f)) == f


def test_bent_dual_rejects_non_bent():
    with pytest.raises(NotPlateauedOrBent):
        bent_dual(A("x1*x2 + x3", 3))


def test_lex_order():
    v, e = lex_order([0b011, 0b010, 0b101, 0b100], 0b011)
    assert v == 0b011 and e == [0, 1, 6, 7]
    with pytest.raises(VNotInSupport):
        lex_order([1, 2], 3)


def test_dual_of_plateaued_default_anchor():
    f = A("x1*x2 + x3", 3)
    v, fstar = dual(f)
    supp = wht(f).support()
    assert v == min(supp)
    assert fstar.n == 2
    for j, e in enumerate(sorted(p ^ v for p in supp)):
        assert (wht(f)[v ^ e] < 0) == bool(fstar.table[j])


@given(functions(min_n=2, max_n=6))
def test_dual_is_bent_for_plateaued(f):
    c = classify(f)
    if c.tag in (Tag.BENT, Tag.PLATEAUED) and f.n - c.s >= 2:
        _, fstar = dual(f)
        assert classify(fstar).is_bent


def test_bent_distance():
    f = A("x1*x2", 2)
    assert bent_distance(f, BooleanFunction.constant(2, 0))
    assert not bent_distance(f, f)


# vectorial functions


def test_components():
    h = VectorialFunction([A("x1", 3), A("x2*x3", 3)])
    assert h.values().tolist() == [0, 0, 0, 1, 2, 2, 2, 3]
    assert h.component(0b11) == A("x1 + x2*x3", 3)
    assert h.component((0, 1)) == A("x2*x3", 3)
    with pytest.raises(DimensionMismatch):
        h.component(4)


def test_spectrum_object():
    s = WalshSpectrum(2, [2, 2, 2, -2])
    assert s.distribution() == {-2: 1, 2: 3}
    assert s.support() == [0, 1, 2, 3]
    assert len(s) == 4


@given(st.integers(1, 6), st.integers(0, 63), st.integers(0, 1))
def test_linear_functions_are_affine(n, a, c):
    a &= (1 << n) - 1
    f = BooleanFunction.linear(n, a, c)
    w = wht(f)
    assert w[a] == (1 << n) * (-1) ** c
    assert classify(f).tag is Tag.AFFINE
