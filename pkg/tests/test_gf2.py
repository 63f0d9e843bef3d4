import itertools

from hypothesis import given
from hypothesis import strategies as st

from bentkit import gf2


def brute_span(vectors):
    pts = {0}
    for v in vectors:
        pts |= {p ^ v for p in pts}
    return pts


vec_lists = st.lists(st.integers(0, 255), max_size=6)


@given(vec_lists)
def test_reduced_basis_spans_same_space(vs):
    basis = gf2.reduced_basis(vs)
    assert set(gf2.span(basis)) == brute_span(vs)
    assert len(gf2.span(basis)) == 1 << len(basis)
    assert basis == sorted(basis, reverse=True)


@given(vec_lists)
def test_pivots_are_unique_in_their_columns(vs):
    basis = gf2.reduced_basis(vs)
    for i, r in enumerate(basis):
        top = r.bit_length() - 1
        assert all(not (b >> top) & 1 for j, b in enumerate(basis) if j != i)


@given(vec_lists, st.integers(0, 255))
def test_in_span(vs, v):
    assert gf2.in_span(v, vs) == (v in brute_span(vs))


@given(vec_lists)
def test_orthogonal_complement(vs):
    k = 8
    perp = gf2.orthogonal_complement(vs, k)
    U = brute_span(vs)
    expected = {w for w in range(1 << k) if all(bin(w & u).count("1") % 2 == 0 for u in U)}
    assert set(gf2.span(perp)) == expected
    assert len(perp) == k - gf2.rank(vs)


def test_span_order_follows_bits():
    assert gf2.span([0b100, 0b010]) == [0, 0b010, 0b100, 0b110]


def test_rank_small():
    assert gf2.rank([1, 2, 3]) == 2
    assert gf2.rank([]) == 0
    for combo in itertools.combinations([1, 2, 4, 8], 3):
        assert gf2.rank(combo) == 3
