from fractions import Fraction as F
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import bpscount.correspondence as corr
from bpscount.correspondence import (
    CorrespondenceMatrix,
    NonIntegralEntry,
    build_c_matrix,
    c_entry,
    composed_oracle_matrix,
    invert_c_matrix,
    local_from_relative,
    relative_from_local,
)
from bpscount.transforms import (
    InvariantSequence,
    Kind,
    TangencyContext,
    local_bps_from_gw,
    relative_gw_from_bps,
)
from oracles import dense_matmul


def ctx(w, n):
    return TangencyContext(w, n)


def hand_c21(w):
    # I(2) = {1, 2}: k=1 gives -(-1)^w, k=2 gives binom(2w-3, 1)
    return F((2 * w - 3) - (-1) ** w, 4)


@pytest.mark.parametrize("w", range(1, 10))
def test_c21_by_hand(w):
    assert c_entry(2, 1, w) == hand_c21(w)


def test_c_entry_examples():
    assert all(c_entry(d, d, w) == 1 for d in range(1, 13) for w in range(1, 6))
    assert c_entry(2, 1, 3) == 1
    # (1/4)[-binom(4, 0) + binom(9, 1)]
    assert c_entry(4, 2, 3) == 2
    # (-1/9)[1 - binom(5, 2)]
    assert c_entry(3, 1, 3) == 1
    assert c_entry(3, 2, 5) == 0


def test_c_entry_rejects_nonpositive():
    with pytest.raises(ValueError):
        c_entry(0, 1, 3)
    with pytest.raises(ValueError):
        c_entry(2, 1, 0)


def test_build_examples():
    assert build_c_matrix(ctx(3, 1)).dense() == [[1]]
    assert build_c_matrix(ctx(3, 3)).dense() == [[1, 0, 0], [1, 1, 0], [1, 0, 1]]
    assert build_c_matrix(ctx(3, 7)).determinant() == 1


def test_structure_up_to_60():
    for w in range(1, 10):
        for s, t in product(range(1, 61), repeat=2):
            x = c_entry(s, t, w)
            if s % t:
                assert x == 0
            else:
                assert x.denominator == 1
        assert all(c_entry(d, d, w) == 1 for d in range(1, 61))


def test_nonintegral_entry_is_fatal(monkeypatch):
    monkeypatch.setattr(corr, "c_entry", lambda s, t, w: F(1, 2) if (s, t) == (2, 1) else F(s == t))
    with pytest.raises(NonIntegralEntry) as info:
        build_c_matrix(ctx(3, 2))
    assert (info.value.s, info.value.t, info.value.w, info.value.value) == (2, 1, 3, F(1, 2))


def test_inverse_examples():
    assert invert_c_matrix(build_c_matrix(ctx(3, 1))).dense() == [[1]]
    inv = invert_c_matrix(build_c_matrix(ctx(3, 2)))
    assert inv.dense() == [[1, 0], [-1, 1]] and inv.inverse
    assert invert_c_matrix(inv) == build_c_matrix(ctx(3, 2))


@pytest.mark.parametrize("w", range(1, 10))
def test_inverse_dense_product(w):
    c = build_c_matrix(ctx(w, 24))
    inv = invert_c_matrix(c)
    ident = [[int(i == j) for j in range(24)] for i in range(24)]
    assert dense_matmul(c.dense(), inv.dense()) == ident
    assert dense_matmul(inv.dense(), c.dense()) == ident


def test_matrix_accessors():
    c = build_c_matrix(ctx(3, 4))
    assert c[4, 2] == 2 and c[3, 2] == 0 and c.size == 4
    assert c.truncate(3) == build_c_matrix(ctx(3, 3))
    with pytest.raises(IndexError):
        c[5, 1]
    assert CorrespondenceMatrix(3, ({1: 1}, {1: 4, 2: 3})).determinant() == 3


def test_oracle_small():
    assert composed_oracle_matrix(ctx(3, 1)) == [[1]]
    assert composed_oracle_matrix(ctx(3, 2))[1][0] == hand_c21(3) == 1


@pytest.mark.parametrize("w", range(1, 10))
def test_oracle_equals_closed_form(w):
    assert build_c_matrix(ctx(w, 30)).dense() == composed_oracle_matrix(ctx(w, 30))


def test_prefix_stability_of_c():
    for w in (1, 3, 8):
        big = build_c_matrix(ctx(w, 40))
        assert big.truncate(20) == build_c_matrix(ctx(w, 20))
        oracle = composed_oracle_matrix(ctx(w, 24))
        assert [row[:12] for row in oracle[:12]] == composed_oracle_matrix(ctx(w, 12))


def test_local_from_relative_examples():
    out = local_from_relative(InvariantSequence((1, 0, 0), Kind.RELATIVE_BPS), ctx(3, 3))
    assert out.values == (F(1, 3), F(-1, 6), F(1, 9))
    zero = local_from_relative(InvariantSequence((0,) * 4, Kind.RELATIVE_BPS), ctx(3, 4))
    assert zero.values == (0,) * 4


def test_relative_from_local_examples():
    zero = relative_from_local(InvariantSequence((0,) * 3, Kind.LOCAL_BPS), ctx(3, 3))
    assert zero.values == (0, 0, 0)
    out = relative_from_local(InvariantSequence((1, 0, 0), Kind.LOCAL_BPS), ctx(3, 3))
    # Lambda e1 = 3 e1, then C^-1 column 1 for w=3 is (1, -1, -1)
    assert out.values == (3, -3, -3)


@settings(max_examples=60)
@given(st.lists(st.integers(-10**6, 10**6), min_size=1, max_size=30), st.integers(1, 9))
def test_theorem_round_trips(values, w):
    c = ctx(w, len(values))
    nrel = InvariantSequence(tuple(values), Kind.RELATIVE_BPS)
    assert relative_from_local(local_from_relative(nrel, c), c) == nrel
    nloc = InvariantSequence(tuple(values), Kind.LOCAL_BPS)
    assert local_from_relative(relative_from_local(nloc, c), c) == nloc


@settings(max_examples=30)
@given(st.lists(st.integers(-1000, 1000), min_size=1, max_size=20), st.integers(1, 9))
def test_theorem_through_gw_level(values, w):
    """Push relative BPS counts to GW level, convert with N_d = (-1)^(dw+1) dw I_d,
    pull back with the Moebius transform, and compare with the matrix route."""
    c = ctx(w, len(values))
    nrel = InvariantSequence(tuple(values), Kind.RELATIVE_BPS)
    rel_gw = relative_gw_from_bps(nrel, c)
    loc_gw = InvariantSequence(
        tuple(x / ((-1) ** (d * w + 1) * d * w) for d, x in enumerate(rel_gw.values, 1)),
        Kind.LOCAL_GW,
    )
    assert local_bps_from_gw(loc_gw, c) == local_from_relative(nrel, c)


def test_length_mismatch():
    with pytest.raises(ValueError):
        local_from_relative(InvariantSequence((1, 2), Kind.RELATIVE_BPS), ctx(3, 3))
    with pytest.raises(ValueError):
        relative_from_local(InvariantSequence((1, 2), Kind.LOCAL_BPS), ctx(3, 3))
