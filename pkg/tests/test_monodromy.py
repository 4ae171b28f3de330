from fractions import Fraction
from itertools import combinations_with_replacement, permutations, product
from math import gcd
from functools import reduce

import pytest
from hypothesis import given, strategies as st

from hodge_degrees import BoundaryCurve
from hodge_degrees.monodromy import (
    InvalidDatumError,
    MonodromyDatum,
    age,
    age_sum,
    cover_invariants,
    enumerate_data,
    induced_datum,
    new_datum,
    rank_eigenbundle,
)


def test_new_datum_valid_and_connected():
    x = new_datum(5, [1, 4, 2, 3])
    assert x.m == (1, 4, 2, 3) and x.is_connected()
    assert new_datum(2, [1, 1, 1, 1]).is_connected()


def test_new_datum_rejects_bad_sum():
    with pytest.raises(InvalidDatumError, match="4 mod 5"):
        new_datum(5, [1, 1, 1, 1])


def test_new_datum_too_few_points():
    with pytest.raises(InvalidDatumError):
        new_datum(3, [1, 2])


def test_disconnected_datum_is_allowed_but_flagged():
    x = new_datum(4, [2, 2, 2, 2])
    assert not x.is_connected()


def test_new_datum_reduces_mod_d():
    assert new_datum(5, [6, 9, -3, 3]).m == (1, 4, 2, 3)


def test_constructor_requires_reduced_values():
    with pytest.raises(InvalidDatumError):
        MonodromyDatum(5, (6, 4, 2, 3))


def test_age_examples():
    assert age(new_datum(5, [1, 4, 2, 3]), 1, 2) == Fraction(4, 5)
    assert age(new_datum(5, [1, 4, 2, 3]), 0, 3) == 0
    assert age(new_datum(5, [3, 4, 4, 4]), 3, 1) == Fraction(4, 5)


def test_age_index_out_of_range():
    with pytest.raises(InvalidDatumError):
        age(new_datum(5, [1, 4, 2, 3]), 1, 5)
    with pytest.raises(InvalidDatumError):
        age(new_datum(5, [1, 4, 2, 3]), 5, 1)


@pytest.mark.parametrize(
    "d, m, e, rank",
    [(5, [1, 4, 2, 3], 1, 1), (5, [1, 4, 2, 3], 0, 0), (3, [1, 1, 2, 2], 2, 1)],
)
def test_rank_eigenbundle(d, m, e, rank):
    assert rank_eigenbundle(new_datum(d, m), e) == rank


@pytest.mark.parametrize(
    "d, m, genus, q",
    [
        (5, [1, 4, 2, 3], 4, (1, 1, 1, 1)),
        (2, [1, 1, 1, 1], 1, (1, 1, 1, 1)),
        (6, [2, 4, 3, 3], 2, (2, 2, 3, 3)),
    ],
)
def test_cover_invariants(d, m, genus, q):
    inv = cover_invariants(new_datum(d, m))
    assert inv.genus == genus and inv.q == q
    assert all(a * b == d for a, b in zip(inv.q, inv.r))


def test_ranks_add_up_to_genus():
    # the eigenbundles split the Hodge bundle, so their ranks sum to the genus
    for d in range(1, 13):
        for x in enumerate_data(d, 4):
            assert sum(rank_eigenbundle(x, e) for e in range(d)) == cover_invariants(x).genus
        for x in enumerate_data(d, 5):
            assert sum(rank_eigenbundle(x, e) for e in range(d)) == cover_invariants(x).genus


@pytest.mark.parametrize(
    "d, m, blocks, expected",
    [
        (3, [1, 1, 1, 1, 2], [{1, 2}, {3}, {4}, {5}], (2, 1, 1, 2)),
        (2, [1, 1, 1, 1, 1, 1], [{1, 2}, {3, 4}, {5}, {6}], (0, 0, 1, 1)),
        (5, [1, 4, 2, 3, 0], [{5}, {1}, {2}, {3, 4}], (0, 1, 4, 0)),
    ],
)
def test_induced_datum(d, m, blocks, expected):
    got = induced_datum(new_datum(d, m), BoundaryCurve(blocks))
    assert got.d == d and got.m == expected


def test_curve_equality_ignores_block_order():
    a = BoundaryCurve([{5}, {1}, {2}, {3, 4}])
    b = BoundaryCurve([{1}, {2}, {4, 3}, {5}])
    assert a == b and hash(a) == hash(b)
    assert a.blocks != b.blocks


def test_enumerate_small_cases_by_brute_force():
    def brute(d, zeros=True):
        lo = 0 if zeros else 1
        out = []
        for m in product(range(lo, d), repeat=4):
            if list(m) == sorted(m) and sum(m) % d == 0 and reduce(gcd, m, d) == 1:
                out.append(m)
        return out

    assert [x.m for x in enumerate_data(2)] == [(0, 0, 1, 1), (1, 1, 1, 1)] == brute(2)
    assert [x.m for x in enumerate_data(3, include_zero=False)] == [(1, 1, 2, 2)] == brute(3, False)
    for d in range(1, 9):
        assert [x.m for x in enumerate_data(d)] == brute(d)


def test_enumerate_options():
    ordered = list(enumerate_data(4, connected_only=False, canonical=False))
    assert len(ordered) == 4**3
    assert any(not x.is_connected() for x in ordered)
    assert all(sum(x.m) % 4 == 0 for x in ordered)


@st.composite
def data(draw, n_min=3, n_max=7, d_max=40):
    d = draw(st.integers(1, d_max))
    n = draw(st.integers(n_min, n_max))
    m = draw(st.lists(st.integers(0, d - 1), min_size=n - 1, max_size=n - 1))
    return new_datum(d, m + [-sum(m)])


@given(data(), st.data())
def test_age_sums_are_integral(x, draw):
    e = draw.draw(st.integers(0, x.d - 1))
    total = sum(age(x, e, i) for i in range(1, x.n + 1))
    assert total.denominator == 1
    assert total == age_sum(x, e)


@given(data(n_min=4, n_max=4), st.data())
def test_four_point_age_sum_range(x, draw):
    e = draw.draw(st.integers(1, max(1, x.d - 1)) if x.d > 1 else st.just(0))
    s = age_sum(x, e)
    assert s in (0, 1, 2, 3)
    if s == 0:
        assert all(e * v % x.d == 0 for v in x.m)


@given(data(), st.randoms())
def test_genus_permutation_invariant(x, rnd):
    order = list(range(1, x.n + 1))
    rnd.shuffle(order)
    assert cover_invariants(x.permuted(order)).genus == cover_invariants(x).genus


@given(data(n_min=4, n_max=8), st.randoms())
def test_induced_datum_is_valid(x, rnd):
    labels = [rnd.randrange(4) for _ in range(x.n)]
    labels[:4] = [0, 1, 2, 3]
    rnd.shuffle(labels)
    blocks = [[i + 1 for i, lab in enumerate(labels) if lab == k] for k in range(4)]
    y = induced_datum(x, BoundaryCurve(blocks))
    assert sum(y.m) % y.d == 0
