import pytest
from hypothesis import given, strategies as st

from polymology import partition as P

import oracles


def test_normalize_trims_zeros():
    assert P.normalize([3, 1, 0, 0]) == (3, 1)
    assert P.normalize([]) == ()


def test_normalize_rejects_bad_input():
    with pytest.raises(ValueError):
        P.normalize([1, 2])
    with pytest.raises(ValueError):
        P.normalize([2, -1])


def test_transpose_example():
    assert P.transpose((3, 1)) == (2, 1, 1)
    assert P.transpose(()) == ()


@pytest.mark.parametrize("w", range(9))
def test_transpose_is_involution(w):
    for lam in P.enumerate_partitions(w, w):
        assert P.transpose(P.transpose(lam)) == lam
        assert P.weight(P.transpose(lam)) == w


def test_enumerate_matches_brute_force():
    for w in range(10):
        for rows in range(1, 5):
            for cols in (None, 2, 3):
                got = P.enumerate_partitions(w, rows, cols)
                want = [l for l in oracles.partitions(w, rows) if cols is None or not l or l[0] <= cols]
                assert sorted(got) == sorted(want)
                assert len(set(got)) == len(got)


def test_enumerate_order_is_lex_descending():
    assert P.enumerate_partitions(4, 4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    for w in range(8):
        got = P.enumerate_partitions(w, 4)
        assert got == sorted(got, key=P.order_key)


@pytest.mark.parametrize("k,n", [(k, n) for n in range(2, 7) for k in range(1, n)])
def test_box_counts_are_symmetric(k, n):
    top = k * (n - k)
    counts = [len(P.enumerate_partitions(s, k, n - k)) for s in range(top + 1)]
    assert counts == counts[::-1]
    assert sum(counts) == len(P.box_partitions(k, n - k))


def test_containment_and_box():
    assert P.contains((3, 2), (2, 2))
    assert not P.contains((3,), (1, 1))
    assert P.in_box((2, 2), 2, 2)
    assert not P.in_box((3,), 2, 2)
    assert not P.in_box((1, 1, 1), 2, 2)


def test_parse():
    assert P.parse("2,1") == (2, 1)
    assert P.parse("") == ()


@given(st.lists(st.integers(0, 6), max_size=6))
def test_transpose_preserves_weight(parts):
    lam = P.normalize(sorted(parts, reverse=True))
    mu = P.transpose(lam)
    assert P.weight(mu) == P.weight(lam)
    assert P.contains(lam, lam) and P.contains(mu, mu)
