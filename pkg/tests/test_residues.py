from math import gcd

import pytest
from hypothesis import given, strategies as st

from tcw.residues import (
    NotCoprime,
    OutOfRange,
    QDividesN,
    all_cosets,
    coset_leaders,
    cyclotomic_coset,
    expansion,
    is_coset_closed,
    mod_inverse,
    q_weight,
    q_weights,
)

FIELDS = [(2, 3), (2, 6), (3, 2), (3, 3), (3, 4), (3, 5), (5, 2), (5, 3), (7, 2)]


def digit_sum(i, q):
    s = 0
    while i:
        i, r = divmod(i, q)
        s += r
    return s


def test_q_weight_examples():
    assert q_weight(0, 3, 3) == 0
    assert q_weight(13, 3, 3) == 3
    assert expansion(13, 3, 3) == [1, 1, 1]


def test_q_weight_range():
    with pytest.raises(OutOfRange):
        q_weight(27, 3, 3)


@pytest.mark.parametrize("q,m", FIELDS)
def test_q_weights_vector_matches_digit_sum(q, m):
    w = q_weights(q, m)
    assert w.tolist() == [digit_sum(i, q) for i in range(q**m - 1)]


def test_coset_examples():
    assert cyclotomic_coset(0, 3, 26).members == (0,)
    c = cyclotomic_coset(1, 3, 26)
    assert sorted(c.members) == [1, 3, 9] and c.size == 3
    assert cyclotomic_coset(13, 3, 26).size == 1


def test_all_cosets_examples():
    cs = all_cosets(3, 26)
    assert len(cs) == 10 and sum(c.size for c in cs) == 26
    assert [c.members for c in all_cosets(3, 2)] == [(0,), (1,)]
    assert all(3 % c.size == 0 for c in all_cosets(5, 124))


def test_q_divides_n():
    with pytest.raises(QDividesN):
        all_cosets(3, 27)


@pytest.mark.parametrize("q,m", FIELDS)
def test_cosets_partition_and_weight_constant(q, m):
    n = q**m - 1
    cs = all_cosets(q, n)
    seen = [x for c in cs for x in c.members]
    assert sorted(seen) == list(range(n))
    w = q_weights(q, m)
    for c in cs:
        assert len({int(w[j]) for j in c.members}) == 1
        assert c.leader == min(c.members)
    assert coset_leaders(range(n), q, n) == [c.leader for c in cs]


def test_is_coset_closed():
    assert is_coset_closed([1, 3, 9], 3, 26)
    assert not is_coset_closed([1, 3], 3, 26)


def test_mod_inverse_examples():
    assert mod_inverse(1, 26) == 1
    assert mod_inverse(13, 242) == 149
    with pytest.raises(NotCoprime):
        mod_inverse(14, 242)


@given(st.integers(2, 10**6), st.integers(1, 10**6))
def test_mod_inverse_involution(n, v):
    v %= n
    if gcd(v, n) != 1:
        with pytest.raises(NotCoprime):
            mod_inverse(v, n)
        return
    u = mod_inverse(v, n)
    assert u * v % n == 1 % n
    assert mod_inverse(u, n) == v % n


# (m mod 4, v, v^-1) written straight from the multiplier lemmas
def _lemma_inverses(m):
    n, t = 3**m - 1, 3 ** ((m + 1) // 2)
    s = 3 ** ((m - 1) // 2)
    if m % 4 == 1:
        return [((t - 1) // 2, n // 2 + t + 1), ((s + 1) // 2, n // 2 - t + 3)]
    return [((t + 1) // 2, n // 2 + t - 1), ((s - 1) // 2, n // 2 - t - 3)]


@pytest.mark.parametrize("m", [5, 7, 9, 11, 13])
def test_lemma_inverse_closed_forms(m):
    n = 3**m - 1
    for v, inv in _lemma_inverses(m):
        assert mod_inverse(v, n) == inv
