from math import gcd

import numpy as np
import pytest
from hypothesis import given, strategies as st

from tcw.bounds import (
    LEMMAS,
    EmptySet,
    FullSet,
    OutOfTheoremRange,
    WrongResidueClass,
    delta_max,
    delta_max_by_v,
    lemma_parameters,
    lemma_window_check,
    longest_cyclic_run,
    multiplied_set,
    theorem_bound,
)
from tcw.codes import FAMILIES, pair_set
from tcw.distance import exhaustive_min_distance
from tcw.residues import NotCoprime


def naive_run(S, n):
    """Brute force: try every start and extend while inside S."""
    S = {s % n for s in S}
    best = (None, -1)
    for a in range(n):
        ell = 0
        while ell < n and (a + ell) % n in S:
            ell += 1
        if ell > best[1]:
            best = (a, ell)
    return best


def test_run_examples():
    assert longest_cyclic_run([1, 2, 3, 7], 10) == (1, 3)
    assert longest_cyclic_run([9, 0, 1], 10) == (9, 3)


def test_run_degenerate():
    with pytest.raises(EmptySet):
        longest_cyclic_run([], 5)
    with pytest.raises(FullSet):
        longest_cyclic_run(range(5), 5)


@given(st.integers(2, 60).flatmap(lambda n: st.tuples(st.just(n), st.sets(st.integers(0, n - 1), min_size=1, max_size=n - 1))))
def test_run_matches_brute_force(case):
    n, S = case
    assert longest_cyclic_run(sorted(S), n) == naive_run(S, n)


def test_multiplier_identity():
    T = pair_set(0, 3, 3, 3)
    assert multiplied_set(T, 1).members == T.members
    with pytest.raises(NotCoprime):
        multiplied_set(T, 2)


@pytest.mark.parametrize("m,expected", [(3, 5), (5, 11), (7, 19)])
def test_delta_max_table(m, expected):
    assert delta_max(pair_set(0, 3, 3, m)).bch_delta == expected


@pytest.mark.parametrize("m", [3, 5])
@pytest.mark.parametrize("pair", FAMILIES)
def test_orbit_reduction_is_exact(pair, m):
    T = pair_set(*pair, 3, m)
    full = delta_max_by_v(T)
    rep = delta_max(T)
    assert rep.run_length == max(full.values())
    assert rep.v == min(v for v, ell in full.items() if ell == rep.run_length)
    assert delta_max(T, reduce=False).run_length == rep.run_length


def test_delta_max_parallel_is_deterministic():
    T = pair_set(0, 3, 3, 5)
    a, b = delta_max(T), delta_max(T, workers=2)
    assert (a.v, a.window_start, a.run_length) == (b.v, b.window_start, b.run_length)


def test_lemma_examples():
    r = lemma_window_check((0, 3), 5)
    assert (r.v, r.bch_delta, r.window_start) == (13, 7, 1)
    r = lemma_window_check((1, 2), 7)
    assert (r.v, r.bch_delta, r.window_start) == (13, 19, 1)
    r = lemma_window_check((2, 3), 5)
    assert (r.v, r.bch_delta, r.window_start) == (13, 7, 242 - 6)


def _valid_lemma_cases():
    for (family, cls), spec in LEMMAS.items():
        for m in range(spec[3], 14, 4):
            yield family, m


@pytest.mark.parametrize("family,m", list(_valid_lemma_cases()))
def test_every_lemma_window(family, m):
    r = lemma_window_check(family, m)
    n = 3**m - 1
    assert gcd(r.v, n) == 1
    image = multiplied_set(pair_set(*family, 3, m), r.v).mask
    window = np.arange(r.window_start, r.window_start + r.run_length) % n
    assert image[window].all()
    # the search can only do at least as well as the lemma
    if m <= 9:
        assert delta_max(pair_set(*family, 3, m)).run_length >= r.run_length


def test_delta_max_m9_equals_lemma():
    assert lemma_parameters((0, 3), 9)[1] == 43 == delta_max(pair_set(0, 3, 3, 9)).bch_delta


def test_lemma_wrong_class():
    with pytest.raises(WrongResidueClass):
        lemma_window_check((0, 3), 3)
    with pytest.raises(WrongResidueClass):
        lemma_window_check((0, 3), 6)


def expected_bound(family, m, dual):
    """Closed forms transcribed independently of the library table."""
    s = 3 ** ((m - 1) // 2)
    one = m % 4 == 1
    if not dual:
        if family in ((0, 3), (2, 3)):
            return (s + 5) // 2 if one else (s + 7) // 2
        return (s + 13) // 2 if one else (s + 11) // 2
    if family in ((0, 3), (2, 3)):
        return (s + 15) // 2 if one else (s + 13) // 2
    return (s + 7) // 2 if one else (s + 9) // 2


@pytest.mark.parametrize("m", [5, 7, 9, 11, 13])
@pytest.mark.parametrize("pair", FAMILIES)
@pytest.mark.parametrize("dual", [False, True])
def test_theorem_bound_closed_forms(pair, m, dual):
    assert theorem_bound(pair, m, dual) == expected_bound(pair, m, dual)


def test_theorem_bound_examples():
    assert theorem_bound((0, 3), 7) == 17
    assert theorem_bound((1, 2), 5) == 11
    assert theorem_bound((1, 2), 5, dual=True) == 8


def test_theorem_bound_range():
    with pytest.raises(OutOfTheoremRange):
        theorem_bound((0, 3), 3)
    with pytest.raises(OutOfTheoremRange):
        theorem_bound((0, 3), 4)
    assert theorem_bound((0, 3), 3, allow_out_of_range=True) == 5


@pytest.mark.parametrize("dual", [False, True])
@pytest.mark.parametrize("pair", FAMILIES)
def test_bch_soundness_all_multipliers_m3(pair, dual, m3_codes):
    c = m3_codes[pair, dual]
    d = exhaustive_min_distance(c).exact
    for v, ell in delta_max_by_v(c.defining_set).items():
        assert d >= ell + 1, (v, ell)
