from itertools import product

import numpy as np
import pytest

from tcw.codes import (
    FAMILIES,
    build_code,
    code_from_defining_set,
    complement_code,
    dual_code,
    is_codeword,
)
from tcw.distance import (
    BudgetExceeded,
    bounded_weight_search,
    default_work_ceiling,
    exhaustive_min_distance,
    min_distance,
    weight_distribution,
)
from tcw.poly import Poly
from tcw.residues import units


def brute_force_distribution(c):
    """Every vector of GF(q)^n, kept when the generator divides it."""
    q, n = c.q, c.n
    g = c.generator
    counts = {}
    for word in product(range(q), repeat=n):
        if (Poly(word, q) % g).is_zero:
            w = sum(1 for x in word if x)
            counts[w] = counts.get(w, 0) + 1
    return counts


def smallest_canonical_min_word(c):
    best = None
    d = min(w for w in brute_force_distribution(c) if w)
    for word in product(range(c.q), repeat=c.n):
        if word[0] == 1 and sum(1 for x in word if x) == d and (Poly(word, c.q) % c.generator).is_zero:
            supp = [i for i, x in enumerate(word) if x]
            key = (supp, [word[i] for i in supp])
            if best is None or key < best[0]:
                best = (key, Poly(word, c.q))
    return best[1]


@pytest.mark.parametrize("pair", [(0, 1), (1, 3), (0, 2), (2, 3)])
def test_weight_distribution_matches_brute_force(pair):
    c = build_code(*pair, q=3, m=2)
    assert weight_distribution(c) == brute_force_distribution(c)
    d = dual_code(c)
    assert weight_distribution(d) == brute_force_distribution(d)


@pytest.mark.parametrize("pair", [(0, 1), (1, 3), (2, 3)])
def test_bounded_witness_is_smallest(pair):
    c = build_code(*pair, q=3, m=2)
    rep = bounded_weight_search(c, c.n)
    assert rep.witness == smallest_canonical_min_word(c)


def test_m3_examples(m3_codes):
    assert exhaustive_min_distance(m3_codes[(0, 3), False]).exact == 8
    assert exhaustive_min_distance(m3_codes[(0, 1), False]).exact == 7
    assert exhaustive_min_distance(m3_codes[(1, 2), True]).exact == 9


def test_weight_distribution_examples(m3_codes):
    wd = weight_distribution(m3_codes[(0, 3), False])
    assert wd[0] == 1
    assert sum(wd.values()) == 3**13
    assert min(w for w in wd if w) == 8


@pytest.mark.parametrize("key", [((1, 2), False), ((2, 3), True)])
def test_exhaustive_witness(key, m3_codes):
    c = m3_codes[key]
    rep = exhaustive_min_distance(c)
    assert rep.witness.weight == rep.exact
    assert is_codeword(c, rep.witness)


def test_q5_examples():
    rep = bounded_weight_search(build_code(1, 3, q=5, m=3), 2)
    assert rep.exact == 2
    rep = bounded_weight_search(build_code(2, 3, q=5, m=3), 3)
    assert rep.exact == 3 and rep.weights_exhausted == 2
    c = dual_code(build_code(0, 1, q=5, m=3))
    rep = bounded_weight_search(c, 4)
    assert rep.exact == 4 and rep.weights_exhausted == 3
    assert is_codeword(c, rep.witness) and rep.witness.weight == 4
    assert rep.witness[0] == 1


def test_bounded_stops_below_distance(m3_codes):
    rep = bounded_weight_search(m3_codes[(0, 3), False], 5)
    assert rep.exact is None and rep.lower == 6 and not rep.budget_exhausted


def test_strategy_dispatch(m3_codes):
    assert min_distance(m3_codes[(0, 3), False]).method == "exhaustive"
    rep = min_distance(build_code(0, 2, q=5, m=3))
    assert (rep.method, rep.exact) == ("bounded_weight", 2)
    rep = min_distance(build_code(0, 3, m=5), work_ceiling=10**6)
    assert rep.method == "bch_only" and rep.exact is None and rep.lower >= 7
    assert min_distance(m3_codes[(0, 3), False], "bch").lower == 5


def test_budget(m3_codes):
    with pytest.raises(BudgetExceeded):
        exhaustive_min_distance(m3_codes[(0, 3), False], budget=1000)


def test_work_ceiling_env(monkeypatch):
    monkeypatch.setenv("TCW_WORK_CEILING", "1000")
    assert default_work_ceiling() == 1000
    rep = bounded_weight_search(build_code(2, 3, q=5, m=3), 4)
    assert rep.budget_exhausted and rep.exact is None
    monkeypatch.delenv("TCW_WORK_CEILING")
    assert default_work_ceiling() == 10**9


def test_report_json(m3_codes):
    doc = exhaustive_min_distance(m3_codes[(0, 3), False]).to_json()
    assert doc["schema"] == "v1" and doc["exact"] == 8
    assert len(doc["witness_support"]) == 8 == len(doc["witness_coeffs"])


@pytest.mark.parametrize("pair", FAMILIES)
def test_dual_and_complement_distributions(pair, m3_codes):
    assert weight_distribution(m3_codes[pair, True]) == weight_distribution(complement_code(*pair))


@pytest.mark.parametrize("pair", FAMILIES)
def test_multiplier_images_share_distribution(pair, gf27, m3_codes):
    c = m3_codes[pair, False]
    base = weight_distribution(c)
    seen = {c.defining_set.members}
    for v in units(c.n).tolist():
        T = c.defining_set.scaled(v)
        if T.members in seen:
            continue  # T(3v) = T(v): same code as an earlier multiplier
        seen.add(T.members)
        assert weight_distribution(code_from_defining_set(gf27, T)) == base, v
    assert len(seen) > 1
