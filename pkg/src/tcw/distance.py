"""Minimum distance and weight distributions of cyclic codes.

Two exact engines:

* exhaustive enumeration of all q^k codewords, split as (span of the first
  half of the generator rows) + (span of the second half) so each block is a
  vectorised broadcast sum;
* bounded-weight search over canonical codewords (0 in the support, first
  coefficient 1, which loses nothing because the code is cyclic and linear).
  Candidates are matched through their syndromes, the evaluations at the
  defining-set coset leaders, meet-in-the-middle style.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations, product
from math import comb

import numpy as np

from .codes import CyclicCode
from .poly import Poly

DEFAULT_BUDGET = 10**8
DEFAULT_WORK_CEILING = 10**9
DEFAULT_MAX_TABLE = 3_000_000


class BudgetExceeded(RuntimeError):
    pass


def default_work_ceiling() -> int:
    env = os.environ.get("TCW_WORK_CEILING")
    return int(float(env)) if env else DEFAULT_WORK_CEILING


@dataclass
class DistanceReport:
    method: str  # exhaustive | bounded_weight | bch_only
    lower: int
    exact: int | None = None
    upper: int | None = None
    witness: Poly | None = None
    budget_exhausted: bool = False
    work_units: int = 0
    weights_exhausted: int = 0  # no nonzero codeword of weight <= this

    def __post_init__(self):
        if self.exact is not None:
            assert self.lower == self.exact == self.upper
        if self.witness is not None:
            assert self.witness.weight == self.upper

    def to_json(self) -> dict:
        doc = {"schema": "v1", "method": self.method, "lower": self.lower, "work_units": self.work_units}
        if self.exact is not None:
            doc["exact"] = self.exact
        if self.upper is not None:
            doc["upper"] = self.upper
        if self.witness is not None:
            doc["witness_support"] = self.witness.support
            doc["witness_coeffs"] = [self.witness[i] for i in self.witness.support]
        doc["budget_exhausted"] = self.budget_exhausted
        return doc


def _span(rows: np.ndarray, q: int) -> np.ndarray:
    """All q^r linear combinations of the given rows, as int8 vectors."""
    out = np.zeros((1, rows.shape[1]), dtype=np.int8)
    for row in rows.astype(np.int8):
        out = np.concatenate([(out + a * row) % q for a in range(q)]).astype(np.int8)
    return out


def _canonical(vec: np.ndarray, q: int) -> Poly:
    """Cyclic shift putting the first nonzero entry at 0, scaled so it equals 1."""
    nz = np.flatnonzero(vec)
    v = np.roll(vec, -int(nz[0])).astype(np.int64)
    v = v * pow(int(v[0]), -1, q) % q
    return Poly.from_array(v, q)


def _enumerate(c: CyclicCode, budget: int, want_witness: bool):
    q, n, k = c.q, c.n, c.k
    if q**k > budget:
        raise BudgetExceeded(f"{q}^{k} codewords exceed the budget of {budget}")
    G = c.generator_matrix()
    half = k // 2
    A = _span(G[:half], q)
    B = _span(G[half:], q)
    counts = np.zeros(n + 1, dtype=np.int64)
    best_w, witness = n + 1, None
    chunk = max(1, (1 << 22) // max(1, B.shape[0] * n))
    for s in range(0, A.shape[0], chunk):
        S = A[s : s + chunk, None, :] + B[None, :, :]
        S %= q
        w = np.count_nonzero(S, axis=-1)
        counts += np.bincount(w.ravel(), minlength=n + 1)
        if want_witness:
            if s == 0:
                w[0, 0] = n + 1
            i = int(w.argmin())
            if w.flat[i] < best_w:
                best_w = int(w.flat[i])
                witness = S.reshape(-1, n)[i].copy()
    return counts, best_w, witness


def weight_distribution(c: CyclicCode, budget: int = DEFAULT_BUDGET) -> dict[int, int]:
    counts, _, _ = _enumerate(c, budget, want_witness=False)
    return {w: int(a) for w, a in enumerate(counts) if a}


def exhaustive_min_distance(c: CyclicCode, budget: int = DEFAULT_BUDGET, with_distribution: bool = False):
    """Exact minimum distance by full enumeration; optionally also the weight distribution."""
    if c.k == 0:
        raise ValueError("zero code has no minimum distance")
    counts, d, vec = _enumerate(c, budget, want_witness=True)
    report = DistanceReport(
        "exhaustive", d, d, d, _canonical(vec, c.q), work_units=c.q**c.k, weights_exhausted=d - 1
    )
    if with_distribution:
        return report, {w: int(a) for w, a in enumerate(counts) if a}
    return report


def _columns(c: CyclicCode) -> np.ndarray:
    """Syndrome contribution of a unit symbol at each position: shape (n, L*m)."""
    n = c.n
    F = c.field
    leaders = np.asarray(c.defining_set.leaders, dtype=np.int64)
    idx = np.arange(n, dtype=np.int64)[:, None] * leaders[None, :] % F.order
    return F.exp_vecs[idx].reshape(n, -1).astype(np.int16)


def _half_size(n: int, q: int, k: int) -> int:
    return comb(n - 1, k) * (q - 1) ** k


def _partials(H: np.ndarray, q: int, k: int, with_origin: bool):
    """Every choice of k positions in 1..n-1 with nonzero coefficients, plus its syndrome."""
    n, s = H.shape
    pos = np.array(list(combinations(range(1, n), k)), dtype=np.int64).reshape(-1, k) if k else np.zeros((1, 0), dtype=np.int64)
    cof = np.array(list(product(range(1, q), repeat=k)), dtype=np.int64).reshape(-1, k) if k else np.zeros((1, 0), dtype=np.int64)
    S = np.zeros((pos.shape[0], cof.shape[0], s), dtype=np.int16)
    for t in range(k):
        S += cof[None, :, t, None].astype(np.int16) * H[pos[:, t]][:, None, :]
    if with_origin:
        S += H[0]
    S %= q
    P = np.repeat(pos, cof.shape[0], axis=0)
    C = np.tile(cof, (pos.shape[0], 1))
    return P, C, S.reshape(-1, s)


def _match(left, right, q: int):
    """Index pairs (i, j) with syndrome(left i) + syndrome(right j) = 0."""
    SL, SR = left[2], right[2]
    keys = np.concatenate([SL, (-SR) % q]).astype(np.uint8)
    _, inv = np.unique(keys, axis=0, return_inverse=True)
    inv = inv.ravel()
    li, ri = inv[: SL.shape[0]], inv[SL.shape[0] :]
    order = np.argsort(ri, kind="stable")
    rs = ri[order]
    lo = np.searchsorted(rs, li, "left")
    cnt = np.searchsorted(rs, li, "right") - lo
    total = int(cnt.sum())
    if total == 0:
        return np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int64)
    L = np.repeat(np.arange(li.size), cnt)
    offs = np.arange(total) - np.repeat(np.cumsum(cnt) - cnt, cnt)
    R = order[np.repeat(lo, cnt) + offs]
    return L, R


def _witness_at_weight(c: CyclicCode, H: np.ndarray, w: int):
    q, n = c.q, c.n
    a = (w - 1) // 2
    b = w - 1 - a
    left = _partials(H, q, a, with_origin=True)
    right = _partials(H, q, b, with_origin=False)
    L, R = _match(left, right, q)
    work = left[2].shape[0] + right[2].shape[0]
    if L.size == 0:
        return None, work
    pos = np.concatenate([np.zeros((L.size, 1), dtype=np.int64), left[0][L], right[0][R]], axis=1)
    cof = np.concatenate([np.ones((L.size, 1), dtype=np.int64), left[1][L], right[1][R]], axis=1)
    vec = np.zeros((L.size, n), dtype=np.int64)
    rows = np.arange(L.size)
    for t in range(pos.shape[1]):
        np.add.at(vec, (rows, pos[:, t]), cof[:, t])
    vec %= q
    weight = np.count_nonzero(vec, axis=1)
    vec = vec[weight == w]
    if vec.shape[0] == 0:
        return None, work
    # smallest witness: lexicographic on sorted support, then on coefficients
    supp = np.sort(np.where(vec != 0, np.arange(n), n), axis=1)[:, :w]
    coeffs = np.take_along_axis(vec, supp, axis=1)
    keys = np.concatenate([supp, coeffs], axis=1)
    best = np.lexsort(keys.T[::-1])[0]
    return Poly.from_array(vec[best], q), work


def bounded_weight_search(
    c: CyclicCode,
    w_max: int,
    work_ceiling: int | None = None,
    max_table: int = DEFAULT_MAX_TABLE,
) -> DistanceReport:
    """Search all canonical codewords of weight 1..w_max, smallest weight first.

    Stops at the first weight with a codeword (which is then the exact minimum
    distance) or when the next weight would exceed the work ceiling.
    """
    if w_max < 1:
        raise ValueError("w_max must be >= 1")
    if work_ceiling is None:
        work_ceiling = default_work_ceiling()
    q, n = c.q, c.n
    if not c.defining_set.leaders:
        return DistanceReport("bounded_weight", 1, 1, 1, Poly.one(q), work_units=1)
    H = _columns(c)
    work = 0
    done = 0
    for w in range(1, min(w_max, n) + 1):
        a = (w - 1) // 2
        sizes = (_half_size(n, q, a), _half_size(n, q, w - 1 - a))
        if work + sum(sizes) > work_ceiling or max(sizes) > max_table:
            return DistanceReport("bounded_weight", done + 1, budget_exhausted=True, work_units=work, weights_exhausted=done)
        found, units = _witness_at_weight(c, H, w)
        work += units
        if found is not None:
            return DistanceReport("bounded_weight", w, w, w, found, work_units=work, weights_exhausted=w - 1)
        done = w
    return DistanceReport("bounded_weight", done + 1, work_units=work, weights_exhausted=done)


def min_distance(
    c: CyclicCode,
    strategy: str = "auto",
    budget: int = DEFAULT_BUDGET,
    w_max: int | None = None,
    work_ceiling: int | None = None,
    max_table: int = DEFAULT_MAX_TABLE,
) -> DistanceReport:
    """Dispatch: exhaustive if q^k fits the budget, else bounded-weight, else the BCH bound."""
    from .bounds import bch_lower_bound

    if strategy not in ("auto", "exhaustive", "bounded", "bch"):
        raise ValueError(f"unknown strategy {strategy!r}")
    if strategy == "exhaustive" or (strategy == "auto" and c.q**c.k <= budget):
        return exhaustive_min_distance(c, budget)
    bch = bch_lower_bound(c.defining_set)
    if strategy == "bch":
        return DistanceReport("bch_only", bch)
    rep = bounded_weight_search(c, w_max or c.n, work_ceiling, max_table)
    if rep.exact is not None:
        return rep
    lower = max(bch, rep.lower)
    if strategy == "bounded":
        rep.lower = lower
        return rep
    return DistanceReport(
        "bch_only", lower, budget_exhausted=rep.budget_exhausted, work_units=rep.work_units,
        weights_exhausted=rep.weights_exhausted,
    )
