"""BCH-bound engine: multiplier images of defining sets and consecutive-run search.

A run of length l (cyclically consecutive residues) inside v*T certifies
d >= l + 1 for the code with defining set T whenever gcd(v, n) = 1.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd

import numpy as np

from .codes import DefiningSet, pair_set
from .residues import NotCoprime, coset_leaders, units


class EmptySet(ValueError):
    pass


class FullSet(ValueError):
    pass


class WrongResidueClass(ValueError):
    pass


class OutOfTheoremRange(ValueError):
    pass


class ContainmentViolated(AssertionError):
    def __init__(self, msg: str, witness: int):
        super().__init__(msg)
        self.witness = witness


@dataclass(frozen=True)
class BoundReport:
    v: int
    window_start: int
    run_length: int
    source: str  # "lemma" or "search"
    family: tuple[int, int] | None = None
    m: int | None = None

    @property
    def bch_delta(self) -> int:
        return self.run_length + 1

    def to_json(self) -> dict:
        return {
            "schema": "v1",
            "family": list(self.family) if self.family else None,
            "m": self.m,
            "v": self.v,
            "window_start": self.window_start,
            "run_length": self.run_length,
            "bch_delta": self.bch_delta,
            "source": self.source,
        }


def multiplied_set(T: DefiningSet, v: int) -> DefiningSet:
    if gcd(v, T.n) != 1:
        raise NotCoprime(f"gcd({v}, {T.n}) != 1")
    return T.scaled(v)


def _mask_of(S, n: int | None = None) -> np.ndarray:
    if isinstance(S, DefiningSet):
        return S.mask
    S = np.asarray(S)
    if S.dtype == bool:
        return S
    if n is None:
        raise ValueError("n required for a plain residue collection")
    out = np.zeros(n, dtype=bool)
    out[S.astype(np.int64) % n] = True
    return out


def _run_of_mask(mask: np.ndarray) -> tuple[int, int]:
    n = mask.size
    off = np.flatnonzero(~mask)
    if off.size == 0:
        raise FullSet("every residue is present; run length is n")
    if off.size == n:
        raise EmptySet("no residue present")
    # rotate so the sequence ends on an absent residue; runs then never wrap
    shift = int(off[0]) + 1
    r = np.roll(mask, -shift).view(np.int8)
    d = np.diff(r, prepend=0, append=0)
    starts = np.flatnonzero(d == 1)
    lengths = np.flatnonzero(d == -1) - starts
    best = int(lengths.max())
    a = int(((starts[lengths == best] + shift) % n).min())
    return a, best


def longest_cyclic_run(S, n: int | None = None) -> tuple[int, int]:
    """(a, l): longest l with {a, ..., a+l-1} mod n inside S; ties go to the smallest a."""
    return _run_of_mask(_mask_of(S, n))


def _scan(members: np.ndarray, n: int, vs: np.ndarray) -> tuple[int, int, int]:
    best = (-1, 0, 0)  # (length, -v, -a) maximised
    mask = np.zeros(n, dtype=bool)
    for v in vs.tolist():
        mask[:] = False
        mask[members * v % n] = True
        a, ell = _run_of_mask(mask)
        if ell > best[0]:
            best = (ell, v, a)
    return best


def _scan_chunk(args):
    return _scan(*args)


def delta_max(T: DefiningSet, workers: int = 1, reduce: bool = True) -> BoundReport:
    """Best multiplier: maximise the longest run in v*T over all units v.

    Since T is closed under multiplication by q, v*T = (q v)*T, so scanning one
    representative per q-orbit of units (its smallest member) is exact. Ties are
    broken by smallest v, then smallest window start.
    """
    if len(T) == 0:
        raise EmptySet("empty defining set")
    n = T.n
    vs = units(n)
    if reduce and T.is_closed():
        vs = np.asarray(coset_leaders(vs.tolist(), T.q, n), dtype=np.int64)
    members = np.asarray(T.members, dtype=np.int64)
    if workers > 1 and vs.size > workers:
        chunks = np.array_split(vs, workers)
        with ProcessPoolExecutor(workers) as ex:
            results = list(ex.map(_scan_chunk, [(members, n, c) for c in chunks]))
        ell = max(r[0] for r in results)
        # chunks are ordered by v and each keeps its first maximiser
        _, v, a = next(r for r in results if r[0] == ell)
    else:
        ell, v, a = _scan(members, n, vs)
    return BoundReport(v, a, ell, "search", T.label if T.label and len(T.label) == 2 else None)


def delta_max_by_v(T: DefiningSet) -> dict[int, int]:
    """Run length of the longest window in v*T for every unit v (no reduction)."""
    members = np.asarray(T.members, dtype=np.int64)
    out = {}
    mask = np.zeros(T.n, dtype=bool)
    for v in units(T.n).tolist():
        mask[:] = False
        mask[members * v % T.n] = True
        out[v] = _run_of_mask(mask)[1]
    return out


# (family, m mod 4) -> (v(h), delta(h), window side, smallest m), with h = (m-1)/2
LEMMAS = {
    ((0, 3), 1): (lambda h: (3 ** (h + 1) - 1) // 2, lambda h: (3**h + 5) // 2, "low", 5),
    ((0, 3), 3): (lambda h: (3 ** (h + 1) + 1) // 2, lambda h: (3**h + 7) // 2, "low", 7),
    ((1, 2), 1): (lambda h: (3**h + 1) // 2, lambda h: (3**h + 13) // 2, "low", 5),
    ((1, 2), 3): (lambda h: (3**h - 1) // 2, lambda h: (3**h + 11) // 2, "low", 7),
    ((0, 1), 1): (lambda h: (3**h + 1) // 2, lambda h: (3**h + 13) // 2, "high", 5),
    ((0, 1), 3): (lambda h: (3**h - 1) // 2, lambda h: (3**h + 11) // 2, "high", 7),
    ((2, 3), 1): (lambda h: (3 ** (h + 1) - 1) // 2, lambda h: (3**h + 5) // 2, "high", 5),
    ((2, 3), 3): (lambda h: (3 ** (h + 1) + 1) // 2, lambda h: (3**h + 7) // 2, "high", 7),
}


def lemma_parameters(family: tuple[int, int], m: int) -> tuple[int, int, str]:
    key = (tuple(family), m % 4)
    if m % 2 == 0 or key not in LEMMAS:
        raise WrongResidueClass(f"no window lemma for family {family} with m={m}")
    v_of, delta_of, side, m_min = LEMMAS[key]
    if m < m_min:
        raise WrongResidueClass(f"window lemma for {family}, m = {m % 4} mod 4 needs m >= {m_min}")
    h = (m - 1) // 2
    return v_of(h), delta_of(h), side


def lemma_window_check(family: tuple[int, int], m: int, q: int = 3) -> BoundReport:
    """Check the closed-form multiplier window {1..delta-1} or {n-delta+1..n-1} inside v*T."""
    if q != 3:
        raise WrongResidueClass("window lemmas are stated for ternary codes only")
    family = tuple(family)
    v, delta, side = lemma_parameters(family, m)
    n = 3**m - 1
    if gcd(v, n) != 1:
        raise ContainmentViolated(f"gcd({v}, {n}) != 1", v)
    T = pair_set(*family, 3, m)
    image = _mask_of(multiplied_set(T, v))
    start = 1 if side == "low" else n - (delta - 1)
    window = np.arange(start, start + delta - 1) % n
    missing = window[~image[window]]
    if missing.size:
        raise ContainmentViolated(
            f"residue {int(missing[0])} of the window is not in v*T (v={v}, delta={delta})", int(missing[0])
        )
    return BoundReport(v, start, delta - 1, "lemma", family, m)


# (family, dual) -> (offset for m = 1 mod 4, offset for m = 3 mod 4, smallest m)
THEOREMS = {
    ((0, 3), False): (5, 7, 5),
    ((1, 2), False): (13, 11, 5),
    ((0, 1), False): (13, 11, 3),
    ((2, 3), False): (5, 7, 3),
    ((0, 3), True): (15, 13, 3),
    ((1, 2), True): (7, 9, 3),
    ((0, 1), True): (7, 9, 3),
    ((2, 3), True): (15, 13, 3),
}


def theorem_bound(family: tuple[int, int], m: int, dual: bool = False, allow_out_of_range: bool = False) -> int:
    """Closed-form minimum-distance lower bound (3^((m-1)/2) + c)/2 for odd m.

    ``allow_out_of_range`` evaluates the formula below the stated smallest m;
    such values are exploratory and not covered by the window lemmas.
    """
    key = (tuple(family), bool(dual))
    if key not in THEOREMS:
        raise OutOfTheoremRange(f"no bound for family {family}")
    if m % 2 == 0 or m < 1:
        raise OutOfTheoremRange(f"bounds are stated for odd m, got {m}")
    c1, c3, m_min = THEOREMS[key]
    if m < m_min and not allow_out_of_range:
        raise OutOfTheoremRange(f"bound for {family}{' dual' if dual else ''} stated for m >= {m_min}")
    c = c1 if m % 4 == 1 else c3
    return (3 ** ((m - 1) // 2) + c) // 2


def bch_lower_bound(T: DefiningSet) -> int:
    """Best BCH bound over all multipliers (1 when T is empty)."""
    if len(T) == 0:
        return 1
    if len(T) == T.n:
        return T.n + 1
    return delta_max(T).bch_delta
