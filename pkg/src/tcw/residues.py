"""Residue combinatorics on Z_n: base-q digits, q-weights, cyclotomic cosets."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

MAX_N = 2**31


class OutOfRange(ValueError):
    pass


class QDividesN(ValueError):
    pass


class NotCoprime(ValueError):
    pass


@dataclass(frozen=True)
class Coset:
    leader: int
    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    def __contains__(self, s: int) -> bool:
        return s in self.members


def expansion(i: int, q: int, m: int) -> list[int]:
    """Base-q digits ``i_0, ..., i_{m-1}`` of ``i`` (least significant first)."""
    if not 0 <= i <= q**m - 1:
        raise OutOfRange(f"{i} not in [0, {q**m - 1}]")
    digits = []
    for _ in range(m):
        i, d = divmod(i, q)
        digits.append(d)
    return digits


def q_weight(i: int, q: int, m: int) -> int:
    return sum(expansion(i, q, m))


def q_weights(q: int, m: int, n: int | None = None) -> np.ndarray:
    """Vector of q-weights of 0..n-1 (default n = q^m - 1)."""
    if n is None:
        n = q**m - 1
    x = np.arange(n, dtype=np.int64)
    w = np.zeros(n, dtype=np.int64)
    for _ in range(m):
        w += x % q
        x //= q
    return w


def _check(q: int, n: int) -> None:
    if n < 1 or n > MAX_N:
        raise OutOfRange(f"modulus {n} outside 1..2^31")
    if gcd(q, n) != 1:
        raise QDividesN(f"gcd({q}, {n}) != 1")


def cyclotomic_coset(s: int, q: int, n: int) -> Coset:
    _check(q, n)
    if not 0 <= s < n:
        raise OutOfRange(f"{s} not in Z_{n}")
    orbit = [s]
    t = s * q % n
    while t != s:
        orbit.append(t)
        t = t * q % n
    members = tuple(sorted(orbit))
    return Coset(members[0], members)


def all_cosets(q: int, n: int) -> list[Coset]:
    """Partition of Z_n into q-cyclotomic cosets, ordered by leader."""
    _check(q, n)
    seen = np.zeros(n, dtype=bool)
    cosets = []
    for s in range(n):
        if seen[s]:
            continue
        c = cyclotomic_coset(s, q, n)
        seen[list(c.members)] = True
        cosets.append(c)
    return cosets


def coset_leaders(members, q: int, n: int) -> list[int]:
    """Smallest element of every coset meeting ``members`` (assumed coset-closed)."""
    rep = np.arange(n, dtype=np.int64)
    mask = np.zeros(n, dtype=bool)
    mask[np.asarray(list(members), dtype=np.int64)] = True
    # leader of s is min over s*q^t; iterate until the orbit closes (at most ord_n(q) steps)
    cur = rep.copy()
    best = rep.copy()
    while True:
        cur = cur * q % n
        if np.array_equal(cur, rep):
            break
        np.minimum(best, cur, out=best)
    return sorted(set(best[mask].tolist()))


def is_coset_closed(members, q: int, n: int) -> bool:
    arr = np.asarray(sorted(members), dtype=np.int64)
    image = np.sort(arr * q % n)
    return bool(np.array_equal(arr, image))


def mod_inverse(v: int, n: int) -> int:
    if gcd(v, n) != 1:
        raise NotCoprime(f"gcd({v}, {n}) != 1")
    return pow(v, -1, n)


def units(n: int) -> np.ndarray:
    """All v in 1..n-1 with gcd(v, n) = 1."""
    v = np.arange(1, n, dtype=np.int64)
    return v[np.gcd(v, n) == 1]


def prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and prime_factors(n) == [n]
