"""GF(q^m) for prime q with exponent/log tables.

Elements are handled in two interchangeable forms:

* exponent index ``e`` in ``0..q^m-2`` meaning ``alpha^e`` (``None`` is zero);
* integer code ``sum(c_i * q^i)`` of the coordinate vector in the basis
  ``1, x, ..., x^(m-1)`` of ``GF(q)[x]/(modulus)``.

The public arithmetic (:meth:`FieldSpec.mul`, ``add``, ``inv``, ``pow``) works on
exponent indices; ``exp_code``/``log_table`` convert between the two.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from typing import Optional

import numpy as np

from .poly import Poly, product
from .residues import cyclotomic_coset, is_prime, prime_factors

FieldElement = Optional[int]
ZERO = None

# Smallest primitive monic polynomials under the order "value of f at x = q",
# i.e. lexicographic on (c_{m-1}, ..., c_0). Ascending coefficient lists.
# Regenerate with scripts/default_moduli.py.
DEFAULT_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (3, 2): (2, 1, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 1, 0, 0, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (3, 6): (2, 1, 0, 0, 0, 0, 1),
    (3, 7): (1, 2, 1, 0, 0, 0, 0, 1),
    (3, 8): (2, 0, 0, 1, 0, 0, 0, 0, 1),
    (3, 9): (1, 0, 1, 2, 0, 0, 0, 0, 0, 1),
    (3, 10): (2, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1),
    (3, 11): (1, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (3, 12): (2, 2, 2, 1, 2, 0, 0, 0, 0, 0, 0, 0, 1),
    (3, 13): (1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (5, 2): (2, 1, 1),
    (5, 3): (2, 3, 0, 1),
    (5, 4): (2, 2, 1, 0, 1),
    (5, 5): (2, 4, 0, 0, 0, 1),
    (5, 6): (2, 1, 0, 0, 0, 0, 1),
}


class NonPrimeQ(ValueError):
    pass


class ReducibleModulus(ValueError):
    pass


class NonPrimitiveModulusWithoutFallback(ValueError):
    pass


class FieldTooLarge(ValueError):
    pass


def is_irreducible(f: Poly) -> bool:
    """Rabin-style test: no roots, and gcd(f, x^(q^i) - x) = 1 for 1 <= i <= deg/2."""
    q, m = f.q, f.degree
    if m < 1:
        return False
    if m == 1:
        return True
    if any(f(a) == 0 for a in range(q)):
        return False
    x = Poly.monomial(1, q)
    xp = x
    for _ in range(1, m // 2 + 1):
        xp = xp.pow_mod(q, f)
        if poly_gcd(f, xp - x).degree > 0:
            return False
    return True


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def x_is_primitive(f: Poly) -> bool:
    """x has order exactly q^m - 1 modulo f (f assumed irreducible)."""
    N = f.q**f.degree - 1
    x = Poly.monomial(1, f.q)
    if N == 1:
        return (x % f) == Poly.one(f.q)
    if x.pow_mod(N, f) != Poly.one(f.q):
        return False
    return all(x.pow_mod(N // p, f) != Poly.one(f.q) for p in prime_factors(N))


def find_default_modulus(q: int, m: int) -> Poly:
    """Search monic degree-m polynomials in increasing order for the first primitive one."""
    for tail in range(1, q**m):
        coeffs = []
        t = tail
        for _ in range(m):
            t, d = divmod(t, q)
            coeffs.append(d)
        f = Poly(coeffs + [1], q)
        if coeffs[0] and is_irreducible(f) and x_is_primitive(f):
            return f
    raise RuntimeError(f"no primitive polynomial found for GF({q}^{m})")


def _matpow(M: np.ndarray, e: int, q: int) -> np.ndarray:
    R = np.eye(M.shape[0], dtype=np.int64)
    while e:
        if e & 1:
            R = R @ M % q
        M = M @ M % q
        e >>= 1
    return R


@dataclass(frozen=True, eq=False)
class FieldSpec:
    q: int
    m: int
    modulus: Poly
    primitive: Poly  # alpha as a residue modulo `modulus`; x unless x is not primitive
    exp_vecs: np.ndarray = field(repr=False)  # (N, m) coords of alpha^e
    exp_code: np.ndarray = field(repr=False)  # (N,) integer codes of alpha^e
    log_table: np.ndarray = field(repr=False)  # (q^m,) code -> e, -1 at 0

    @property
    def order(self) -> int:
        """Size of the multiplicative group, q^m - 1."""
        return self.q**self.m - 1

    @property
    def size(self) -> int:
        return self.q**self.m

    # element conversions

    def to_vec(self, a) -> np.ndarray:
        if a is None:
            return np.zeros(self.m, dtype=np.int64)
        return self.exp_vecs[a % self.order].astype(np.int64)

    def from_vec(self, vec) -> int | None:
        code = int(np.dot(np.asarray(vec, dtype=np.int64) % self.q, self._weights))
        e = int(self.log_table[code])
        return None if e < 0 else e

    @property
    def _weights(self) -> np.ndarray:
        return self.q ** np.arange(self.m, dtype=np.int64)

    def from_base(self, c: int) -> int | None:
        """Exponent of the base-field element c (as an element of the extension)."""
        return self.from_vec([c % self.q] + [0] * (self.m - 1))

    def to_base(self, a) -> int:
        """Inverse of from_base; fails when a is outside GF(q)."""
        v = self.to_vec(a)
        if np.any(v[1:]):
            raise ValueError(f"alpha^{a} is not in GF({self.q})")
        return int(v[0])

    # arithmetic on exponent indices

    def mul(self, a, b):
        if a is None or b is None:
            return None
        return (a + b) % self.order

    def add(self, a, b):
        if a is None:
            return b
        if b is None:
            return a
        return self.from_vec(self.to_vec(a) + self.to_vec(b))

    def neg(self, a):
        if a is None:
            return None
        return self.from_vec(-self.to_vec(a))

    def inv(self, a):
        if a is None:
            raise ZeroDivisionError("inverse of zero in GF(q^m)")
        return (-a) % self.order

    def pow(self, a, k: int):
        if a is None:
            if k <= 0:
                raise ZeroDivisionError("non-positive power of zero")
            return None
        return a * k % self.order

    @property
    def one(self) -> int:
        return 0

    @property
    def alpha(self) -> int:
        return 1

    def minimal_polynomial(self, j: int) -> Poly:
        """Minimal polynomial of alpha^j over GF(q): product over the coset of j of (x - alpha^i)."""
        coset = cyclotomic_coset(j % self.order, self.q, self.order)
        # coefficients as exponent indices (None = zero), ascending degree
        coeffs: list = [0]
        for i in coset.members:
            root = self.neg(i)
            nxt: list = [None] * (len(coeffs) + 1)
            for k, c in enumerate(coeffs):
                nxt[k + 1] = self.add(nxt[k + 1], c)
                nxt[k] = self.add(nxt[k], self.mul(c, root))
            coeffs = nxt
        out = Poly([0 if c is None else self.to_base(c) for c in coeffs], self.q)
        assert out.degree == coset.size
        return out

    def eval_poly(self, p: Poly, a) -> int | None:
        """p(alpha^a) with p over GF(q); returns an exponent index or None."""
        if a is None:
            return self.from_base(p[0])
        acc = np.zeros(self.m, dtype=np.int64)
        N = self.order
        for k, c in enumerate(p.coeffs):
            if c:
                acc += c * self.exp_vecs[a * k % N]
        return self.from_vec(acc % self.q)

    def with_alpha(self, t: int) -> FieldSpec:
        """Same field with alpha replaced by alpha^t (gcd(t, q^m-1) = 1), modulus = its minimal polynomial."""
        return build_field(self.q, self.m, self.minimal_polynomial(t))


def _tables(q: int, m: int, f: Poly, block: int = 4096) -> tuple[np.ndarray, np.ndarray]:
    N = q**m - 1
    # M[i] = coords of x * x^i mod f; row-vector a times M gives x*a
    M = np.zeros((m, m), dtype=np.int64)
    for i in range(m - 1):
        M[i, i + 1] = 1
    M[m - 1] = [(-c) % q for c in f.coeffs[:m]]
    B = min(block, N)
    vecs = np.zeros((N, m), dtype=np.int64)
    v = np.zeros(m, dtype=np.int64)
    v[0] = 1
    for e in range(B):
        vecs[e] = v
        v = v @ M % q
    step = _matpow(M, B, q)
    for s in range(B, N, B):
        t = min(B, N - s)
        vecs[s : s + t] = vecs[s - B : s - B + t] @ step % q
    codes = vecs @ (q ** np.arange(m, dtype=np.int64))
    return vecs.astype(np.uint8), codes


@lru_cache(maxsize=32)
def _build(q: int, m: int, coeffs: tuple[int, ...], allow_search: bool) -> FieldSpec:
    f = Poly(coeffs, q)
    if f.degree != m or f.lead != 1:
        raise ReducibleModulus(f"modulus must be monic of degree {m}, got {f}")
    if not is_irreducible(f):
        raise ReducibleModulus(f"{f} is reducible over GF({q})")
    N = q**m - 1
    x = Poly.monomial(1, q) % f
    if x_is_primitive(f):
        primitive = x
        vecs, codes = _tables(q, m, f)
    elif allow_search:
        primitive, vecs, codes = _tables_from_element(q, m, f)
    else:
        raise NonPrimitiveModulusWithoutFallback(f"x is not primitive modulo {f}")
    log = np.full(q**m, -1, dtype=np.int64)
    log[codes] = np.arange(N)
    if np.count_nonzero(log >= 0) != N:
        raise AssertionError("exponent table does not enumerate the multiplicative group")
    return FieldSpec(q, m, f, primitive, vecs, codes, log)


def _tables_from_element(q: int, m: int, f: Poly) -> tuple[Poly, np.ndarray, np.ndarray]:
    """Tables for the smallest-code primitive element when x itself is not primitive."""
    N = q**m - 1
    one = Poly.one(q)
    for code in range(2, q**m):
        digits, t = [], code
        for _ in range(m):
            t, d = divmod(t, q)
            digits.append(d)
        g = Poly(digits, q)
        if g.degree < 1:
            continue
        if g.pow_mod(N, f) == one and all(g.pow_mod(N // p, f) != one for p in prime_factors(N)):
            vecs = np.zeros((N, m), dtype=np.int64)
            cur = one
            for e in range(N):
                vecs[e] = cur.to_array(m)
                cur = (cur * g) % f
            codes = vecs @ (q ** np.arange(m, dtype=np.int64))
            return g, vecs.astype(np.uint8), codes
    raise AssertionError("no primitive element found")


def build_field(q: int, m: int, modulus=None, allow_search: bool = True) -> FieldSpec:
    """Construct GF(q^m).

    ``modulus`` may be a :class:`Poly`, an ascending coefficient sequence, or a
    comma-separated string such as ``"1,2,0,1"`` (x^3 + 2x + 1). When omitted the
    built-in default for (q, m) is used, falling back to a search.
    """
    if not is_prime(q):
        raise NonPrimeQ(f"q={q} is not prime")
    if m < 1:
        raise ValueError("extension degree must be positive")
    if q**m - 1 > 2**31:
        raise FieldTooLarge(f"q^m - 1 = {q**m - 1} exceeds 2^31")
    if modulus is None:
        if m == 1:
            N = q - 1
            g = next(a for a in range(1, q) if all(pow(a, N // p, q) != 1 for p in prime_factors(N)))
            coeffs = ((-g) % q, 1)
        elif (q, m) in DEFAULT_MODULI:
            coeffs = DEFAULT_MODULI[(q, m)]
        else:
            coeffs = find_default_modulus(q, m).coeffs
    elif isinstance(modulus, Poly):
        coeffs = modulus.coeffs
    elif isinstance(modulus, str):
        coeffs = Poly.from_csv(modulus, q).coeffs
    else:
        coeffs = Poly(modulus, q).coeffs
    return _build(q, m, tuple(coeffs), allow_search)


def primitive_exponents(q: int, m: int) -> list[int]:
    """Exponents t with alpha^t primitive, i.e. gcd(t, q^m - 1) = 1."""
    N = q**m - 1
    return [t for t in range(1, N) if gcd(t, N) == 1]


def minimal_polynomial(spec: FieldSpec, j: int) -> Poly:
    return spec.minimal_polynomial(j)


def min_poly_product(spec: FieldSpec, leaders) -> Poly:
    return product((spec.minimal_polynomial(j) for j in leaders), spec.q)
