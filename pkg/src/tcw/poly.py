"""Dense polynomials over the prime field GF(q).

Coefficients are stored in ascending degree order with no trailing zeros.
Printing follows descending powers with explicit coefficients, e.g.
``x^13 + 2x^11 + x^10 + 1``; :meth:`Poly.parse` reads the same format back.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np


class DivisionByZeroPoly(ZeroDivisionError):
    pass


def _trim(coeffs) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class Poly:
    coeffs: tuple[int, ...]
    q: int

    def __init__(self, coeffs, q: int):
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "coeffs", _trim(int(c) % q for c in coeffs))

    # constructors

    @classmethod
    def zero(cls, q: int) -> Poly:
        return cls((), q)

    @classmethod
    def one(cls, q: int) -> Poly:
        return cls((1,), q)

    @classmethod
    def monomial(cls, k: int, q: int, c: int = 1) -> Poly:
        return cls([0] * k + [c], q)

    @classmethod
    def x_n_minus_1(cls, n: int, q: int) -> Poly:
        return cls([q - 1] + [0] * (n - 1) + [1], q)

    @classmethod
    def from_array(cls, arr: np.ndarray, q: int) -> Poly:
        return cls(np.asarray(arr, dtype=np.int64).tolist(), q)

    # basic properties

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def weight(self) -> int:
        return sum(1 for c in self.coeffs if c)

    @property
    def support(self) -> list[int]:
        return [i for i, c in enumerate(self.coeffs) if c]

    def to_array(self, length: int | None = None) -> np.ndarray:
        n = len(self.coeffs) if length is None else length
        out = np.zeros(n, dtype=np.int64)
        out[: len(self.coeffs)] = self.coeffs
        return out

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    # arithmetic

    def _same_field(self, other: Poly) -> None:
        if self.q != other.q:
            raise ValueError(f"operands over different fields: GF({self.q}) vs GF({other.q})")

    def __add__(self, other: Poly) -> Poly:
        self._same_field(other)
        n = max(len(self), len(other))
        return Poly.from_array(self.to_array(n) + other.to_array(n), self.q)

    def __neg__(self) -> Poly:
        return Poly([-c for c in self.coeffs], self.q)

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly | int) -> Poly:
        if isinstance(other, int):
            return Poly([c * other for c in self.coeffs], self.q)
        self._same_field(other)
        if self.is_zero or other.is_zero:
            return Poly.zero(self.q)
        return Poly.from_array(np.convolve(self.to_array(), other.to_array()) % self.q, self.q)

    __rmul__ = __mul__

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        self._same_field(other)
        if other.is_zero:
            raise DivisionByZeroPoly("division by the zero polynomial")
        q = self.q
        rem = self.to_array()
        dd = other.degree
        if self.degree < dd:
            return Poly.zero(q), self
        divisor = other.to_array()
        inv_lead = pow(other.lead, -1, q)
        quot = np.zeros(self.degree - dd + 1, dtype=np.int64)
        for k in range(self.degree - dd, -1, -1):
            c = rem[k + dd] * inv_lead % q
            if c:
                quot[k] = c
                rem[k : k + dd + 1] = (rem[k : k + dd + 1] - c * divisor) % q
        return Poly.from_array(quot, q), Poly.from_array(rem[:dd], q)

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def divides(self, other: Poly) -> bool:
        return (other % self).is_zero

    def monic(self) -> Poly:
        if self.is_zero:
            return self
        return self * pow(self.lead, -1, self.q)

    def reciprocal(self) -> Poly:
        """Coefficient reversal of the part above the lowest nonzero term, made monic."""
        nz = self.support
        if not nz:
            return self
        return Poly(self.coeffs[nz[0] :][::-1], self.q).monic()

    def shift_cyclic(self, k: int, n: int) -> Poly:
        """x^k * self mod (x^n - 1)."""
        arr = np.roll(self.to_array(n), k)
        return Poly.from_array(arr, self.q)

    def pow_mod(self, e: int, modulus: Poly) -> Poly:
        result = Poly.one(self.q)
        base = self % modulus
        while e:
            if e & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            e >>= 1
        return result

    def __call__(self, x: int) -> int:
        """Evaluate at a base-field element."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.q
        return acc

    # text format

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
                continue
            mono = "x" if k == 1 else f"x^{k}"
            terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms)

    _TERM = re.compile(r"^(\d*)(?:(x)(?:\^(\d+))?)?$")

    @classmethod
    def parse(cls, text: str, q: int) -> Poly:
        """Inverse of ``str``: accepts ``2x^3 + x + 1`` style sums of terms."""
        text = "".join(text.split())
        if text in ("", "0"):
            return cls.zero(q)
        coeffs: dict[int, int] = {}
        for term in text.split("+"):
            mt = cls._TERM.match(term)
            if not term or mt is None or (not mt.group(1) and not mt.group(2)):
                raise ValueError(f"cannot parse polynomial term {term!r}")
            c = int(mt.group(1)) if mt.group(1) else 1
            if mt.group(2):
                k = int(mt.group(3)) if mt.group(3) else 1
            else:
                k = 0
            coeffs[k] = coeffs.get(k, 0) + c
        top = max(coeffs)
        return cls([coeffs.get(k, 0) for k in range(top + 1)], q)

    def to_csv(self) -> str:
        """Ascending comma-separated coefficients (modulus exchange format)."""
        return ",".join(str(c) for c in self.coeffs)

    @classmethod
    def from_csv(cls, text: str, q: int) -> Poly:
        vals = [int(t) for t in text.split(",") if t.strip() != ""]
        for v in vals:
            if not 0 <= v < q:
                raise ValueError(f"coefficient {v} outside GF({q})")
        return cls(vals, q)


def product(polys, q: int) -> Poly:
    """Product of many polynomials, balanced to keep intermediate convolutions cheap."""
    items = [p.to_array() for p in polys]
    if not items:
        return Poly.one(q)
    if any(a.size == 0 for a in items):
        return Poly.zero(q)
    while len(items) > 1:
        nxt = []
        for i in range(0, len(items) - 1, 2):
            nxt.append(np.convolve(items[i], items[i + 1]) % q)
        if len(items) % 2:
            nxt.append(items[-1])
        items = nxt
    return Poly.from_array(items[0], q)
