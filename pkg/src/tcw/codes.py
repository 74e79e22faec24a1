"""The cyclic codes C_(i1,i2,q,m) with defining sets built from q-weight classes mod 4."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .gf import DEFAULT_MODULI, FieldSpec, build_field, min_poly_product
from .poly import Poly
from .residues import coset_leaders, is_coset_closed, mod_inverse, q_weights

SCHEMA = "v1"

FAMILIES = ((0, 3), (1, 2), (0, 1), (2, 3))
PARTNER = {(0, 3): (1, 2), (1, 2): (0, 3), (0, 1): (2, 3), (2, 3): (0, 1)}

# Modulus of GF(27) whose root reproduces the published m=3 generator polynomials
# (scripts/find_reference_alpha.py: alpha, alpha^3, alpha^9 for the default modulus).
REFERENCE_MODULUS_3_3 = DEFAULT_MODULI[(3, 3)]


class SameClass(ValueError):
    pass


class EvenM(ValueError):
    pass


class UnsupportedPair(ValueError):
    pass


@dataclass(frozen=True)
class DefiningSet:
    n: int
    q: int
    members: tuple[int, ...]
    label: tuple[int, ...] | None = None

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, j: int) -> bool:
        return bool(self.mask[j % self.n])

    @cached_property
    def mask(self) -> np.ndarray:
        out = np.zeros(self.n, dtype=bool)
        out[list(self.members)] = True
        return out

    @cached_property
    def leaders(self) -> list[int]:
        return coset_leaders(self.members, self.q, self.n)

    def is_closed(self) -> bool:
        return is_coset_closed(self.members, self.q, self.n)

    def complement(self) -> DefiningSet:
        return DefiningSet(self.n, self.q, tuple(np.flatnonzero(~self.mask).tolist()))

    def negated(self) -> DefiningSet:
        return self.scaled(-1)

    def scaled(self, v: int) -> DefiningSet:
        arr = np.asarray(self.members, dtype=np.int64) * (v % self.n) % self.n
        return DefiningSet(self.n, self.q, tuple(np.sort(arr).tolist()))

    def union(self, other: DefiningSet) -> DefiningSet:
        return DefiningSet(self.n, self.q, tuple(sorted(set(self.members) | set(other.members))))


def _class_mask(i: int, q: int, m: int) -> np.ndarray:
    w = q_weights(q, m)
    mask = w % 4 == i
    mask[0] = False
    return mask


def weight_class_set(i: int, q: int, m: int) -> DefiningSet:
    """{1 <= j <= n-1 : w_q(j) = i mod 4}."""
    if i not in range(4):
        raise ValueError(f"class {i} not in 0..3")
    n = q**m - 1
    members = np.flatnonzero(_class_mask(i, q, m))
    return DefiningSet(n, q, tuple(members.tolist()), (i,))


def pair_set(i1: int, i2: int, q: int, m: int) -> DefiningSet:
    if i1 == i2:
        raise SameClass(f"classes must differ, got ({i1}, {i2})")
    for i in (i1, i2):
        if i not in range(4):
            raise ValueError(f"class {i} not in 0..3")
    n = q**m - 1
    w = q_weights(q, m) % 4
    mask = (w == i1) | (w == i2)
    mask[0] = False
    return DefiningSet(n, q, tuple(np.flatnonzero(mask).tolist()), (i1, i2))


def class_sizes(q: int, m: int) -> list[int]:
    """|T_0|, ..., |T_3| by enumeration (no tuples materialised)."""
    w = q_weights(q, m)[1:] % 4
    return np.bincount(w, minlength=4).tolist()


def ti_cardinality_closed_form(i: int, m: int) -> int:
    """Closed-form |T_i| for ternary codes with odd m."""
    if m % 2 == 0 or m < 3:
        raise EvenM(f"closed form needs odd m >= 3, got {m}")
    base = (3**m - 3) // 4
    bumped = 1 if m % 4 == 1 else 3
    return base + (i == bumped)


def code_dimension(i1: int, i2: int, q: int, m: int) -> int:
    """n - |T_(i1,i2)| without building a generator polynomial."""
    if i1 == i2:
        raise SameClass(f"classes must differ, got ({i1}, {i2})")
    sizes = class_sizes(q, m)
    return q**m - 1 - sizes[i1] - sizes[i2]


def theorem_dimension(pair: tuple[int, int], m: int, dual: bool = False) -> int:
    """Dimension predicted for the four studied ternary families (odd m)."""
    if m % 2 == 0:
        raise EvenM(f"dimension formulas need odd m, got {m}")
    if pair not in PARTNER:
        raise UnsupportedPair(pair)
    n = 3**m - 1
    # (0,3) and (2,3) have k = n/2 when m = 3 mod 4; (1,2) and (0,1) swap
    half = (m % 4 == 3) == (pair in ((0, 3), (2, 3)))
    k = n // 2 if half else (n + 2) // 2
    return n - k if dual else k


@dataclass(frozen=True, eq=False)
class CyclicCode:
    field: FieldSpec = field(repr=False)
    defining_set: DefiningSet
    generator: Poly
    pair: tuple[int, int] | None = None
    kind: str = "primal"  # primal | dual | complement | custom

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def m(self) -> int:
        return self.field.m

    @property
    def n(self) -> int:
        return self.field.order

    @property
    def k(self) -> int:
        return self.n - self.generator.degree

    @property
    def params(self) -> tuple[int, int]:
        return self.n, self.k

    @property
    def warnings(self) -> list[str]:
        out = []
        if self.m % 2 == 0:
            out.append("outside paper theorems (even m)")
        if self.pair is not None and self.pair not in PARTNER:
            out.append(f"outside paper theorems (pair {self.pair})")
        if self.q != 3:
            out.append(f"outside paper theorems (q={self.q})")
        return out

    @cached_property
    def check_polynomial(self) -> Poly:
        h, r = divmod(Poly.x_n_minus_1(self.n, self.q), self.generator)
        assert r.is_zero
        return h

    def generator_matrix(self) -> np.ndarray:
        """k x n matrix whose rows are the shifts x^i g(x), i < k."""
        g = self.generator.to_array()
        G = np.zeros((self.k, self.n), dtype=np.int64)
        for i in range(self.k):
            G[i, i : i + len(g)] = g
        return G

    def label(self) -> str:
        if self.pair is None:
            return f"C(q={self.q}, m={self.m})"
        i1, i2 = self.pair
        base = f"C({i1},{i2},{self.q},{self.m})"
        return {"dual": base + "^perp", "complement": base + "^c"}.get(self.kind, base)

    def to_json(self) -> dict:
        i1, i2 = self.pair if self.pair is not None else (None, None)
        return {
            "schema": SCHEMA,
            "kind": self.kind,
            "q": self.q,
            "m": self.m,
            "n": self.n,
            "i1": i1,
            "i2": i2,
            "k": self.k,
            "defining_set_leaders": self.defining_set.leaders,
            "generator": str(self.generator),
            "modulus": self.field.modulus.to_csv(),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def code_from_defining_set(
    spec: FieldSpec, T: DefiningSet, pair=None, kind: str = "custom"
) -> CyclicCode:
    """Generator = product of minimal polynomials of alpha^j over coset leaders j of T."""
    if T.n != spec.order or T.q != spec.q:
        raise ValueError("defining set does not match the field")
    if not T.is_closed():
        raise ValueError("defining set is not closed under multiplication by q")
    g = min_poly_product(spec, T.leaders)
    if g.degree != len(T):
        raise AssertionError(f"deg g = {g.degree} but |T| = {len(T)}")
    return CyclicCode(spec, T, g, pair, kind)


def build_code(i1: int, i2: int, q: int = 3, m: int = 3, spec: FieldSpec | None = None) -> CyclicCode:
    if spec is None:
        spec = default_field(q, m)
    if (spec.q, spec.m) != (q, m):
        raise ValueError(f"field is GF({spec.q}^{spec.m}), expected GF({q}^{m})")
    T = pair_set(i1, i2, q, m)
    return code_from_defining_set(spec, T, (i1, i2), "primal")


def default_field(q: int, m: int) -> FieldSpec:
    return build_field(q, m)


def dual_code(c: CyclicCode) -> CyclicCode:
    """Dual: generator is the monic reciprocal of h = (x^n - 1)/g; defining set -(Z_n minus T)."""
    g_dual = c.check_polynomial.reciprocal()
    T_dual = c.defining_set.complement().negated()
    kind = {"primal": "dual", "dual": "primal"}.get(c.kind, "custom")
    out = CyclicCode(c.field, T_dual, g_dual, c.pair, kind)
    assert g_dual.degree == len(T_dual) == c.k
    return out


def complement_code(i1: int, i2: int, q: int = 3, m: int = 3, spec: FieldSpec | None = None) -> CyclicCode:
    """Generator (x - 1) * g_partner, where partner pairs are (0,3)<->(1,2) and (0,1)<->(2,3)."""
    if (i1, i2) not in PARTNER:
        raise UnsupportedPair(f"complement defined for {sorted(PARTNER)}, got {(i1, i2)}")
    partner = build_code(*PARTNER[(i1, i2)], q=q, m=m, spec=spec)
    g = Poly([-1, 1], q) * partner.generator
    T = partner.defining_set.union(DefiningSet(partner.n, q, (0,)))
    return CyclicCode(partner.field, T, g, (i1, i2), "complement")


def multiplier_code(c: CyclicCode, v: int) -> CyclicCode:
    """Code with defining set v*T; permutation-equivalent to c when gcd(v, n) = 1."""
    mod_inverse(v, c.n)
    return code_from_defining_set(c.field, c.defining_set.scaled(v), c.pair, "custom")


def is_codeword(c: CyclicCode, w: Poly) -> bool:
    """w(alpha^j) = 0 for every coset leader j of the defining set."""
    if w.degree >= c.n:
        raise ValueError("word longer than the code length")
    if w.is_zero:
        return True
    return bool(np.all(syndrome(c, w.support, [w[i] for i in w.support]) == 0))


def syndrome(c: CyclicCode, support, coeffs) -> np.ndarray:
    """Coordinates of (w(alpha^j))_j over the defining-set leaders, shape (L, m)."""
    F = c.field
    leaders = np.asarray(c.defining_set.leaders, dtype=np.int64)
    pos = np.asarray(support, dtype=np.int64)
    vals = np.asarray(coeffs, dtype=np.int64)
    idx = leaders[:, None] * pos[None, :] % F.order
    return (F.exp_vecs[idx].astype(np.int64) * vals[None, :, None]).sum(axis=1) % F.q


def code_from_json(doc: dict, spec: FieldSpec | None = None) -> CyclicCode:
    if doc.get("schema") != SCHEMA:
        raise ValueError(f"unsupported schema {doc.get('schema')!r}")
    q, m = doc["q"], doc["m"]
    if spec is None:
        spec = build_field(q, m, doc["modulus"])
    kind = doc.get("kind", "primal")
    i1, i2 = doc["i1"], doc["i2"]
    if kind == "complement":
        return complement_code(i1, i2, q, m, spec)
    c = build_code(i1, i2, q, m, spec)
    return dual_code(c) if kind == "dual" else c
