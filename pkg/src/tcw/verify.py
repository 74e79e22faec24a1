"""Reproduction ledger: recompute every published number and record pass/fail."""

from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass, field

from . import published
from .bounds import delta_max, lemma_parameters, lemma_window_check, theorem_bound, LEMMAS
from .codes import (
    REFERENCE_MODULUS_3_3,
    FAMILIES,
    PARTNER,
    build_code,
    class_sizes,
    code_dimension,
    dual_code,
    pair_set,
    theorem_dimension,
    ti_cardinality_closed_form,
)
from .distance import bounded_weight_search, exhaustive_min_distance
from .gf import build_field
from .poly import Poly


@dataclass
class Entry:
    claim: str
    source: str
    expected: object
    computed: object
    passed: bool
    runtime: float


@dataclass
class VerificationLedger:
    entries: list[Entry] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def record(self, claim: str, source: str, expected, fn) -> Entry:
        t0 = time.perf_counter()
        try:
            computed = fn()
            ok = computed == expected
        except Exception as exc:  # a failing computation is a failed claim
            computed, ok = f"error: {type(exc).__name__}: {exc}", False
        entry = Entry(claim, source, _plain(expected), _plain(computed), ok, time.perf_counter() - t0)
        self.entries.append(entry)
        return entry

    def failures(self) -> list[Entry]:
        return [e for e in self.entries if not e.passed]

    def to_json(self) -> dict:
        return {"schema": "v1", "passed": self.passed, "entries": [asdict(e) for e in self.entries]}

    def table(self) -> str:
        w = max((len(e.claim) for e in self.entries), default=5)
        lines = []
        for e in self.entries:
            mark = "PASS" if e.passed else "FAIL"
            lines.append(f"{mark}  {e.claim:<{w}}  {e.runtime:7.2f}s  expected={e.expected}  computed={e.computed}  [{e.source}]")
        lines.append(f"{sum(e.passed for e in self.entries)}/{len(self.entries)} claims reproduced")
        return "\n".join(lines)


def _plain(x):
    if isinstance(x, tuple):
        return [_plain(v) for v in x]
    if isinstance(x, list):
        return [_plain(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    return x


def _tag(pair) -> str:
    return f"{pair[0]}{pair[1]}"


def _field_arithmetic_check(spec, seed: int, trials: int = 1000) -> bool:
    """Table arithmetic against schoolbook polynomial arithmetic modulo the modulus."""
    rng = random.Random(seed)
    q, m, f = spec.q, spec.m, spec.modulus
    x = Poly.monomial(1, q)
    for _ in range(trials):
        a, b = rng.randrange(spec.order), rng.randrange(spec.order)
        pa, pb = x.pow_mod(a, f), x.pow_mod(b, f)
        prod = (pa * pb) % f
        total = (pa + pb) % f
        if prod != Poly.from_array(spec.to_vec(spec.mul(a, b)), q):
            return False
        if total != Poly.from_array(spec.to_vec(spec.add(a, b)), q):
            return False
    return True


def run(quick: bool = False, modulus=None, seed: int = 0, log=None) -> VerificationLedger:
    """Recompute all published claims; ``quick`` skips the m=9 delta_max and weight-4 q=5 searches."""
    led = VerificationLedger()

    def rec(*args):
        e = led.record(*args)
        if log is not None:
            log(f"{'PASS' if e.passed else 'FAIL'} {e.claim} ({e.runtime:.2f}s)")

    # field model for GF(27)
    mod = REFERENCE_MODULUS_3_3 if modulus is None else modulus
    spec_box = {}

    def make_field():
        spec_box["F"] = build_field(3, 3, mod, allow_search=False)
        return spec_box["F"].modulus.to_csv()

    rec("field-gf27", "primitive element of GF(27)", Poly(REFERENCE_MODULUS_3_3, 3).to_csv(), make_field)
    F = spec_box.get("F")
    rec("field-gf27-arith", "table arithmetic vs polynomial arithmetic (seeded)", True,
        lambda: _field_arithmetic_check(spec_box["F"], seed))

    # m = 3 generators and parameters
    for pair in FAMILIES:
        box = {}

        def code(pair=pair, box=box):
            if F is None:
                raise RuntimeError("GF(27) construction failed")
            if "c" not in box:
                box["c"] = build_code(*pair, q=3, m=3, spec=F)
                box["d"] = dual_code(box["c"])
            return box["c"], box["d"]

        rec(f"gen-{_tag(pair)}-m3", f"C({pair[0]},{pair[1]}) m=3 example generator",
            published.GENERATORS_M3[pair], lambda code=code: str(code()[0].generator))
        rec(f"gen-{_tag(pair)}-dual-m3", f"C({pair[0]},{pair[1]}) dual m=3 example generator",
            published.DUAL_GENERATORS_M3[pair], lambda code=code: str(code()[1].generator))
        exp_c, exp_d = published.PARAMS_M3[pair]
        rec(f"params-{_tag(pair)}-m3", f"C({pair[0]},{pair[1]}) m=3 example [n,k,d]", exp_c,
            lambda code=code: (*code()[0].params, exhaustive_min_distance(code()[0]).exact))
        rec(f"params-{_tag(pair)}-dual-m3", f"C({pair[0]},{pair[1]}) dual m=3 example [n,k,d]", exp_d,
            lambda code=code: (*code()[1].params, exhaustive_min_distance(code()[1]).exact))

    # class sizes and dimensions
    for m in (3, 5, 7, 9, 11, 13):
        rec(f"class-sizes-m{m}", "closed-form |T_i| for odd m",
            [ti_cardinality_closed_form(i, m) for i in range(4)], lambda m=m: class_sizes(3, m))
        rec(f"dims-m{m}", "dimension theorems for the four families",
            [theorem_dimension(p, m) for p in FAMILIES],
            lambda m=m: [code_dimension(*p, 3, m) for p in FAMILIES])

    # multiplier windows
    for (family, cls), (_, _, _, m_min) in LEMMAS.items():
        for m in range(m_min, 14, 4):
            v, delta, side = lemma_parameters(family, m)
            rec(f"lemma-{_tag(family)}-m{m}", f"window lemma for {family}, m = {cls} mod 4",
                (v, delta - 1), lambda family=family, m=m: (lambda r: (r.v, r.run_length))(lemma_window_check(family, m)))

    # delta_max table
    for m, expected in published.DELTA_MAX_03.items():
        if quick and m == 9:
            continue
        rec(f"dmax-03-m{m}", "delta_max table for C(0,3)", expected,
            lambda m=m: delta_max(pair_set(0, 3, 3, m)).bch_delta)

    # closed-form bounds agree with the lemma windows they come from
    for pair in FAMILIES:
        for m in range(5, 14, 2):
            rec(f"bound-{_tag(pair)}-m{m}", "distance bound equals lemma delta",
                lemma_parameters(pair, m)[1], lambda pair=pair, m=m: theorem_bound(pair, m))
            rec(f"bound-{_tag(pair)}-dual-m{m}", "dual distance bound from the complement code",
                lemma_parameters(PARTNER[pair], m)[1] + 1, lambda pair=pair, m=m: theorem_bound(pair, m, dual=True))

    # q = 5 generalisation
    for pair, (exp_c, exp_d) in published.PARAMS_Q5_M3.items():
        box = {}

        def code5(pair=pair, box=box):
            if "c" not in box:
                box["c"] = build_code(*pair, q=5, m=3)
                box["d"] = dual_code(box["c"])
            return box["c"], box["d"]

        for which, exp in ((0, exp_c), (1, exp_d)):
            if quick and exp[2] == 4:
                continue
            suffix = "-dual" if which else ""
            rec(f"q5-{_tag(pair)}{suffix}-m3", f"C({pair[0]},{pair[1]},5,3){' dual' if which else ''} [n,k,d]", exp,
                lambda code5=code5, which=which: (lambda c: (*c.params, bounded_weight_search(c, 4).exact))(code5()[which]))
    return led
