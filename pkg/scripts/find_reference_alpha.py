"""Search the primitive elements of GF(27) for one reproducing the published m=3 generators.

For each exponent t coprime to 26 the field is rebuilt with alpha^t as its
primitive element; all four codes and their duals are compared against
tests/golden/generators_m3.json.
"""

import json
from pathlib import Path

from tcw.codes import FAMILIES, build_code, dual_code
from tcw.gf import build_field, primitive_exponents

GOLDEN = Path(__file__).resolve().parents[1] / "tests" / "golden" / "generators_m3.json"


def matches(spec, gold):
    out = {}
    for pair in FAMILIES:
        c = build_code(*pair, q=3, m=3, spec=spec)
        for code in (c, dual_code(c)):
            out[code.label()] = str(code.generator) == gold[code.label()]
    return out


if __name__ == "__main__":
    gold = json.loads(GOLDEN.read_text())
    base = build_field(3, 3)
    for t in primitive_exponents(3, 3):
        spec = base.with_alpha(t)
        hits = matches(spec, gold)
        print(f"t={t:2d} modulus={spec.modulus.to_csv():10s} matched {sum(hits.values())}/8")
