"""[n, k, d] of C_(i1,i2,5,3) and its dual for every pair of classes, by bounded-weight search."""

import argparse
import time
from dataclasses import dataclass

from tcw.codes import build_code, dual_code
from tcw.distance import bounded_weight_search
from tcw.published import PARAMS_Q5_M3


@dataclass
class Config:
    q: int = 5
    m: int = 3
    w_max: int = 4


def main(cfg: Config) -> int:
    mismatches = 0
    for i1 in range(4):
        for i2 in range(i1 + 1, 4):
            c = build_code(i1, i2, q=cfg.q, m=cfg.m)
            for which, code in enumerate((c, dual_code(c))):
                t0 = time.perf_counter()
                rep = bounded_weight_search(code, cfg.w_max)
                d = rep.exact if rep.exact is not None else f">={rep.lower}"
                ref = PARAMS_Q5_M3.get((i1, i2)) or PARAMS_Q5_M3.get((i2, i1))
                tag = ""
                if ref is not None and (cfg.q, cfg.m) == (5, 3):
                    ok = (code.n, code.k, rep.exact) == ref[which]
                    mismatches += not ok
                    tag = "matches" if ok else f"expected {list(ref[which])}"
                print(f"{code.label():<16} [{code.n}, {code.k}, {d}]  {time.perf_counter() - t0:5.2f}s  {tag}")
    return mismatches


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--q", type=int, default=5)
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--w-max", type=int, default=4)
    a = p.parse_args()
    raise SystemExit(main(Config(a.q, a.m, a.w_max)) != 0)
