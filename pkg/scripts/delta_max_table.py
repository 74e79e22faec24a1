"""Best BCH window over all multipliers, next to the closed-form lemma window.

    python3 scripts/delta_max_table.py --m 3 5 7 9 --workers 1
"""

import argparse
import time
from dataclasses import dataclass, field

from tcw.bounds import WrongResidueClass, delta_max, lemma_parameters
from tcw.codes import FAMILIES, pair_set


@dataclass
class Config:
    ms: list[int] = field(default_factory=lambda: [3, 5, 7, 9])
    pairs: list[tuple[int, int]] = field(default_factory=lambda: list(FAMILIES))
    workers: int = 1


def lemma_delta(pair, m):
    try:
        return lemma_parameters(pair, m)[1]
    except WrongResidueClass:
        return None


def main(cfg: Config) -> None:
    print(f"{'pair':>6} {'m':>3} {'delta_max':>9} {'v':>8} {'start':>8} {'lemma':>6} {'secs':>6}")
    for pair in cfg.pairs:
        for m in cfg.ms:
            t0 = time.perf_counter()
            rep = delta_max(pair_set(*pair, 3, m), workers=cfg.workers)
            lem = lemma_delta(pair, m)
            print(f"{str(pair):>6} {m:>3} {rep.bch_delta:>9} {rep.v:>8} {rep.window_start:>8} "
                  f"{'-' if lem is None else lem:>6} {time.perf_counter() - t0:>6.2f}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--m", type=int, nargs="+", default=[3, 5, 7, 9])
    p.add_argument("--workers", type=int, default=1)
    a = p.parse_args()
    main(Config(ms=a.m, workers=a.workers))
