"""Command-line front end.

Exit codes: 0 success, 1 computation or verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import verify
from .bounds import (
    BoundReport,
    OutOfTheoremRange,
    WrongResidueClass,
    delta_max,
    lemma_window_check,
    longest_cyclic_run,
    multiplied_set,
    theorem_bound,
)
from .codes import PARTNER, build_code, complement_code, default_field, dual_code, pair_set
from .distance import default_work_ceiling, min_distance
from .gf import build_field


@dataclass
class RunConfig:
    command: str
    q: int = 3
    m: int = 3
    pair: tuple[int, int] | None = None
    dual: bool = False
    complement: bool = False
    v: int | None = None
    strategy: str = "auto"
    w_max: int | None = None
    work_ceiling: int | None = None
    modulus: str | None = None
    json: bool = False
    out: str | None = None
    quick: bool = False
    seed: int = 0
    threads: int = 1


class UsageError(Exception):
    pass


def _pair(text: str) -> tuple[int, int]:
    try:
        a, b = (int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected i1,i2, got {text!r}")
    if a == b or not {a, b} <= {0, 1, 2, 3}:
        raise argparse.ArgumentTypeError("pair must be two distinct classes in 0..3")
    return a, b


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tcw", description="Cyclic codes from q-weight classes mod 4.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, pair_required=True):
        sp.add_argument("--q", type=int, default=3)
        sp.add_argument("--m", type=int, default=3)
        sp.add_argument("--pair", type=_pair, required=pair_required, help="classes i1,i2")
        sp.add_argument("--modulus", help="ascending coefficients c0,c1,...,cm")
        sp.add_argument("--json", action="store_true")
        sp.add_argument("--out", help="write output to PATH")

    sp = sub.add_parser("construct", help="build a code and print its generator")
    common(sp)
    sp.add_argument("--dual", action="store_true")
    sp.add_argument("--complement", action="store_true")

    sp = sub.add_parser("bound", help="window lemma check and closed-form distance bound")
    common(sp)
    sp.add_argument("--dual", action="store_true")
    sp.add_argument("--v", type=int, help="report the longest window of v*T instead")

    sp = sub.add_parser("delta-max", help="best BCH bound over all multipliers")
    common(sp)
    sp.add_argument("--dual", action="store_true")
    sp.add_argument("--threads", type=int, default=1)

    sp = sub.add_parser("distance", help="minimum distance")
    common(sp)
    sp.add_argument("--dual", action="store_true")
    sp.add_argument("--complement", action="store_true")
    sp.add_argument("--strategy", choices=["auto", "exhaustive", "bounded", "bch"], default="auto")
    sp.add_argument("--w-max", type=int)

    sp = sub.add_parser("verify-paper", help="recompute every published claim")
    sp.add_argument("--quick", action="store_true")
    sp.add_argument("--modulus", help="override the GF(27) modulus")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--out")
    return p


def parse_config(argv=None) -> RunConfig:
    parser = _parser()
    ns = parser.parse_args(argv)
    cfg = RunConfig(command=ns.command)
    for key, val in vars(ns).items():
        if key != "command" and val is not None:
            setattr(cfg, key, val)
    if cfg.dual and cfg.complement:
        parser.error("--dual and --complement are mutually exclusive")
    if cfg.complement and cfg.pair not in PARTNER:
        parser.error(f"--complement needs one of {sorted(PARTNER)}")
    if cfg.w_max is not None and cfg.w_max < 1:
        parser.error("--w-max must be positive")
    if cfg.threads < 1:
        parser.error("--threads must be positive")
    if ns.command != "verify-paper" and (cfg.q < 2 or cfg.m < 1):
        parser.error("need q >= 2 and m >= 1")
    cfg.work_ceiling = default_work_ceiling()
    return cfg


def _field(cfg: RunConfig):
    if cfg.modulus:
        return build_field(cfg.q, cfg.m, cfg.modulus)
    return default_field(cfg.q, cfg.m)


def _code(cfg: RunConfig):
    spec = _field(cfg)
    if cfg.complement:
        return complement_code(*cfg.pair, q=cfg.q, m=cfg.m, spec=spec)
    c = build_code(*cfg.pair, q=cfg.q, m=cfg.m, spec=spec)
    return dual_code(c) if cfg.dual else c


def cmd_construct(cfg: RunConfig):
    c = _code(cfg)
    if cfg.json:
        return c.to_json(), c.warnings
    lines = [
        f"{c.label()}  [{c.n}, {c.k}]",
        f"generator: {c.generator}",
        f"modulus: {c.field.modulus}",
        f"defining set leaders: {c.defining_set.leaders}",
    ]
    return "\n".join(lines), c.warnings


def cmd_bound(cfg: RunConfig):
    family = cfg.pair
    if cfg.v is not None:
        c = _code(cfg)
        a, ell = longest_cyclic_run(multiplied_set(c.defining_set, cfg.v))
        rep = BoundReport(cfg.v, a, ell, "search", family, cfg.m)
        doc = rep.to_json()
        text = f"{c.label()} v={cfg.v}: longest window starts at {a}, length {ell}, BCH bound d >= {rep.bch_delta}"
        return (doc if cfg.json else text), []
    if cfg.q != 3:
        raise UsageError("closed-form bounds are stated for q = 3 only")
    lemma_family = PARTNER[family] if cfg.dual else family
    rep = lemma_window_check(lemma_family, cfg.m)
    bound = theorem_bound(family, cfg.m, dual=cfg.dual)
    doc = rep.to_json()
    doc["theorem_bound"] = bound
    doc["dual"] = cfg.dual
    window = f"{{{rep.window_start}, ..., {rep.window_start + rep.run_length - 1}}}"
    via = f" (window of partner {lemma_family}, extended by residue 0)" if cfg.dual else ""
    text = (
        f"family {family}{' dual' if cfg.dual else ''}, m={cfg.m} (m = {cfg.m % 4} mod 4)\n"
        f"window lemma{via}: v={rep.v}, delta={rep.bch_delta}, window {window} inside v*T: verified\n"
        f"distance bound: d >= {bound}"
    )
    return (doc if cfg.json else text), []


def cmd_delta_max(cfg: RunConfig):
    # primal defining sets need no field; the dual one is read off the built code
    T = _code(cfg).defining_set if cfg.dual else pair_set(*cfg.pair, cfg.q, cfg.m)
    rep = delta_max(T, workers=cfg.threads)
    doc = rep.to_json()
    doc["family"] = list(cfg.pair)
    doc["m"] = cfg.m
    doc["delta_max"] = rep.bch_delta
    text = (
        f"family {cfg.pair}{' dual' if cfg.dual else ''}, q={cfg.q}, m={cfg.m}: delta_max = {rep.bch_delta}\n"
        f"best multiplier v={rep.v}, window start {rep.window_start}, run length {rep.run_length}"
    )
    return (doc if cfg.json else text), []


def cmd_distance(cfg: RunConfig):
    c = _code(cfg)
    rep = min_distance(c, cfg.strategy, w_max=cfg.w_max, work_ceiling=cfg.work_ceiling)
    doc = rep.to_json()
    doc.update({"code": c.label(), "n": c.n, "k": c.k})
    if rep.exact is not None:
        text = f"{c.label()}  [{c.n}, {c.k}, {rep.exact}]  method={rep.method}"
    else:
        upper = f", d <= {rep.upper}" if rep.upper is not None else ""
        text = f"{c.label()}  [{c.n}, {c.k}]  d >= {rep.lower}{upper}  method={rep.method}"
    if rep.witness is not None:
        text += f"\nwitness support: {rep.witness.support}"
    return (doc if cfg.json else text), c.warnings


def cmd_verify(cfg: RunConfig):
    led = verify.run(quick=cfg.quick, modulus=cfg.modulus, seed=cfg.seed)
    return (led.to_json() if cfg.json else led.table()), led


COMMANDS = {
    "construct": cmd_construct,
    "bound": cmd_bound,
    "delta-max": cmd_delta_max,
    "distance": cmd_distance,
    "verify-paper": cmd_verify,
}


def _emit(payload, cfg: RunConfig) -> None:
    text = json.dumps(payload, indent=2) if isinstance(payload, dict) else payload
    if cfg.out:
        Path(cfg.out).write_text(text + "\n")
    else:
        print(text)


def main(argv=None) -> int:
    cfg = parse_config(argv)
    try:
        payload, extra = COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        print(f"tcw: error: {exc}", file=sys.stderr)
        return 2
    except (WrongResidueClass, OutOfTheoremRange) as exc:
        print(f"tcw: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:
        print(f"tcw: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    _emit(payload, cfg)
    if isinstance(extra, verify.VerificationLedger):
        for e in extra.failures():
            print(f"FAILED {e.claim}: expected {e.expected}, computed {e.computed}", file=sys.stderr)
        return 0 if extra.passed else 1
    for w in extra:
        print(f"warning: {w}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
