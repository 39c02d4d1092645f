"""Command-line interface: facet queries, characters, decompositions,
structure graphs, Ext lookups, Hom witnesses and verification sweeps.

Weights are comma-separated pairs in SL3 convention ("3,3"); with --gl3 a
three-part weight "a,b,c" is accepted and converted via (a-b, b-c).  Exit
codes: 0 success, 1 verification failure, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from qgl3 import charring
from qgl3.charring import chi_l, weyl_char
from qgl3.decomp import chi_decomposition, zhat_char, zhat_factors
from qgl3.ext import ext1_g, ext1_g1, ext1_g1b
from qgl3.homs import hom_exists_mirror
from qgl3.lattice import (
    POSITIVE_ROOTS,
    Weight,
    decompose,
    facet_classify,
    pairing,
)
from qgl3.structure import nabla_l_filtration, validate_graph, zhat_structure
from qgl3.verify import SUITES, run_suite


@dataclass
class EngineConfig:
    l: int
    p: int = 0
    fmt: str = "text"

    def __post_init__(self):
        if self.l < 2:
            raise ValueError(f"need l >= 2, got {self.l}")
        if self.p < 0 or (self.p > 0 and not _is_prime(self.p)):
            raise ValueError(f"p must be 0 or a prime, got {self.p}")
        if self.fmt not in ("text", "json", "dot"):
            raise ValueError(f"unknown format {self.fmt!r}")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def parse_weight(text: str, gl3: bool = False) -> Weight:
    parts = text.split(",")
    want = 3 if gl3 else 2
    if len(parts) != want:
        raise ValueError(f"expected {want} comma-separated integers, got {text!r}")
    nums = [int(p) for p in parts]
    if gl3:
        return Weight(nums[0] - nums[1], nums[1] - nums[2])
    return Weight(nums[0], nums[1])


def _print_char(x, cfg: EngineConfig) -> None:
    if cfg.fmt == "json":
        print(x.to_json())
    else:
        print(f"dim {x.dimension}: {x!r}")


def cmd_classify(args, cfg: EngineConfig) -> int:
    lam = parse_weight(args.weight, args.gl3)
    facet = facet_classify(lam, cfg.l)
    cls, res = decompose(lam, cfg.l)
    pairings = {root.name.lower(): pairing(lam, root) for root in POSITIVE_ROOTS}
    if cfg.fmt == "json":
        print(
            json.dumps(
                {
                    "lambda": list(lam),
                    "l": cfg.l,
                    "facet": facet.value,
                    "classical": list(cls),
                    "restricted": list(res),
                    "pairings": pairings,
                }
            )
        )
    else:
        print(f"{lam}: {facet.value}")
        print(f"  classical part {cls}, restricted part {res}")
        print("  pairings: " + ", ".join(f"{k}={v}" for k, v in pairings.items()))
    return 0


def cmd_char(args, cfg: EngineConfig) -> int:
    lam = parse_weight(args.weight, args.gl3)
    _print_char(weyl_char(lam), cfg)
    return 0


def cmd_decomp(args, cfg: EngineConfig) -> int:
    lam = parse_weight(args.weight, args.gl3)
    dec = chi_decomposition(lam, cfg.l)
    if cfg.fmt == "json":
        print(dec.to_json())
    else:
        print(f"{lam} (l={cfg.l}): case {dec.case_id} [{dec.facet.value}]")
        for f, alive in zip(dec.factors, dec.nonzero_flags()):
            dim = chi_l(f, cfg.l).dimension
            note = "" if alive else "  (vanishes)"
            print(f"  {f}  chi_l dim {dim}{note}")
    return 0


def cmd_zhat(args, cfg: EngineConfig) -> int:
    lam = parse_weight(args.weight, args.gl3)
    if args.structure:
        g = zhat_structure(lam, cfg.l)
        if cfg.fmt == "dot":
            print(g.to_dot())
        elif cfg.fmt == "json":
            print(g.to_json())
        else:
            print(f"structure of the induced module of weight {lam} (l={cfg.l}):")
            for n in g.nodes:
                print(f"  layer {n.layer}: {n.id} = {n.weight}")
            for u, v in g.edges:
                print(f"  {u} -> {v}")
        return 0
    if args.char:
        _print_char(zhat_char(lam, cfg.l), cfg)
        return 0
    factors = zhat_factors(lam, cfg.l)
    if cfg.fmt == "json":
        print(json.dumps([list(f) for f in factors]))
    else:
        for f in factors:
            print(f"  {f}")
    return 0


def cmd_lfilt(args, cfg: EngineConfig) -> int:
    lam = parse_weight(args.weight, args.gl3)
    g = nabla_l_filtration(lam, cfg.l)
    if cfg.fmt == "dot":
        print(g.to_dot())
    elif cfg.fmt == "json":
        print(g.to_json())
    else:
        report = validate_graph(g)
        print(f"good filtration of the induced module of weight {lam} (l={cfg.l}):")
        for n in g.nodes:
            print(f"  layer {n.layer}: {n.id} = {n.weight}")
        for u, v in g.edges:
            print(f"  {u} -> {v}")
        print(f"  checks: {'ok' if report.ok else report.failures()}")
    return 0


def cmd_ext(args, cfg: EngineConfig) -> int:
    alpha = parse_weight(args.alpha, args.gl3)
    beta = parse_weight(args.beta, args.gl3)
    if args.level == "g1":
        val = ext1_g1(alpha, beta, cfg.l)
        if cfg.fmt == "json":
            print(json.dumps(val.labels()))
        else:
            print(" + ".join(f"{s}^F" if s != "k" else s for s in val.labels()) or "0")
    elif args.level == "g1b":
        if args.mu is None:
            raise ValueError("--level g1b needs --mu (the induced-module weight)")
        mu = parse_weight(args.mu, args.gl3)
        print(ext1_g1b(mu, alpha, beta, cfg.l))
    else:
        print(ext1_g(alpha, beta, cfg.l, cfg.p))
    return 0


def cmd_hom(args, cfg: EngineConfig) -> int:
    lam = parse_weight(args.lam, args.gl3)
    mu = parse_weight(args.mu, args.gl3)
    w = hom_exists_mirror(lam, mu, cfg.l, cfg.p)
    if cfg.fmt == "json":
        print(
            json.dumps(
                {
                    "lambda": list(lam),
                    "mu": list(mu),
                    "witness": None if w is None else w.to_jsonable(),
                }
            )
        )
    elif w is None:
        print("no witness")
    else:
        print(f"witness: beta={w.beta.name.lower()} m={w.m} e={w.e}")
    return 0


def cmd_verify(args, cfg: EngineConfig) -> int:
    names = args.suites.split(",")
    l_values = [int(t) for t in args.l.split(",")]
    failed = False
    for name in names:
        report = run_suite(name, l_values, args.box, stream=sys.stderr, jobs=args.jobs)
        status = "ok" if report.passed else f"{len(report.failures)} failures"
        print(f"{name}: {report.cases_run} cases, {status}")
        failed = failed or not report.passed
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qgl3", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_format=True):
        p.add_argument("--l", type=int, required=True, help="order of the root of unity (>= 2)")
        p.add_argument("--p", type=int, default=0, help="base characteristic (0 or a prime)")
        p.add_argument("--gl3", action="store_true", help="parse weights as GL3 triples a,b,c")
        if with_format:
            p.add_argument("--format", default="text", choices=("text", "json", "dot"))

    p = sub.add_parser("classify", help="facet type and decomposition of a dominant weight")
    common(p)
    p.add_argument("weight")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("char", help="induced-module character")
    common(p)
    p.add_argument("weight")
    p.set_defaults(func=cmd_char)

    p = sub.add_parser("decomp", help="twisted-tensor factor weights of an induced module")
    common(p)
    p.add_argument("weight")
    p.set_defaults(func=cmd_decomp)

    p = sub.add_parser("zhat", help="Borel-induced module: factors, character or structure")
    common(p)
    p.add_argument("weight")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--structure", action="store_true")
    g.add_argument("--factors", action="store_true")
    g.add_argument("--char", action="store_true")
    p.set_defaults(func=cmd_zhat)

    p = sub.add_parser("lfilt", help="good-filtration graph of an induced module")
    common(p)
    p.add_argument("weight")
    p.set_defaults(func=cmd_lfilt)

    p = sub.add_parser("ext", help="Ext^1 lookup")
    common(p)
    p.add_argument("--level", choices=("g1", "g1b", "g"), required=True)
    p.add_argument("--mu", help="induced-module weight (g1b level)")
    p.add_argument("alpha")
    p.add_argument("beta")
    p.set_defaults(func=cmd_ext)

    p = sub.add_parser("hom", help="mirror-wall witness for a nonzero hom")
    common(p)
    p.add_argument("lam")
    p.add_argument("mu")
    p.set_defaults(func=cmd_hom)

    p = sub.add_parser("verify", help="run verification sweeps")
    p.add_argument("--suites", required=True, help=f"comma list from {sorted(SUITES)}")
    p.add_argument("--l", required=True, help="comma list of orders, e.g. 2,3,5")
    p.add_argument("--box", type=int, default=4)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify, l_list=True)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cache_dir = os.environ.get("QGL3_CACHE_DIR")
    try:
        if args.command == "verify":
            cfg = EngineConfig(l=2)  # per-suite l values parsed inside
        else:
            cfg = EngineConfig(l=args.l, p=args.p, fmt=getattr(args, "format", "text"))
            if cfg.fmt == "dot" and args.command not in ("zhat", "lfilt"):
                raise ValueError("--format dot is only valid for graph outputs")
        if cache_dir and os.path.isdir(cache_dir):
            charring.load_simple_tables(cache_dir)
        code = args.func(args, cfg)
        if cache_dir:
            charring.save_simple_tables(cache_dir)
        return code
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
