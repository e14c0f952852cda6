"""
Command-line front end: single-link subcommands and the census sweep.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, is_dataclass
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import conjectures as cj
from . import harness
from .diagram import braid_closure, parse_braid, parse_pd
from .errors import BudgetExceeded, KnotTrapError
from .invariants import alexander_burau, alexander_pd, conway_skein, conway_to_alexander, signature
from .lorentzian import is_lorentzian
from .polyalg import CoeffSeq, normalize_alexander, parse_multipoly
from .structure import decompose_murasugi, guaranteed_prefix, is_twist_concentrated, twist_regions


def _seq(c: CoeffSeq | Sequence[int]) -> str:
    return "(" + ",".join(str(a) for a in c) + ")"


def _jsonable(x):
    if is_dataclass(x):
        return _jsonable(asdict(x))
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, Fraction):
        return str(x)
    return x


def _diagram(args):
    if args.braid:
        return braid_closure(parse_braid(args.braid))
    if args.pd:
        return parse_pd(args.pd)
    raise KnotTrapError("give --braid or --pd")


def _coeffs(args) -> CoeffSeq:
    if getattr(args, "seq", None):
        return CoeffSeq(tuple(int(x) for x in args.seq.replace("(", "").replace(")", "").split(",")))
    return alexander_pd(_diagram(args))


def cmd_alex(args) -> tuple[dict, str]:
    d = _diagram(args)
    methods = {"pd": alexander_pd(d)}
    if args.braid:
        methods["burau"] = alexander_burau(parse_braid(args.braid))
    try:
        methods["skein"] = normalize_alexander(conway_to_alexander(conway_skein(d)))
    except BudgetExceeded:
        pass
    values = {k: list(v.coeffs) for k, v in methods.items()}
    agree = len({tuple(v) for v in values.values()}) == 1
    rec = {"coeffs": values["pd"], "methods": values, "agree": agree}
    if not agree:
        raise KnotTrapError("methods disagree: " + ", ".join(f"{k}={_seq(v)}" for k, v in values.items()))
    return rec, f"{_seq(values['pd'])}  (agreement: {' = '.join(values)})"


def cmd_sig(args) -> tuple[dict, str]:
    d = _diagram(args)
    s = signature(d).sigma
    return {"sigma": s}, f"sigma = {s}"


def cmd_trapezoid(args) -> tuple[dict, str]:
    c = _coeffs(args)
    r = cj.is_trapezoidal(c)
    rec = {"coeffs": list(c.coeffs), **_jsonable(r)}
    if r.holds:
        text = f"{_seq(c)} trapezoidal: true"
        if r.i0 is not None:
            text += f", i0={r.i0}, sl={r.sl}"
    else:
        text = f"{_seq(c)} trapezoidal: false, clause ({r.clause}) fails at index {r.index}"
    return rec, text


def cmd_hm(args) -> tuple[dict, str]:
    if getattr(args, "seq", None):
        if args.sigma is None:
            raise KnotTrapError("--seq needs --sigma")
        c, s = _coeffs(args), args.sigma
    else:
        d = _diagram(args)
        c, s = alexander_pd(d), signature(d).sigma
    r = cj.hm_check(c, s)
    rec = {"coeffs": list(c.coeffs), "sigma": s, **_jsonable(r)}
    text = (f"{'holds' if r.holds else 'fails'}, {'sharp' if r.sharp else 'not sharp'}, "
            f"lhs={r.lhs}, rhs={r.rhs} (sigma={s}, i0={r.i0}, sl={r.sl})")
    return rec, text


def cmd_twist(args) -> tuple[dict, str]:
    d = _diagram(args)
    prof = twist_regions(d)
    tc = is_twist_concentrated(d)
    n = guaranteed_prefix(prof)
    rec = {
        "regions": [{"crossings": list(r.crossings), "coherent": r.coherent, "sign": r.sign}
                    for r in prof.regions],
        "MT": tc.MT, "g": tc.g, "twist_concentrated": tc.holds, "margin": str(tc.margin),
        "guaranteed_prefix": n,
    }
    sizes = " ".join(f"{r.size}{'' if r.coherent else '*'}" for r in prof.regions)
    text = (f"regions: {sizes}  (* = not coherent)\nMT = {tc.MT}, g = {tc.g}, "
            f"twist-concentrated: {str(tc.holds).lower()} (margin {tc.margin}), guaranteed prefix = {n}")
    return rec, text


def cmd_decompose(args) -> tuple[dict, str]:
    d = _diagram(args)
    dec = decompose_murasugi(d)
    rec = {**dec.summary(), "lengths": dec.lengths(), "tree": dec.to_nested()}
    text = (f"{dec.num_pieces} pieces, sum lengths {dec.lengths()}, "
            f"max sum length {dec.max_length}\ntree: {dec.to_nested()}")
    return rec, text


def cmd_lorentzian(args) -> tuple[dict, str]:
    p = parse_multipoly(Path(args.poly).read_text())
    r = is_lorentzian(p)
    rec = _jsonable(r)
    text = f"Lorentzian: {str(r.holds).lower()}"
    if r.holds:
        text += f" (inertia {tuple(r.inertia)})"
    elif r.reason == "support":
        w = r.exchange
        text += f" (support not M-convex: alpha={w.alpha}, beta={w.beta}, i={w.i})"
    elif r.reason == "hessian":
        text += f" (Hessian after derivatives {r.chain} has inertia {tuple(r.inertia)})"
    else:
        text += f" (negative coefficient at {r.negative})"
    return rec, text


def cmd_foxmilnor(args) -> tuple[dict, str]:
    c = _coeffs(args)
    cert = cj.fox_milnor(c)
    rec = {"coeffs": list(c.coeffs), "found": cert.found,
           "factor": None if cert.factor is None else list(cert.factor.coeffs), "bound": cert.bound}
    if cert.found:
        return rec, f"{_seq(c)} = f(t) f(1/t) up to units, f = {cert.factor}"
    return rec, f"{_seq(c)}: no factorization (exhaustive search, |f_i| <= {cert.bound})"


COMMANDS = {
    "alex": cmd_alex, "sig": cmd_sig, "trapezoid": cmd_trapezoid, "hm": cmd_hm, "twist": cmd_twist,
    "decompose": cmd_decompose, "lorentzian": cmd_lorentzian, "foxmilnor": cmd_foxmilnor,
}


def _census_options(args) -> harness.CensusOptions:
    fmt = "json" if args.json else args.format
    checks = tuple(c.strip() for c in args.checks.split(",") if c.strip())
    return harness.CensusOptions(args.jobs, checks, args.report, fmt, args.timings, args.dump)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--braid", help='braid word "strands ; letters", e.g. "2 ; 1 1 1"')
    common.add_argument("--pd", help="PD code, e.g. \"X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]\"")
    common.add_argument("--seq", help="coefficient sequence, e.g. 1,3,1")
    common.add_argument("--sigma", type=int, help="signature to use with --seq")
    common.add_argument("--poly", help="MultiPoly text file (one 'coefficient : exponents' per line)")
    common.add_argument("--json", action="store_true", help="print a JSON record")

    sweep = argparse.ArgumentParser(add_help=False)
    sweep.add_argument("--census", help="census file (default: the bundled census)")
    sweep.add_argument("--report", help="write the report here instead of stdout")
    sweep.add_argument("--format", choices=("json", "csv"), default="json")
    sweep.add_argument("--jobs", type=int, default=1)
    sweep.add_argument("--checks", default=",".join(harness.ALL_CHECKS))
    sweep.add_argument("--timings", action="store_true", help="record per-entry timings")
    sweep.add_argument("--dump", help="violation dump path (default: <report>.violations.json)")

    parser = argparse.ArgumentParser(prog="knottrap", parents=[sweep],
                                     description="Exact Alexander-polynomial checks on alternating links.")
    parser.add_argument("--json", action="store_true", help="census report as JSON")
    sub = parser.add_subparsers(dest="command")
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    sub.add_parser("census", parents=[sweep]).add_argument("--json", action="store_true")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command in (None, "census"):
        if args.command is None and not args.census:
            parser.print_help()
            return harness.EXIT_INPUT
        try:
            return harness.run_census(args.census or harness.BUNDLED_CENSUS, _census_options(args))
        except BrokenPipeError:
            sys.stderr.close()
            return harness.EXIT_OK
    try:
        rec, text = COMMANDS[args.command](args)
    except (KnotTrapError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return harness.EXIT_INPUT
    print(json.dumps(rec, sort_keys=True) if args.json else text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
