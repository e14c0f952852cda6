"""
Census ingestion, the parallel sweep, and report writing.

A census file holds one entry per line, ``name ; pd|braid ; payload``, with
``#`` starting a comment.  Every entry gets one :class:`LinkReport`; the
reports keep the input order whatever the number of worker processes.
"""

from __future__ import annotations

import csv
import io
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields
from fractions import Fraction
from pathlib import Path
from typing import Any, Iterable, Sequence

from . import conjectures as cj
from .diagram import LinkDiagram, braid_closure, diagram_predicates, parse_braid, parse_pd
from .errors import KnotTrapError, ShapeViolation
from .invariants import alexander_pd, genus_from_seifert, genus_from_span, signature
from .structure import decompose_murasugi, guaranteed_prefix, is_twist_concentrated, multiplicativity_holds

ALL_CHECKS = ("fox", "hm", "twist", "decompose", "foxmilnor", "ratios")
EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2

BUNDLED_CENSUS = Path(__file__).parent / "data" / "census_alt10.txt"


class CensusError(KnotTrapError):
    """The census file is missing or malformed."""


@dataclass(frozen=True)
class CensusEntry:
    name: str
    kind: str
    data: str
    line: int
    raw: str = ""

    def diagram(self) -> LinkDiagram:
        if self.kind == "pd":
            return parse_pd(self.data)
        return braid_closure(parse_braid(self.data))


def parse_census(text: str) -> list[CensusEntry]:
    """Parse census text; raises :class:`CensusError` naming the offending line."""
    entries = []
    names = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = [p.strip() for p in line.split(";", 2)]
        if len(parts) != 3 or not parts[0] or not parts[2]:
            raise CensusError(f"line {lineno}: expected 'name ; pd|braid ; payload'")
        name, kind, data = parts
        if kind not in ("pd", "braid"):
            raise CensusError(f"line {lineno}: unknown input kind {kind!r}")
        if name in names:
            raise CensusError(f"line {lineno}: duplicate name {name!r}")
        names.add(name)
        entry = CensusEntry(name, kind, data, lineno, raw.strip())
        try:
            entry.diagram()
        except KnotTrapError as exc:
            raise CensusError(f"line {lineno}: {exc}") from exc
        entries.append(entry)
    return entries


def load_census(path: str | os.PathLike) -> list[CensusEntry]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CensusError(f"cannot read census {path}: {exc.strerror or exc}") from exc
    return parse_census(text)


# ----------------------------------------------------------------------
# per-entry evaluation


@dataclass
class LinkReport:
    name: str
    crossings: int | None = None
    components: int | None = None
    coeffs: list[int] | None = None
    palindromic: bool | None = None
    sign_alternating: bool | None = None
    sigma: int | None = None
    genus_span: int | None = None
    genus_seifert: int | None = None
    trapezoidal: bool | None = None
    trapezoid_failure: dict | None = None
    i0: int | None = None
    sl: int | None = None
    hm_holds: bool | None = None
    hm_sharp: bool | None = None
    hm_lhs: int | None = None
    hm_rhs: int | None = None
    MT: int | None = None
    twist_concentrated: bool | None = None
    twist_margin: str | None = None
    guaranteed_prefix: int | None = None
    prefix_holds: bool | None = None
    decomposition: dict | None = None
    fox_milnor: dict | None = None
    ratios: dict | None = None
    timings: dict | None = None
    reasons: dict[str, str] = field(default_factory=dict)
    violations: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)


def _frac(x: Fraction | None) -> str | None:
    return None if x is None else str(x)


def evaluate(entry: CensusEntry, checks: Sequence[str] = ALL_CHECKS, timings: bool = False) -> LinkReport:
    """Run the requested checks on one entry; never raises for per-entry problems."""
    rep = LinkReport(entry.name)
    clock: dict[str, float] = {}

    def timed(key, fn, *args):
        t0 = time.perf_counter()
        try:
            return fn(*args)
        finally:
            clock[key] = clock.get(key, 0.0) + time.perf_counter() - t0

    try:
        d = entry.diagram()
    except KnotTrapError as exc:
        rep.reasons["diagram"] = f"input: {exc}"
        return rep
    rep.crossings = len(d.crossings)
    rep.components = d.num_components
    pred = diagram_predicates(d)
    c = timed("alexander", alexander_pd, d)
    rep.coeffs = list(c.coeffs)
    rep.palindromic = c.is_palindromic()
    rep.sign_alternating = c.alternating
    rep.sigma = timed("signature", signature, d).sigma
    if not pred.is_alternating:
        reason = "precondition: not alternating"
        for key in ("genus", "fox", "hm", "twist", "decompose", "foxmilnor", "ratios"):
            rep.reasons[key] = reason
        _finish(rep, clock, timings)
        return rep
    if not rep.palindromic:
        rep.violations.append("alexander: not palindromic")
    if not rep.sign_alternating:
        rep.violations.append("alexander: signs do not alternate")
    rep.genus_span = genus_from_span(c, d.num_components).g
    if pred.is_reduced:
        rep.genus_seifert = genus_from_seifert(d).g
        if rep.genus_seifert != rep.genus_span:
            rep.violations.append("genus: span and Seifert surface disagree")
    else:
        rep.reasons["genus_seifert"] = "precondition: diagram not reduced"
    positive = all(a > 0 for a in c.coeffs)

    if "fox" in checks:
        if positive:
            tr = cj.is_trapezoidal(c)
            rep.trapezoidal = tr.holds
            if not tr.holds:
                rep.trapezoid_failure = {"index": tr.index, "clause": tr.clause}
                rep.violations.append(f"trapezoidal: clause ({tr.clause}) fails at index {tr.index}")
        else:
            rep.reasons["fox"] = "precondition: zero coefficient"
    else:
        rep.reasons["fox"] = "not requested"

    if "hm" in checks:
        try:
            hm = cj.hm_check(c, rep.sigma)
        except ShapeViolation as exc:
            rep.hm_holds = False
            rep.violations.append(f"hm: {exc}")
        else:
            rep.i0, rep.sl = hm.i0, hm.sl
            rep.hm_holds, rep.hm_sharp, rep.hm_lhs, rep.hm_rhs = hm.holds, hm.sharp, hm.lhs, hm.rhs
            if not hm.holds:
                rep.violations.append(f"hm: {hm.lhs} < {hm.rhs}")
    else:
        rep.reasons["hm"] = "not requested"

    if "twist" in checks:
        if pred.is_reduced:
            tc = timed("twist", is_twist_concentrated, d, c)
            rep.MT = tc.MT
            rep.twist_concentrated = tc.holds
            rep.twist_margin = _frac(tc.margin)
            rep.guaranteed_prefix = guaranteed_prefix(tc.MT)
            rep.prefix_holds = cj.prefix_holds(c, rep.guaranteed_prefix)
            if not rep.prefix_holds:
                rep.violations.append(f"twist: fewer than {rep.guaranteed_prefix} leading inequalities")
            if tc.holds and positive and not cj.is_trapezoidal(c).holds:
                rep.violations.append("twist: twist-concentrated but not trapezoidal")
        else:
            rep.reasons["twist"] = "precondition: diagram not reduced"
    else:
        rep.reasons["twist"] = "not requested"

    if "decompose" in checks:
        if pred.is_reduced:
            dec = timed("decompose", decompose_murasugi, d)
            mult = multiplicativity_holds(d, dec)
            rep.decomposition = {
                "pieces": dec.num_pieces,
                "max_sum_length": dec.max_length,
                "lengths": dec.lengths(),
                "multiplicative": mult,
            }
            if mult is False:
                rep.violations.append("decompose: Alexander polynomial is not multiplicative")
        else:
            rep.reasons["decompose"] = "precondition: diagram not reduced"
    else:
        rep.reasons["decompose"] = "not requested"

    if "foxmilnor" in checks:
        try:
            cert = timed("foxmilnor", cj.fox_milnor, c)
        except KnotTrapError as exc:
            rep.reasons["foxmilnor"] = f"precondition: {exc}"
        else:
            rep.fox_milnor = {
                "found": cert.found,
                "factor": None if cert.factor is None else str(cert.factor),
                "bound": cert.bound,
            }
    else:
        rep.reasons["foxmilnor"] = "not requested"

    if "ratios" in checks:
        if positive:
            rs = cj.ratio_scan(c)
            rep.ratios = {
                "max_ascending": _frac(rs.max_ascending),
                "max_descending": _frac(rs.max_descending),
                "log_concave": rs.log_concave,
                "log_concave_failure": rs.log_concave_failure,
            }
        else:
            rep.reasons["ratios"] = "precondition: zero coefficient"
    else:
        rep.reasons["ratios"] = "not requested"
    _finish(rep, clock, timings)
    return rep


def _finish(rep: LinkReport, clock: dict[str, float], timings: bool):
    if timings:
        rep.timings = {k: round(v, 6) for k, v in sorted(clock.items())}


def _evaluate_star(args):
    return evaluate(*args)


def evaluate_all(entries: Sequence[CensusEntry], checks: Sequence[str] = ALL_CHECKS,
                 jobs: int = 1, timings: bool = False) -> list[LinkReport]:
    """Evaluate entries, in parallel when ``jobs > 1``; output follows input order."""
    work = [(e, tuple(checks), timings) for e in entries]
    if jobs <= 1 or len(work) <= 1:
        return [_evaluate_star(w) for w in work]
    chunk = max(1, len(work) // (4 * jobs))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_evaluate_star, work, chunksize=chunk))


# ----------------------------------------------------------------------
# output


def reports_json(reports: Iterable[LinkReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=1) + "\n"


def reports_csv(reports: Sequence[LinkReport]) -> str:
    names = [f.name for f in fields(LinkReport)]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(names)
    for r in reports:
        row = []
        for n in names:
            v = getattr(r, n)
            if isinstance(v, (dict, list)):
                v = json.dumps(v, sort_keys=True)
            elif isinstance(v, bool):
                v = str(v).lower()
            elif v is None:
                v = ""
            row.append(v)
        w.writerow(row)
    return buf.getvalue()


def violation_dump(entries: Sequence[CensusEntry], reports: Sequence[LinkReport]) -> list[dict[str, Any]]:
    return [
        {"name": r.name, "line": e.line, "input": e.raw, "coeffs": r.coeffs, "sigma": r.sigma,
         "violations": r.violations}
        for e, r in zip(entries, reports) if r.violations
    ]


@dataclass(frozen=True)
class CensusOptions:
    jobs: int = 1
    checks: tuple[str, ...] = ALL_CHECKS
    report: str | None = None
    format: str = "json"
    timings: bool = False
    dump: str | None = None


@dataclass
class CensusResult:
    exit_code: int
    reports: list[LinkReport]
    text: str
    violations: list[dict]
    error: str | None = None


def sweep(path: str | os.PathLike, options: CensusOptions = CensusOptions()) -> CensusResult:
    """Run a census and return the reports, rendered text and exit code (files untouched)."""
    bad = [c for c in options.checks if c not in ALL_CHECKS]
    if bad or options.format not in ("json", "csv") or options.jobs < 1:
        msg = f"bad options: checks {bad}" if bad else f"bad options: format={options.format} jobs={options.jobs}"
        return CensusResult(EXIT_INPUT, [], "", [], msg)
    try:
        entries = load_census(path)
    except CensusError as exc:
        return CensusResult(EXIT_INPUT, [], "", [], str(exc))
    reports = evaluate_all(entries, options.checks, options.jobs, options.timings)
    text = reports_json(reports) if options.format == "json" else reports_csv(reports)
    dump = violation_dump(entries, reports)
    if dump:
        code = EXIT_VIOLATION
    elif entries and all("diagram" in r.reasons or r.reasons.get("fox", "").startswith("precondition")
                         for r in reports):
        code = EXIT_INPUT
    else:
        code = EXIT_OK
    return CensusResult(code, reports, text, dump)


def run_census(path: str | os.PathLike, options: CensusOptions = CensusOptions()) -> int:
    """Run a census sweep, write the report (or print it) and return the exit code."""
    res = sweep(path, options)
    if res.error:
        print(f"error: {res.error}", file=sys.stderr)
        return res.exit_code
    if options.report:
        Path(options.report).write_text(res.text)
    else:
        print(res.text, end="")
    if res.violations:
        dump = json.dumps(res.violations, indent=1) + "\n"
        target = options.dump or (options.report + ".violations.json" if options.report else None)
        if target:
            Path(target).write_text(dump)
            print(f"{len(res.violations)} entries with violations; details in {target}", file=sys.stderr)
        else:
            print(dump, end="", file=sys.stderr)
    return res.exit_code


__all__ = [
    "CensusEntry", "CensusError", "LinkReport", "CensusOptions", "CensusResult", "ALL_CHECKS",
    "BUNDLED_CENSUS", "parse_census", "load_census", "evaluate", "evaluate_all", "reports_json",
    "reports_csv", "violation_dump", "sweep", "run_census",
]
