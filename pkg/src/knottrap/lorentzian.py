"""
M-convex supports, Lorentzian polynomials, and multivariable refinements
of the Alexander polynomial built from Kauffman states.
"""

from __future__ import annotations

import csv
import io
import itertools
import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .diagram import BraidWord, LinkDiagram, braid_closure, is_reduced
from .errors import BudgetExceeded, PreconditionError
from .invariants import alexander_pd
from .polyalg import CoeffSeq, Inertia, LaurentPoly, MultiPoly, normalize_alexander, signature_exact
from .structure import twist_regions

Exponent = tuple[int, ...]


# ----------------------------------------------------------------------
# M-convexity


@dataclass(frozen=True)
class SupportSet:
    arity: int
    points: frozenset[Exponent]

    def __post_init__(self):
        object.__setattr__(self, "points", frozenset(tuple(p) for p in self.points))
        if not self.points:
            raise ValueError("empty support")
        for p in self.points:
            if len(p) != self.arity or any(e < 0 for e in p):
                raise ValueError(f"bad exponent vector {p}")

    @classmethod
    def of(cls, points: Iterable[Sequence[int]]) -> SupportSet:
        pts = [tuple(p) for p in points]
        if not pts:
            raise ValueError("empty support")
        return cls(len(pts[0]), frozenset(pts))

    @classmethod
    def from_poly(cls, p: MultiPoly) -> SupportSet:
        return cls(p.arity, p.support)

    @property
    def degrees(self) -> set[int]:
        return {sum(p) for p in self.points}

    @property
    def is_homogeneous(self) -> bool:
        return len(self.degrees) == 1


@dataclass(frozen=True)
class ExchangeWitness:
    """``alpha - e_i + e_j`` is missing for every admissible j; ``i`` is 1-based."""

    alpha: Exponent
    beta: Exponent
    i: int


@dataclass(frozen=True)
class MConvexity:
    holds: bool
    witness: ExchangeWitness | None = None

    def __bool__(self):
        return self.holds


def is_m_convex(S: SupportSet | Iterable[Sequence[int]]) -> MConvexity:
    """Check the exchange axiom on every ordered pair of points.

    Points are scanned in decreasing lexicographic order, so the reported
    witness is the first violation in that order.
    """
    if not isinstance(S, SupportSet):
        S = SupportSet.of(S)
    if not S.is_homogeneous:
        raise PreconditionError(f"support mixes total degrees {sorted(S.degrees)}")
    pts = sorted(S.points, reverse=True)
    k = S.arity
    for alpha in pts:
        for beta in pts:
            for i in range(k):
                if alpha[i] <= beta[i]:
                    continue
                ok = False
                for j in range(k):
                    if alpha[j] < beta[j]:
                        moved = list(alpha)
                        moved[i] -= 1
                        moved[j] += 1
                        if tuple(moved) in S.points:
                            ok = True
                            break
                if not ok:
                    return MConvexity(False, ExchangeWitness(alpha, beta, i + 1))
    return MConvexity(True)


# ----------------------------------------------------------------------
# Lorentzian polynomials


@dataclass(frozen=True)
class LorentzianResult:
    """``reason`` names the first failed condition: "coefficients", "support" or "hessian"."""

    holds: bool
    reason: str | None = None
    chain: tuple[int, ...] | None = None  # derivative indices of the failing Hessian
    inertia: Inertia | None = None
    exchange: ExchangeWitness | None = None
    negative: Exponent | None = None

    def __bool__(self):
        return self.holds


def hessian(q: MultiPoly) -> list[list[int]]:
    """Hessian of a quadratic form (constant matrix)."""
    k = q.arity
    H = [[0] * k for _ in range(k)]
    for e, c in q.terms.items():
        idx = [i for i in range(k) for _ in range(e[i])]
        if len(idx) != 2:
            raise ValueError("not a quadratic form")
        i, j = idx
        if i == j:
            H[i][i] += 2 * c
        else:
            H[i][j] += c
            H[j][i] += c
    return H


def hessian_chains(p: MultiPoly) -> Iterable[tuple[tuple[int, ...], list[list[int]]]]:
    """Yield (chain, Hessian) for every multiset of d - 2 derivative indices with a
    nonzero derivative, in lexicographic chain order.

    Chains whose derivative vanishes have a zero Hessian and are skipped.
    """
    k = p.arity
    gammas = set()
    for alpha in p.terms:
        for i in range(k):
            for j in range(i, k):
                g = list(alpha)
                g[i] -= 1
                g[j] -= 1
                if g[i] >= 0 and g[j] >= 0:
                    gammas.add(tuple(g))
    chains = sorted(tuple(i for i in range(k) for _ in range(g[i])) for g in gammas)
    for chain in chains:
        gamma = [0] * k
        for i in chain:
            gamma[i] += 1
        H = [[0] * k for _ in range(k)]
        for alpha, c in p.terms.items():
            rest = [a - g for a, g in zip(alpha, gamma)]
            if min(rest) < 0:
                continue
            # d^gamma x^alpha = alpha!/(alpha-gamma)! x^rest, and rest has degree 2
            c *= math.prod(math.perm(a, g) for a, g in zip(alpha, gamma) if g)
            i, j = (i for i in range(k) for _ in range(rest[i]))
            if i == j:
                H[i][i] += 2 * c
            else:
                H[i][j] += c
                H[j][i] += c
        yield chain, H


def is_lorentzian(p: MultiPoly, method: str = "pivot") -> LorentzianResult:
    """Exact Lorentzian test for a homogeneous polynomial of degree at least 2.

    On success ``inertia`` is that of the first Hessian in chain order, which
    for a quadratic form is the Hessian of ``p`` itself.
    """
    if not p.terms:
        raise PreconditionError("zero polynomial")
    if not p.is_homogeneous():
        raise PreconditionError("polynomial is not homogeneous")
    if p.degree < 2 or p.arity < 2:
        raise PreconditionError("need degree >= 2 and at least two variables")
    neg = next((e for e, c in p.terms.items() if c < 0), None)
    if neg is not None:
        return LorentzianResult(False, "coefficients", negative=neg)
    mc = is_m_convex(SupportSet.from_poly(p))
    if not mc.holds:
        return LorentzianResult(False, "support", exchange=mc.witness)
    first = None
    for chain, H in hessian_chains(p):
        inertia = signature_exact(H, method)
        if first is None:
            first = inertia
        if inertia.n_plus > 1:
            return LorentzianResult(False, "hessian", chain=chain, inertia=inertia)
    return LorentzianResult(True, inertia=first)


def hessian_witness(p: MultiPoly) -> tuple[tuple[int, ...], Inertia] | None:
    """First derivative chain whose Hessian has two or more positive eigenvalues."""
    for chain, H in hessian_chains(p):
        inertia = signature_exact(H)
        if inertia.n_plus > 1:
            return chain, inertia
    return None


def normalization(p: MultiPoly) -> MultiPoly:
    """The normalization sum c_a x^a / a!, scaled by d! to keep integer coefficients."""
    d = p.degree
    out = {}
    for e, c in p.terms.items():
        denom = math.prod(math.factorial(k) for k in e)
        out[e] = c * math.factorial(d) // denom
    return MultiPoly(p.arity, out)


# ----------------------------------------------------------------------
# refinement contracts


@dataclass(frozen=True)
class RefinementCheck:
    all_coeffs_one: bool
    m_convex: bool
    specializes: bool
    specialization: CoeffSeq | None = None

    @property
    def ok(self) -> bool:
        return self.all_coeffs_one and self.m_convex and self.specializes


def compress_exponents(p: LaurentPoly) -> LaurentPoly:
    """Divide all exponents by the gcd of their differences."""
    terms = p.terms()
    exps = sorted(terms)
    g = 0
    for a, b in zip(exps, exps[1:]):
        g = math.gcd(g, b - a)
    if g <= 1:
        return p
    return LaurentPoly.from_dict({(e - exps[0]) // g: c for e, c in terms.items()})


def refinement_validate(p: MultiPoly, c: CoeffSeq | Sequence[int],
                        weights: Sequence[int] | None = None) -> RefinementCheck:
    """Check a candidate refinement: unit coefficients, M-convex support, and specialization.

    The specialization substitutes ``x_i -> t**weights[i]`` (default: the
    first variable to ``t`` and the others to 1), divides exponents by their
    common step, and compares coefficient magnitudes with ``c``.
    """
    if not p.terms:
        raise PreconditionError("zero polynomial")
    if not p.is_homogeneous():
        raise PreconditionError("refinement must be homogeneous")
    if weights is None:
        weights = [1] + [0] * (p.arity - 1)
    if len(weights) != p.arity:
        raise PreconditionError(f"{len(weights)} weights for {p.arity} variables")
    coeffs = tuple(c.coeffs) if isinstance(c, CoeffSeq) else tuple(c)
    ones = all(v == 1 for v in p.terms.values())
    mc = is_m_convex(SupportSet.from_poly(p)).holds
    flat = compress_exponents(p.specialize(weights))
    seq = normalize_alexander(flat) if flat else None
    return RefinementCheck(ones, mc, seq is not None and seq.coeffs == coeffs, seq)


# ----------------------------------------------------------------------
# Kauffman states


def _corner_exponent(d: LinkDiagram, x: int, j: int) -> int:
    """Doubled Alexander weight of corner (x, j).

    Only the two corners flanking the incoming under-strand carry weight:
    +1 for corner 3 (between slots 3 and 0) and -1 for corner 0.
    """
    if j == 3:
        return 1
    if j == 0:
        return -1
    return 0


def kauffman_states(d: LinkDiagram, limit: int | None = None) -> list[tuple[int, ...]]:
    """Kauffman states: each crossing picks one corner, each unstarred face is picked once.

    The two starred faces are those on either side of the incoming
    under-arc of crossing 0.  ``states[k][x]`` is the corner index chosen at x.
    """
    cf = d.corner_face
    starred = {cf[(0, 0)], cf[(0, 3)]}
    n = len(d.crossings)
    options = [[j for j in range(4) if cf[(x, j)] not in starred] for x in range(n)]
    out: list[tuple[int, ...]] = []
    used: set[int] = set()
    choice: list[int] = []

    def rec(x: int):
        if x == n:
            out.append(tuple(choice))
            if limit is not None and len(out) > limit:
                raise BudgetExceeded(f"more than {limit} Kauffman states")
            return
        for j in options[x]:
            f = cf[(x, j)]
            if f not in used:
                used.add(f)
                choice.append(j)
                rec(x + 1)
                choice.pop()
                used.discard(f)

    rec(0)
    return out


def state_count_sequence(d: LinkDiagram) -> CoeffSeq:
    """Number of Kauffman states per Alexander degree.

    For alternating diagrams no cancellation occurs, so this equals the
    coefficient magnitudes of the Alexander polynomial.
    """
    counts: dict[int, int] = {}
    for s in kauffman_states(d):
        e = sum(_corner_exponent(d, x, j) for x, j in enumerate(s))
        counts[e] = counts.get(e, 0) + 1
    return normalize_alexander(compress_exponents(LaurentPoly.from_dict(counts)))


@dataclass(frozen=True)
class Refinement:
    """A refinement polynomial together with the weights that specialize it to Delta."""

    poly: MultiPoly
    weights: tuple[int, ...]
    groups: tuple[tuple[int, ...], ...]


def twist_refinement(d: LinkDiagram, groups: Sequence[Sequence[int]] | None = None) -> Refinement:
    """Refine the state sum by twist region.

    Each group of crossings (by default the twist regions) gets three
    variables ``x, y, z`` counting the chosen corners of weight +1, -1 and 0
    (the corners on either side of the incoming under-strand, and the other
    two).  Every state then contributes a monomial of degree equal to the
    crossing number, and ``x -> t^2, y -> 1, z -> t`` recovers the
    Alexander degree.
    """
    if groups is None:
        groups = [r.crossings for r in twist_regions(d).regions]
    groups = tuple(tuple(g) for g in groups)
    group_of = {x: k for k, g in enumerate(groups) for x in g}
    if sorted(group_of) != list(range(len(d.crossings))):
        raise PreconditionError("groups must partition the crossings")
    arity = 3 * len(groups)
    terms: dict[Exponent, int] = {}
    for s in kauffman_states(d):
        e = [0] * arity
        for x, j in enumerate(s):
            w = _corner_exponent(d, x, j)
            e[3 * group_of[x] + {1: 0, -1: 1, 0: 2}[w]] += 1
        terms[tuple(e)] = terms.get(tuple(e), 0) + 1
    weights = tuple(w for _ in groups for w in (2, 0, 1))
    return Refinement(MultiPoly(arity, terms), weights, groups)


def reduce_refinement(r: Refinement) -> Refinement:
    """Drop variables that never occur."""
    live = [i for i in range(r.poly.arity) if any(e[i] for e in r.poly.terms)]
    terms = {tuple(e[i] for i in live): c for e, c in r.poly.terms.items()}
    return Refinement(MultiPoly(len(live), terms), tuple(r.weights[i] for i in live), r.groups)


# ----------------------------------------------------------------------
# alternating 3-braids


def alternating_three_braids(max_crossings: int) -> Iterable[BraidWord]:
    """Words s1^a1 s2^-b1 ... s1^ak s2^-bk up to cyclic rotation, with reduced closures."""
    seen = set()
    for n in range(4, max_crossings + 1):
        for parts in range(2, n + 1, 2):
            for bounds in itertools.combinations(range(1, n), parts - 1):
                b = (0, *bounds, n)
                runs = tuple(b[i + 1] - b[i] for i in range(parts))
                rots = [runs[i:] + runs[:i] for i in range(0, parts, 2)]
                key = min(rots)
                if key in seen:
                    continue
                seen.add(key)
                word = []
                for k, r in enumerate(key):
                    word += [1 if k % 2 == 0 else -2] * r
                bw = BraidWord(3, tuple(word))
                if is_reduced(braid_closure(bw)):
                    yield bw


@dataclass(frozen=True)
class ScanRow:
    word: str
    is_connected_sum: bool
    is_lorentzian: bool
    witness: str
    contracts_ok: bool


def three_braid_nonlorentzian_scan(
    family: Iterable[BraidWord] | Callable[[int], Iterable[BraidWord]] | None,
    budget: int,
) -> list[ScanRow]:
    """Build the twist-region refinement of each closure and test its normalization.

    ``budget`` is the largest crossing count allowed; a word above it raises
    :class:`BudgetExceeded`.  Without a family, all alternating 3-braids
    within the budget are scanned.
    """
    if family is None:
        family = alternating_three_braids
    words = family(budget) if callable(family) else family
    rows = []
    for bw in words:
        if len(bw.word) > budget:
            raise BudgetExceeded(f"word of length {len(bw.word)} exceeds budget {budget}")
        d = braid_closure(bw)
        runs = sum(1 for i in range(len(bw.word)) if bw.word[i] != bw.word[i - 1])
        ref = reduce_refinement(twist_refinement(d))
        contracts = refinement_validate(ref.poly, alexander_pd(d), ref.weights)
        res = is_lorentzian(normalization(ref.poly))
        if res.holds:
            witness = ""
        elif res.reason == "hessian":
            witness = f"hessian chain={list(res.chain)} inertia={tuple(res.inertia)}"
        elif res.reason == "support":
            w = res.exchange
            hw = hessian_witness(normalization(ref.poly))
            witness = f"exchange alpha={list(w.alpha)} beta={list(w.beta)} i={w.i}"
            if hw is not None:
                witness += f"; hessian chain={list(hw[0])} inertia={tuple(hw[1])}"
        else:
            witness = f"negative coefficient at {list(res.negative)}"
        word = " ".join(str(g) for g in bw.word)
        rows.append(ScanRow(word, runs == 2, res.holds, witness, contracts.ok))
    return rows


def scan_csv(rows: Sequence[ScanRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["word", "is_connected_sum", "is_lorentzian", "witness", "contracts_ok"])
    for r in rows:
        w.writerow([r.word, str(r.is_connected_sum).lower(), str(r.is_lorentzian).lower(), r.witness,
                    str(r.contracts_ok).lower()])
    return buf.getvalue()


__all__ = [
    "SupportSet", "ExchangeWitness", "MConvexity", "LorentzianResult", "RefinementCheck",
    "Refinement", "ScanRow", "is_m_convex", "is_lorentzian", "hessian", "hessian_witness",
    "normalization", "refinement_validate", "kauffman_states", "state_count_sequence",
    "twist_refinement", "reduce_refinement", "alternating_three_braids",
    "three_braid_nonlorentzian_scan", "scan_csv", "compress_exponents",
]
