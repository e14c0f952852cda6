"""
Checks on Alexander coefficient sequences: the trapezoidal shape, the
stable length and the Hirasawa-Murasugi inequality, Fox-Milnor
factorizations, and consecutive-coefficient ratio statistics.

Coefficients are stored 0-based as ``(a_0, ..., a_{l-1})``.  Trapezoid
reports use 1-based positions, as does the plateau start ``i_0``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import BudgetExceeded, PreconditionError, ShapeViolation
from .invariants import SignatureValue
from .polyalg import CoeffSeq, LaurentPoly

FOX_MILNOR_MAX_LENGTH = 21


def _coeffs(c: CoeffSeq | Sequence[int]) -> tuple[int, ...]:
    seq = tuple(c.coeffs) if isinstance(c, CoeffSeq) else tuple(c)
    if not seq:
        raise ValueError("empty coefficient sequence")
    return seq


def _positive(seq: tuple[int, ...]):
    if any(a <= 0 for a in seq):
        raise PreconditionError(f"coefficients must be positive: {seq}")


# ----------------------------------------------------------------------
# trapezoidal shape


@dataclass(frozen=True)
class TrapezoidReport:
    holds: bool
    index: int | None = None  # 1-based position of the first violation
    clause: int | None = None
    i0: int | None = None
    sl: int | None = None


def _first_violation(a: tuple[int, ...]) -> tuple[int, int] | None:
    """First failing (0-based index, clause) of the forward check."""
    l = len(a)
    m = (l - 1) // 2
    for i in range(m):
        if a[i] > a[i + 1]:
            return i, 1
    for i in range(m, l - 1):
        if a[i] < a[i + 1]:
            return i, 1
    for i in range(m):
        if a[i] == a[i + 1] and any(a[j] != a[i] for j in range(i + 1, m + 1)):
            return i, 2
    return None


def is_trapezoidal(c: CoeffSeq | Sequence[int]) -> TrapezoidReport:
    """Check both trapezoid clauses, reading the sequence from either end.

    The peak position is the 0-based middle index ``(l - 1) // 2``.  The
    check is run on the sequence and on its reverse, so the verdict does not
    depend on the direction of reading.
    """
    a = _coeffs(c)
    _positive(a)
    l = len(a)
    fwd = _first_violation(a)
    if fwd is not None:
        return TrapezoidReport(False, fwd[0] + 1, fwd[1])
    bwd = _first_violation(a[::-1])
    if bwd is not None:
        # position i, i+1 of the reverse is l-1-i, l-2-i here
        return TrapezoidReport(False, l - 1 - bwd[0], bwd[1])
    try:
        st = stable_length(a)
    except ShapeViolation:
        return TrapezoidReport(True)
    return TrapezoidReport(True, i0=st.i0, sl=st.sl)


@dataclass(frozen=True)
class StableLength:
    i0: int
    sl: int


def stable_length(c: CoeffSeq | Sequence[int]) -> StableLength:
    """Plateau start and stable length of a strictly trapezoidal sequence.

    Raises :class:`ShapeViolation` (with a 0-based witness index) unless
    ``a_0 < ... < a_{i0-1} = ... = a_{l-i0} > ... > a_{l-1}``.
    """
    a = _coeffs(c)
    l = len(a)
    p = 0
    while p + 1 < l and a[p] < a[p + 1]:
        p += 1
    q = l - 1
    while q > 0 and a[q - 1] > a[q]:
        q -= 1
    if p > q:
        raise ShapeViolation("increasing and decreasing runs overlap", q)
    for i in range(p, q):
        if a[i] != a[i + 1]:
            raise ShapeViolation("sequence is not strictly increasing, constant, strictly decreasing", i)
    if p != l - 1 - q:
        raise ShapeViolation("plateau is not centred", p if p < l - 1 - q else q)
    i0 = p + 1
    return StableLength(i0, l - 2 * (i0 - 1))


@dataclass(frozen=True)
class HMResult:
    holds: bool
    sharp: bool
    lhs: int
    rhs: int
    i0: int
    sl: int


def hm_check(c: CoeffSeq | Sequence[int], s: SignatureValue | int) -> HMResult:
    """Compare floor((|sigma| + 1) / 2) with floor(sl / 2)."""
    st = stable_length(c)
    sigma = s.sigma if isinstance(s, SignatureValue) else int(s)
    lhs = (abs(sigma) + 1) // 2
    rhs = st.sl // 2
    return HMResult(lhs >= rhs, lhs == rhs, lhs, rhs, st.i0, st.sl)


def leading_inequalities(c: CoeffSeq | Sequence[int]) -> int:
    """How many of the inequalities a_0 <= a_1 <= ... hold from both ends, up to the middle."""
    a = _coeffs(c)
    l = len(a)
    k = 0
    while k < (l - 1) // 2 and a[k] <= a[k + 1] and a[l - 1 - k] <= a[l - 2 - k]:
        k += 1
    return k


def prefix_holds(c: CoeffSeq | Sequence[int], n: int) -> bool:
    """At least ``n`` leading inequalities hold (all of them, if there are fewer)."""
    a = _coeffs(c)
    return leading_inequalities(a) >= min(n, (len(a) - 1) // 2)


# ----------------------------------------------------------------------
# Fox-Milnor


@dataclass(frozen=True)
class ConcordanceCert:
    """``factor`` f satisfies eps * Delta = f(t) f(1/t) t^deg f, or is None.

    ``bound`` caps every |f_i|; it follows from sum f_i^2 = |middle
    coefficient|, so a None factor is a proof that no integer solution exists.
    ``candidates`` counts the search nodes visited, pruned ones included.
    """

    factor: LaurentPoly | None
    bound: int
    sign: int = 1
    candidates: int = 0

    @property
    def found(self) -> bool:
        return self.factor is not None


def _reciprocal(f: tuple[int, ...]) -> tuple[int, ...]:
    return f[::-1]


def _canonical_factor(f: tuple[int, ...]) -> tuple[int, ...]:
    options = []
    for g in (f, _reciprocal(f)):
        if g[-1] < 0:
            g = tuple(-x for x in g)
        options.append(g)
    return max(options, key=lambda g: (abs(g[-1]), g))


def fox_milnor(c: CoeffSeq | Sequence[int] | LaurentPoly) -> ConcordanceCert:
    """Exhaustive search for an integer f with Delta = +-f(t) f(1/t) t^deg f."""
    if isinstance(c, LaurentPoly):
        poly = c.shift(-c.low)
    elif isinstance(c, CoeffSeq):
        poly = c.poly
    else:
        poly = CoeffSeq(tuple(c)).poly
    d = list(poly.coeffs)
    l = len(d)
    if l > FOX_MILNOR_MAX_LENGTH:
        raise BudgetExceeded(f"sequence of length {l} exceeds the search limit {FOX_MILNOR_MAX_LENGTH}")
    if l % 2 == 0 or d != d[::-1]:
        return ConcordanceCert(None, 0)
    n = (l - 1) // 2
    eps = 1 if d[n] > 0 else -1
    target = [eps * x for x in d[n:]]  # target[k] = required autocorrelation at lag k
    total = target[0]
    bound = math.isqrt(total)
    solutions: set[tuple[int, ...]] = set()
    tried = 0

    def lag(f, k):
        return sum(f[i] * f[i + k] for i in range(n + 1 - k))

    # outside-in: choose f_0, f_n, then (f_j, f_{n-j}) for j = 1, 2, ...
    for f0 in range(1, bound + 1):
        if target[n] % f0:
            continue
        fn = target[n] // f0
        if abs(fn) > bound:
            continue
        f = [0] * (n + 1)
        f[0] = f0
        f[n] = fn if n else f0
        if n == 0:
            tried += 1
            if f0 * f0 == total:
                solutions.add((f0,))
            continue
        stack = [(1, f[:])]
        while stack:
            j, g = stack.pop()
            tried += 1
            used = sum(x * x for x in g)  # unassigned entries are still 0
            if used > total:
                continue
            if j > n - j:
                if all(lag(g, k) == target[k] for k in range(n + 1)):
                    solutions.add(tuple(g))
                continue
            room = math.isqrt(total - used)
            for fj in range(-room, room + 1):
                h = g[:]
                h[j] = fj
                if j == n - j:
                    stack.append((j + 1, h))
                    continue
                # lag n-j pairs f_i with f_{i+n-j}; only f_{n-j} (with f_0) is unknown
                known = sum(h[i] * h[i + n - j] for i in range(1, j + 1))
                rest = target[n - j] - known
                if rest % h[0]:
                    continue
                h[n - j] = rest // h[0]
                stack.append((j + 1, h))
    if not solutions:
        return ConcordanceCert(None, bound, eps, tried)
    best = max((_canonical_factor(s) for s in solutions), key=lambda g: (abs(g[-1]), g))
    return ConcordanceCert(LaurentPoly(best), bound, eps, tried)


def verify_fox_milnor(c: CoeffSeq | LaurentPoly, cert: ConcordanceCert) -> bool:
    """Re-multiply the certificate and compare with Delta."""
    if cert.factor is None:
        return False
    poly = c.poly if isinstance(c, CoeffSeq) else c.shift(-c.low)
    f = cert.factor
    prod = f * f.substitute_inverse() * LaurentPoly.monomial(1, f.high)
    return prod * cert.sign == poly


@dataclass(frozen=True)
class ConcordanceBound:
    holds: bool
    sl: int
    bound: int


def concordance_bound_check(c: CoeffSeq | Sequence[int], rep: CoeffSeq | Sequence[int]) -> ConcordanceBound:
    """Check sl(c) <= length(rep) for a supplied algebraically concordant representative."""
    sl = stable_length(c).sl
    bound = len(_coeffs(rep))
    return ConcordanceBound(sl <= bound, sl, bound)


# ----------------------------------------------------------------------
# ratios


@dataclass(frozen=True)
class RatioStats:
    max_ascending: Fraction | None
    max_descending: Fraction | None
    log_concave: bool
    log_concave_failure: int | None  # 0-based index i with a_i^2 < a_{i-1} a_{i+1}


def ratio_scan(c: CoeffSeq | Sequence[int]) -> RatioStats:
    a = _coeffs(c)
    _positive(a)
    l = len(a)
    m = (l - 1) // 2
    asc = [Fraction(a[i], a[i + 1]) for i in range(m)]
    desc = [Fraction(a[i + 1], a[i]) for i in range(m, l - 1)]
    failure = next((i for i in range(1, l - 1) if a[i] * a[i] < a[i - 1] * a[i + 1]), None)
    return RatioStats(max(asc, default=None), max(desc, default=None), failure is None, failure)


__all__ = [
    "TrapezoidReport", "StableLength", "HMResult", "ConcordanceCert", "ConcordanceBound",
    "RatioStats", "is_trapezoidal", "stable_length", "hm_check", "leading_inequalities",
    "prefix_holds", "fox_milnor", "verify_fox_milnor", "concordance_bound_check", "ratio_scan",
]
