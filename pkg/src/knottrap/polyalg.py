"""
Exact integer algebra: one-variable Laurent polynomials, multivariate
polynomials, determinants of polynomial matrices and the inertia of
symmetric rational matrices.

Everything here works with Python integers and :class:`fractions.Fraction`,
so no result is ever rounded.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Sequence


class LaurentPoly:
    """Dense integer Laurent polynomial ``sum(coeffs[i] * t**(low + i))``.

    Instances are immutable and hashable.  Leading and trailing zero
    coefficients are trimmed on construction; the zero polynomial has
    ``coeffs == ()`` and ``low == 0``.
    """

    __slots__ = ("low", "coeffs")

    def __init__(self, coeffs: Iterable[int] = (), low: int = 0):
        cs = [int(c) for c in coeffs]
        start = 0
        while start < len(cs) and cs[start] == 0:
            start += 1
        end = len(cs)
        while end > start and cs[end - 1] == 0:
            end -= 1
        if start == end:
            object.__setattr__(self, "coeffs", ())
            object.__setattr__(self, "low", 0)
        else:
            object.__setattr__(self, "coeffs", tuple(cs[start:end]))
            object.__setattr__(self, "low", low + start)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls([c])

    @classmethod
    def monomial(cls, c: int, e: int) -> LaurentPoly:
        return cls([c], e)

    @classmethod
    def from_dict(cls, terms: Mapping[int, int]) -> LaurentPoly:
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        return cls([terms.get(e, 0) for e in range(lo, hi + 1)], lo)

    @property
    def high(self) -> int:
        return self.low + len(self.coeffs) - 1

    @property
    def span(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def terms(self) -> dict[int, int]:
        return {self.low + i: c for i, c in enumerate(self.coeffs) if c}

    def coeff(self, e: int) -> int:
        i = e - self.low
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    # ring operations -------------------------------------------------

    @staticmethod
    def _coerce(other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        lo = min(self.low, other.low)
        hi = max(self.high, other.high)
        out = [0] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            out[self.low - lo + i] += c
        for i, c in enumerate(other.coeffs):
            out[other.low - lo + i] += c
        return LaurentPoly(out, lo)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly([-c for c in self.coeffs], self.low)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return LaurentPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return LaurentPoly(out, self.low + other.low)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if len(self.coeffs) != 1 or abs(self.coeffs[0]) != 1:
                raise ValueError("only units can be raised to negative powers")
            return LaurentPoly([self.coeffs[0] ** n], self.low * n)
        result = LaurentPoly([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly([other])
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.low == other.low and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.low, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``t**k``."""
        return LaurentPoly(self.coeffs, self.low + k)

    def substitute_inverse(self) -> LaurentPoly:
        """Return ``p(1/t)``."""
        return LaurentPoly(self.coeffs[::-1], -self.high) if self.coeffs else self

    def __call__(self, x):
        """Evaluate at an integer (or Fraction); negative exponents need x != 0."""
        if not self.coeffs:
            return 0
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        if self.low >= 0:
            return acc * x ** self.low
        value = Fraction(acc) / Fraction(x) ** (-self.low)
        return value.numerator if value.denominator == 1 else value

    evaluate = __call__

    def exact_div(self, other: LaurentPoly) -> LaurentPoly:
        """Quotient in Z[t, 1/t]; raises ArithmeticError if ``other`` does not divide."""
        other = self._coerce(other)
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self.coeffs:
            return LaurentPoly()
        num = list(self.coeffs)
        den = other.coeffs
        n, m = len(num), len(den)
        if n < m:
            raise ArithmeticError(f"{other} does not divide {self}")
        quot = [0] * (n - m + 1)
        lead = den[-1]
        for k in range(n - m, -1, -1):
            top = num[k + m - 1]
            if top % lead:
                raise ArithmeticError(f"{other} does not divide {self}")
            q = top // lead
            quot[k] = q
            if q:
                for j in range(m):
                    num[k + j] -= q * den[j]
        if any(num):
            raise ArithmeticError(f"{other} does not divide {self}")
        return LaurentPoly(quot, self.low - other.low)

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in range(self.high, self.low - 1, -1):
            c = self.coeff(e)
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


T = LaurentPoly([1], 1)
ONE = LaurentPoly([1])
ZERO = LaurentPoly()


def geometric_sum(n: int) -> LaurentPoly:
    """``1 + t + ... + t**(n-1)``."""
    return LaurentPoly([1] * n)


# ----------------------------------------------------------------------
# multivariate polynomials


@dataclass(frozen=True)
class MultiPoly:
    """Sparse integer polynomial in ``arity`` variables keyed by exponent vectors."""

    arity: int
    terms: Mapping[tuple[int, ...], int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for exps, c in dict(self.terms).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != self.arity:
                raise ValueError(f"exponent vector {exps} does not have arity {self.arity}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            if c:
                clean[exps] = clean.get(exps, 0) + int(c)
        object.__setattr__(self, "terms", {e: c for e, c in sorted(clean.items()) if c})

    def __hash__(self):
        return hash((self.arity, tuple(self.terms.items())))

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    @classmethod
    def variable(cls, i: int, arity: int) -> MultiPoly:
        exps = [0] * arity
        exps[i] = 1
        return cls(arity, {tuple(exps): 1})

    @property
    def support(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self.terms)

    def degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> int:
        return max(self.degrees(), default=0)

    def __add__(self, other: MultiPoly) -> MultiPoly:
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(self.arity, out)

    def __neg__(self):
        return MultiPoly(self.arity, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return MultiPoly(self.arity, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(self.arity, out)

    __rmul__ = __mul__

    def _check(self, other):
        if not isinstance(other, MultiPoly) or other.arity != self.arity:
            raise ValueError("arity mismatch")

    def derivative(self, i: int) -> MultiPoly:
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                out[tuple(f)] = c * e[i]
        return MultiPoly(self.arity, out)

    def permute(self, perm: Sequence[int]) -> MultiPoly:
        """Rename variable ``i`` to ``perm[i]``."""
        out = {}
        for e, c in self.terms.items():
            f = [0] * self.arity
            for i, k in enumerate(e):
                f[perm[i]] = k
            out[tuple(f)] = c
        return MultiPoly(self.arity, out)

    def specialize(self, weights: Sequence[int]) -> LaurentPoly:
        """Substitute ``x_i -> t**weights[i]``."""
        if len(weights) != self.arity:
            raise ValueError("one weight per variable is required")
        acc: dict[int, int] = {}
        for e, c in self.terms.items():
            k = sum(w * x for w, x in zip(weights, e))
            acc[k] = acc.get(k, 0) + c
        return LaurentPoly.from_dict(acc)

    def to_text(self) -> str:
        return "".join(f"{c} : {' '.join(map(str, e))}\n" for e, c in self.terms.items())

    def __str__(self):
        if not self.terms:
            return "0"
        names = [f"x{i}" for i in range(self.arity)]
        parts = []
        for e, c in self.terms.items():
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
            parts.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(parts)


def parse_multipoly(text: str) -> MultiPoly:
    """Parse the ``coefficient : e1 e2 ... ek`` one-term-per-line format.

    Blank lines and ``#`` comments are ignored.
    """
    terms: dict[tuple[int, ...], int] = {}
    arity = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ValueError(f"line {lineno}: expected 'coefficient : exponents'")
        lhs, rhs = line.split(":", 1)
        try:
            c = int(lhs)
            exps = tuple(int(x) for x in rhs.split())
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer token in {raw!r}") from None
        if arity is None:
            arity = len(exps)
        elif len(exps) != arity:
            raise ValueError(f"line {lineno}: arity {len(exps)} differs from {arity}")
        terms[exps] = terms.get(exps, 0) + c
    if arity is None:
        raise ValueError("no terms")
    return MultiPoly(arity, terms)


# ----------------------------------------------------------------------
# determinants


def det_cofactor(M: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Laplace expansion along the first row. Only sensible for tiny matrices."""
    n = len(M)
    if n == 0:
        return ONE
    if n == 1:
        return LaurentPoly._coerce(M[0][0])
    total = ZERO
    for j in range(n):
        entry = M[0][j]
        if not entry:
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = entry * det_cofactor(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def det_bareiss(M: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Fraction-free Bareiss elimination over Z[t, 1/t]."""
    n = len(M)
    if n == 0:
        return ONE
    A = [[LaurentPoly._coerce(x) for x in row] for row in M]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if not A[k][k]:
            for r in range(k + 1, n):
                if A[r][k]:
                    A[k], A[r] = A[r], A[k]
                    sign = -sign
                    break
            else:
                return ZERO
        pivot = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            for j in range(k + 1, n):
                A[i][j] = (pivot * A[i][j] - aik * A[k][j]).exact_div(prev)
            A[i][k] = ZERO
        prev = pivot
    det = A[n - 1][n - 1]
    return det if sign > 0 else -det


def det_poly_matrix(M: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Exact determinant of a square matrix of Laurent polynomials."""
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("matrix is not square")
    if n <= 4:
        return det_cofactor([[LaurentPoly._coerce(x) for x in row] for row in M])
    return det_bareiss(M)


def matmul(A, B):
    n, m, p = len(A), len(B), len(B[0])
    return [[sum((A[i][k] * B[k][j] for k in range(m)), ZERO) for j in range(p)] for i in range(n)]


# ----------------------------------------------------------------------
# inertia of symmetric rational matrices


class Inertia(NamedTuple):
    n_plus: int
    n_minus: int
    n_zero: int

    @property
    def signature(self) -> int:
        return self.n_plus - self.n_minus


def _as_symmetric(M) -> list[list[Fraction]]:
    A = [[Fraction(x) for x in row] for row in M]
    n = len(A)
    if n == 0:
        raise ValueError("empty matrix")
    for i, row in enumerate(A):
        if len(row) != n:
            raise ValueError("matrix is not square")
        for j in range(i):
            if row[j] != A[j][i]:
                raise ValueError(f"matrix is not symmetric at ({i}, {j})")
    return A


def inertia_pivot(M) -> Inertia:
    """Inertia by symmetric Gaussian elimination (congruence) over Q."""
    A = _as_symmetric(M)
    plus = minus = 0
    n = len(A)
    while n:
        k = next((i for i in range(n) if A[i][i]), None)
        if k is None:
            pair = next(((i, j) for i in range(n) for j in range(i + 1, n) if A[i][j]), None)
            if pair is None:
                break
            i, j = pair
            # congruence by (row_i += row_j, col_i += col_j) makes A[i][i] = 2 A[i][j] != 0
            for r in range(n):
                A[i][r] += A[j][r]
            for r in range(n):
                A[r][i] += A[r][j]
            k = i
        p = A[k][k]
        if p > 0:
            plus += 1
        else:
            minus += 1
        rest = [i for i in range(n) if i != k]
        A = [[A[i][j] - A[i][k] * A[k][j] / p for j in rest] for i in rest]
        n -= 1
    return Inertia(plus, minus, len(_as_symmetric(M)) - plus - minus)


def charpoly(M) -> list[Fraction]:
    """Characteristic polynomial coefficients, highest degree first (Faddeev-LeVerrier)."""
    A = [[Fraction(x) for x in row] for row in M]
    n = len(A)
    coeffs = [Fraction(1)]
    Mk = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        c_prev = coeffs[-1]
        Mk = [[sum(A[i][r] * Mk[r][j] for r in range(n)) + (c_prev if i == j else 0)
               for j in range(n)] for i in range(n)]
        AM = [[sum(A[i][r] * Mk[r][j] for r in range(n)) for j in range(n)] for i in range(n)]
        coeffs.append(-sum(AM[i][i] for i in range(n)) / k)
    return coeffs


def _sign_changes(seq: Sequence[Fraction]) -> int:
    signs = [1 if x > 0 else -1 for x in seq if x]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def inertia_charpoly(M) -> Inertia:
    """Inertia from Descartes' rule, exact because symmetric matrices are real-rooted."""
    A = _as_symmetric(M)
    cp = charpoly(A)
    n = len(A)
    zero = 0
    while zero < len(cp) and cp[len(cp) - 1 - zero] == 0:
        zero += 1
    plus = _sign_changes(cp)
    neg = [c * (-1) ** (n - i) for i, c in enumerate(cp)]
    minus = _sign_changes(neg)
    return Inertia(plus, minus, zero)


def signature_exact(M, method: str = "pivot") -> Inertia:
    """Exact inertia ``(n_plus, n_minus, n_zero)`` of a symmetric rational matrix."""
    if method == "pivot":
        return inertia_pivot(M)
    if method == "charpoly":
        return inertia_charpoly(M)
    raise ValueError(f"unknown method {method!r}")


# ----------------------------------------------------------------------
# Alexander coefficient sequences


@dataclass(frozen=True)
class CoeffSeq:
    """Magnitudes ``(a_0, ..., a_{l-1})`` of a unit-normalized Alexander polynomial.

    ``poly`` is the normalized polynomial itself (minimum exponent 0,
    positive constant term).  ``alternating`` records whether its signs
    strictly alternate with no zero coefficients.
    """

    coeffs: tuple[int, ...]
    alternating: bool = True
    poly: LaurentPoly | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("empty coefficient sequence")
        if self.poly is None:
            object.__setattr__(
                self, "poly", LaurentPoly([(-1) ** i * a for i, a in enumerate(self.coeffs)]))

    @property
    def length(self) -> int:
        return len(self.coeffs)

    @property
    def middle(self) -> int:
        """0-based index of the peak position for the trapezoidal clauses."""
        return (len(self.coeffs) - 1) // 2

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __str__(self):
        return "(" + ",".join(map(str, self.coeffs)) + ")"


def normalize_alexander(p: LaurentPoly) -> CoeffSeq:
    """Normalize ``p`` up to the units ``±t^k`` and return its coefficient magnitudes."""
    if not p:
        raise ValueError("cannot normalize the zero polynomial")
    q = p.shift(-p.low)
    if q.coeffs[0] < 0:
        q = -q
    alternating = all(c != 0 and (c > 0) == (i % 2 == 0) for i, c in enumerate(q.coeffs))
    return CoeffSeq(tuple(abs(c) for c in q.coeffs), alternating, q)


def units_equal(p: LaurentPoly, q: LaurentPoly) -> bool:
    """True when ``p = ±t^k q``."""
    if not p or not q:
        return not p and not q
    a = p.shift(-p.low)
    b = q.shift(-q.low)
    return a == b or a == -b


__all__ = [
    "LaurentPoly", "MultiPoly", "Inertia", "CoeffSeq", "T", "ONE", "ZERO",
    "parse_multipoly", "det_cofactor", "det_bareiss", "det_poly_matrix",
    "signature_exact", "inertia_pivot", "inertia_charpoly", "charpoly",
    "normalize_alexander", "units_equal", "geometric_sum", "matmul",
]
