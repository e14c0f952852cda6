"""
Alexander polynomial (three routes), signature, determinant and genus.

Conventions are anchored on the positive trefoil, the closure of
``sigma_1^3``: its Alexander polynomial is ``t^2 - t + 1`` up to units and
its signature is -2.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import NamedTuple

from .diagram import BraidWord, LinkDiagram, braid_closure, seifert_circles
from .errors import BudgetExceeded, DiagramError, PreconditionError, SplitDiagramError
from .polyalg import (ONE, ZERO, CoeffSeq, Inertia, LaurentPoly, T, det_poly_matrix,
                      geometric_sum, matmul, normalize_alexander, signature_exact)

# ----------------------------------------------------------------------
# Wirtinger / Fox matrix


def wirtinger_arcs(d: LinkDiagram) -> dict[int, int]:
    """Map each PD edge to the index of the over-arc (Wirtinger generator) containing it."""
    parent = {e: e for e in d.arc_ends}

    def find(e):
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    for c in d.crossings:
        parent[find(c.over_in)] = find(c.over_out)
    roots = sorted({find(e) for e in parent})
    index = {r: i for i, r in enumerate(roots)}
    return {e: index[find(e)] for e in parent}


def alexander_matrix(d: LinkDiagram) -> list[list[LaurentPoly]]:
    """Abelianized Fox Jacobian of the Wirtinger presentation (crossings x generators).

    Positive crossing: over ``1 - t``, incoming under ``t``, outgoing under ``-1``.
    Negative crossing: over ``1 - t``, incoming under ``-1``, outgoing under ``t``.
    """
    gen = wirtinger_arcs(d)
    ngen = len(set(gen.values()))
    if ngen != len(d.crossings):
        raise SplitDiagramError("a component never passes under another strand (split link)")
    rows = []
    one_minus_t = ONE - T
    for c in d.crossings:
        row = [ZERO] * ngen
        row[gen[c.over_in]] = row[gen[c.over_in]] + one_minus_t
        inc, out = (T, -ONE) if c.sign > 0 else (-ONE, T)
        row[gen[c.under_in]] = row[gen[c.under_in]] + inc
        row[gen[c.under_out]] = row[gen[c.under_out]] + out
        rows.append(row)
    return rows


def alexander_poly_pd(d: LinkDiagram) -> LaurentPoly:
    """Alexander polynomial (up to units) from a first minor of the Fox matrix."""
    M = alexander_matrix(d)
    minor = [row[:-1] for row in M[:-1]]
    if not minor:
        return ONE
    return det_poly_matrix(minor)


def alexander_pd(d: LinkDiagram) -> CoeffSeq:
    p = alexander_poly_pd(d)
    if not p:
        raise DiagramError("Alexander polynomial vanished on a non-split diagram")
    return normalize_alexander(p)


# ----------------------------------------------------------------------
# reduced Burau representation


def reduced_burau(letter: int, n: int) -> list[list[LaurentPoly]]:
    """(n-1)x(n-1) reduced Burau matrix of ``sigma_|letter|^{sign(letter)}``."""
    i = abs(letter)
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator {letter} out of range for {n} strands")
    m = n - 1
    M = [[ONE if r == c else ZERO for c in range(m)] for r in range(m)]
    k = i - 1  # row/column of the -t entry
    tinv = LaurentPoly([1], -1)
    if letter > 0:
        M[k][k] = -T
        if k > 0:
            M[k - 1][k] = T
        if k < m - 1:
            M[k + 1][k] = ONE
    else:
        M[k][k] = -tinv
        if k > 0:
            M[k - 1][k] = ONE
        if k < m - 1:
            M[k + 1][k] = tinv
    return M


def burau_matrix(b: BraidWord) -> list[list[LaurentPoly]]:
    m = b.strands - 1
    M = [[ONE if r == c else ZERO for c in range(m)] for r in range(m)]
    for w in b.word:
        M = matmul(M, reduced_burau(w, b.strands))
    return M


def alexander_poly_burau(b: BraidWord) -> LaurentPoly:
    """``det(rho(b) - I) / (1 + t + ... + t^(n-1))``, an exact division."""
    M = burau_matrix(b)
    for r in range(len(M)):
        M[r][r] = M[r][r] - ONE
    det = det_poly_matrix(M)
    return det.exact_div(geometric_sum(b.strands))


def alexander_burau(b: BraidWord) -> CoeffSeq:
    braid_closure(b)  # rejects split closures
    p = alexander_poly_burau(b)
    if not p:
        raise DiagramError(f"Burau route gave zero for the non-split closure of {b}")
    return normalize_alexander(p)


# ----------------------------------------------------------------------
# Conway polynomial by the skein relation


class _Cr(NamedTuple):
    under_in: int
    under_out: int
    over_in: int
    over_out: int
    sign: int


def _successor(crs: tuple[_Cr, ...]) -> tuple[dict[int, int], dict[int, tuple[int, bool]]]:
    nxt, head = {}, {}
    for x, c in enumerate(crs):
        nxt[c.under_in] = c.under_out
        nxt[c.over_in] = c.over_out
        head[c.under_in] = (x, True)
        head[c.over_in] = (x, False)
    return nxt, head


def _canonical(crs: tuple[_Cr, ...]) -> tuple[_Cr, ...]:
    """Relabel arcs 0.. along components ordered by smallest label."""
    nxt, _ = _successor(crs)
    new = {}
    for start in sorted(nxt):
        e = start
        while e not in new:
            new[e] = len(new)
            e = nxt[e]
    return tuple(sorted(_Cr(new[c.under_in], new[c.under_out], new[c.over_in], new[c.over_out],
                            c.sign) for c in crs))


def _connected(crs: tuple[_Cr, ...]) -> bool:
    owner = defaultdict(list)
    for x, c in enumerate(crs):
        for e in c[:4]:
            owner[e].append(x)
    seen = {0}
    stack = [0]
    while stack:
        c = crs[stack.pop()]
        for e in c[:4]:
            for y in owner[e]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return len(seen) == len(crs)


def _num_components(crs) -> int:
    nxt, _ = _successor(crs)
    seen, count = set(), 0
    for start in nxt:
        if start not in seen:
            count += 1
            e = start
            while e not in seen:
                seen.add(e)
                e = nxt[e]
    return count


def _smooth(crs: tuple[_Cr, ...], x: int) -> tuple[tuple[_Cr, ...], int]:
    """Oriented smoothing at crossing ``x``; returns the rest and the number of free loops."""
    c = crs[x]
    parent = {}

    def find(e):
        parent.setdefault(e, e)
        while parent[e] != e:
            e = parent[e]
        return e

    for u, v in ((c.under_in, c.over_out), (c.over_in, c.under_out)):
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    rest = tuple(_Cr(*(find(e) if e in parent else e for e in r[:4]), r.sign)
                 for i, r in enumerate(crs) if i != x)
    used = {e for r in rest for e in r[:4]}
    classes = {find(e) for e in c[:4]}
    loops = sum(1 for k in classes if k not in used)
    return rest, loops


def conway_skein(d: LinkDiagram, max_crossings: int = 12) -> LaurentPoly:
    """Conway polynomial in ``z`` (as a LaurentPoly in one variable) by skein recursion.

    Each step switches the first crossing that is met as an under-crossing
    before it is met as an over-crossing, walking the components from fixed
    base points; descending diagrams are unlinks.  The memo table lives only
    for this call.
    """
    if len(d.crossings) > max_crossings:
        raise BudgetExceeded(f"{len(d.crossings)} crossings exceeds the skein budget {max_crossings}")
    z = LaurentPoly([1], 1)
    memo: dict[tuple[_Cr, ...], LaurentPoly] = {}

    def nabla(crs: tuple[_Cr, ...]) -> LaurentPoly:
        crs = _canonical(crs)
        if crs in memo:
            return memo[crs]
        if not _connected(crs):
            memo[crs] = ZERO
            return ZERO
        nxt, head = _successor(crs)
        met = set()
        bad = None
        done = set()
        for start in sorted(nxt):
            e = start
            while e not in done and bad is None:
                done.add(e)
                x, under = head[e]
                if x not in met:
                    met.add(x)
                    if under:
                        bad = x
                e = nxt[e]
            if bad is not None:
                break
        if bad is None:
            result = ONE if _num_components(crs) == 1 else ZERO
        else:
            c = crs[bad]
            switched = _Cr(c.over_in, c.over_out, c.under_in, c.under_out, -c.sign)
            other = crs[:bad] + (switched,) + crs[bad + 1:]
            rest, loops = _smooth(crs, bad)
            if not rest:
                smooth_val = ONE if loops == 1 else ZERO
            elif loops:
                smooth_val = ZERO
            else:
                smooth_val = nabla(rest)
            # L+ - L- = z L0
            term = z * smooth_val
            result = nabla(other) + (term if c.sign > 0 else -term)
        memo[crs] = result
        return result

    start = tuple(_Cr(c.under_in, c.under_out, c.over_in, c.over_out, c.sign) for c in d.crossings)
    return nabla(start)


def conway_to_alexander(nabla: LaurentPoly) -> LaurentPoly:
    """Substitute ``z = t^(1/2) - t^(-1/2)``; the result is correct up to units."""
    if not nabla:
        return ZERO
    parities = {e % 2 for e in nabla.terms()}
    if len(parities) != 1:
        raise ValueError(f"Conway polynomial {nabla} mixes parities")
    z2 = LaurentPoly([1, -2, 1], -1)
    odd = parities.pop()
    acc = ZERO
    for e, c in nabla.terms().items():
        acc = acc + c * z2 ** (e // 2)
    return acc * (T - ONE) if odd else acc


# ----------------------------------------------------------------------
# signature


@dataclass(frozen=True)
class SignatureValue:
    sigma: int
    convention: str = "positive-trefoil=-2"

    def __int__(self):
        return self.sigma

    def __neg__(self):
        return SignatureValue(-self.sigma, self.convention)


def goeritz_data(d: LinkDiagram, shaded: int = 0) -> tuple[list[list[int]], int]:
    """Goeritz matrix (one unshaded face deleted) and the Gordon-Litherland correction.

    ``shaded`` picks the colour class forming the spanning surface.  At each
    crossing ``eta = +1`` when the A-smoothing joins the shaded corners.  A
    crossing is of type II when its oriented smoothing joins the shaded
    corners; the correction is the sum of ``eta`` over type II crossings.
    """
    colors = d.face_colors
    unshaded = [f for f, col in enumerate(colors) if col != shaded]
    pos = {f: i for i, f in enumerate(unshaded)}
    k = len(unshaded)
    G = [[0] * k for _ in range(k)]
    correction = 0
    for x, c in enumerate(d.crossings):
        a_face = d.corner_face[(x, 0)]
        eta = 1 if colors[a_face] == shaded else -1
        if eta == c.sign:
            correction += eta
        j0 = 1 if eta == 1 else 0
        f, g = d.corner_face[(x, j0)], d.corner_face[(x, j0 + 2)]
        if f != g:
            i, j = pos[f], pos[g]
            G[i][j] -= eta
            G[j][i] -= eta
            G[i][i] += eta
            G[j][j] += eta
    return [row[:-1] for row in G[:-1]], correction


def signature(d: LinkDiagram, shaded: int = 0) -> SignatureValue:
    """Signature via the Gordon-Litherland formula on a checkerboard surface."""
    G, correction = goeritz_data(d, shaded)
    inertia = signature_exact(G) if G else Inertia(0, 0, 0)
    return SignatureValue(inertia.signature - correction)


# ----------------------------------------------------------------------
# genus and determinant


@dataclass(frozen=True)
class GenusInfo:
    g: int
    source: str  # "span-formula" or "seifert-surface"


def genus_from_span(c: CoeffSeq, components: int) -> GenusInfo:
    twice = c.length - components
    if twice < 0 or twice % 2:
        raise PreconditionError(
            f"span {c.length - 1} is incompatible with {components} components")
    return GenusInfo(twice // 2, "span-formula")


def genus_from_seifert(d: LinkDiagram) -> GenusInfo:
    s = seifert_circles(d).num_circles
    twice = 2 - d.num_components - s + len(d.crossings)
    return GenusInfo(twice // 2, "seifert-surface")


def genus_alternating(d: LinkDiagram, c: CoeffSeq | None = None) -> tuple[GenusInfo, GenusInfo]:
    """Genus from the Alexander span and from Seifert's algorithm on ``d``.

    For reduced alternating diagrams the two agree; callers compare them.
    """
    if c is None:
        c = alexander_pd(d)
    return genus_from_span(c, d.num_components), genus_from_seifert(d)


def link_determinant(c: CoeffSeq) -> int:
    """``|Delta(-1)|``, which is the plain sum when signs alternate."""
    return abs(c.poly(-1))


__all__ = [
    "alexander_matrix", "alexander_poly_pd", "alexander_pd", "reduced_burau", "burau_matrix",
    "alexander_poly_burau", "alexander_burau", "conway_skein", "conway_to_alexander",
    "SignatureValue", "goeritz_data", "signature", "GenusInfo", "genus_from_span",
    "genus_from_seifert", "genus_alternating", "link_determinant", "wirtinger_arcs",
]
