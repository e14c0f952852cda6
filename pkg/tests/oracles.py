"""
Independent reference computations used to cross-check the library.

These use different mathematics from the code under test: Traczyk's state
circle formula for signatures of reduced alternating diagrams, the matrix
tree theorem on the Tait graph for determinants, and sympy factorization
for Fox-Milnor factorizability.
"""

from __future__ import annotations

from fractions import Fraction

import sympy

from knottrap.diagram import LinkDiagram


def _state_circles(d: LinkDiagram, pairs: tuple[tuple[int, int], ...]) -> int:
    """Circles after smoothing every crossing by joining the given slot pairs."""
    parent = {}

    def find(u):
        while parent.setdefault(u, u) != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        return u

    def union(u, v):
        parent[find(u)] = find(v)

    for x, c in enumerate(d.crossings):
        for s, label in enumerate(c.slots):
            union(("arc", label), ("arc", label))
        for s, t in pairs:
            union(("arc", c.slots[s]), ("arc", c.slots[t]))
    return len({find(u) for u in list(parent)})


def state_circles_A(d: LinkDiagram) -> int:
    return _state_circles(d, ((1, 2), (3, 0)))


def state_circles_B(d: LinkDiagram) -> int:
    return _state_circles(d, ((0, 1), (2, 3)))


def traczyk_signature(d: LinkDiagram) -> int:
    """sigma = s_A - n_+ - 1 for a reduced alternating diagram (positive trefoil -> -2)."""
    n_plus = sum(1 for c in d.crossings if c.sign > 0)
    return state_circles_A(d) - n_plus - 1


def tait_determinant(d: LinkDiagram) -> int:
    """Spanning-tree count of a Tait graph, which is det(L) for alternating diagrams."""
    colors = d.face_colors
    black = sorted(f for f, col in enumerate(colors) if col == 0)
    pos = {f: i for i, f in enumerate(black)}
    n = len(black)
    lap = [[Fraction(0)] * n for _ in range(n)]
    for x in range(len(d.crossings)):
        fs = [d.corner_face[(x, j)] for j in range(4)]
        ends = [f for f in fs if colors[f] == 0]
        u, v = pos[ends[0]], pos[ends[1]]
        if u != v:
            lap[u][u] += 1
            lap[v][v] += 1
            lap[u][v] -= 1
            lap[v][u] -= 1
    if n <= 1:
        return 1
    minor = sympy.Matrix([row[1:] for row in lap[1:]])
    return abs(int(minor.det()))


def fox_milnor_factorable(coeffs) -> bool:
    """Whether +-Delta = f(t) f(1/t) up to units, decided by factoring over Z.

    For palindromic Delta the non-reciprocal irreducible factors pair off
    with their reciprocals automatically; the obstruction is an odd
    multiplicity of a self-reciprocal factor or a non-square content.
    """
    t = sympy.Symbol("t")
    poly = sympy.Poly(list(reversed(coeffs)), t)
    content, factors = sympy.factor_list(poly.as_expr(), t)
    if sympy.sqrt(abs(content)).is_integer is not True:
        return False
    for g, mult in factors:
        gp = sympy.Poly(g, t)
        rev = sympy.Poly(list(reversed(gp.all_coeffs())), t)
        if (rev == gp or rev == -gp) and mult % 2:
            return False
    return True
