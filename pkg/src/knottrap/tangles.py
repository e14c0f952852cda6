"""
Building alternating diagrams from tangle expressions.

Only the underlying 4-valent planar graph is assembled here; crossing
information is assigned afterwards so that every strand alternates.  A
tangle is a planar graph with four boundary ports NW, NE, SE, SW.  Ports at
each vertex are numbered clockwise, so ports ``p`` and ``p + 2`` belong to the
same strand.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .diagram import LinkDiagram, orient_pd
from .errors import DiagramError

Port = tuple[int, int]


@dataclass(frozen=True)
class Tangle:
    """``edges`` joins internal ports; ``boundary`` lists the free ports NW, NE, SE, SW."""

    nverts: int
    edges: tuple[tuple[Port, Port], ...]
    boundary: tuple[Port, Port, Port, Port]

    def shifted(self, k: int) -> Tangle:
        def mv(p: Port) -> Port:
            return (p[0] + k, p[1])

        return Tangle(
            self.nverts,
            tuple((mv(a), mv(b)) for a, b in self.edges),
            tuple(mv(p) for p in self.boundary),
        )

    def rotate(self) -> Tangle:
        """Quarter turn clockwise: the old SW port becomes NW."""
        nw, ne, se, sw = self.boundary
        return Tangle(self.nverts, self.edges, (sw, nw, ne, se))

    def reflect(self) -> Tangle:
        """Mirror the embedding across the NW-SE diagonal."""

        def mv(p: Port) -> Port:
            return (p[0], -p[1] % 4)

        nw, ne, se, sw = (mv(p) for p in self.boundary)
        return Tangle(self.nverts, tuple((mv(a), mv(b)) for a, b in self.edges), (nw, sw, se, ne))

    def key(self) -> tuple:
        """Canonical form under relabelling of vertices and of ports around a vertex.

        Vertices are numbered in breadth-first order from the NW port, and each
        vertex's ports are rotated so that the port it was reached through is 0.
        """
        other = {}
        for a, b in self.edges:
            other[a] = b
            other[b] = a
        order: dict[int, tuple[int, int]] = {}
        queue = []

        def visit(p: Port):
            if p[0] not in order:
                order[p[0]] = (len(order), p[1])
                queue.append(p[0])

        for p in self.boundary:
            visit(p)
            i = 0
            while i < len(queue):
                v = queue[i]
                i += 1
                for s in range(4):
                    q = other.get((v, (order[v][1] + s) % 4))
                    if q is not None:
                        visit(q)
            queue.clear()
        if len(order) != self.nverts:
            raise DiagramError("tangle has a closed component without boundary")

        def mv(p: Port) -> Port:
            idx, off = order[p[0]]
            return (idx, (p[1] - off) % 4)

        edges = tuple(sorted(tuple(sorted((mv(a), mv(b)))) for a, b in self.edges))
        return (edges, tuple(mv(p) for p in self.boundary))


CROSSING = Tangle(1, (), ((0, 0), (0, 1), (0, 2), (0, 3)))


def tangle_sum(a: Tangle, b: Tangle) -> Tangle:
    """Place ``b`` to the right of ``a``."""
    b = b.shifted(a.nverts)
    anw, ane, ase, asw = a.boundary
    bnw, bne, bse, bsw = b.boundary
    return Tangle(
        a.nverts + b.nverts,
        a.edges + b.edges + ((ane, bnw), (ase, bsw)),
        (anw, bne, bse, asw),
    )


def tangle_stack(a: Tangle, b: Tangle) -> Tangle:
    """Place ``b`` below ``a``."""
    b = b.shifted(a.nverts)
    anw, ane, ase, asw = a.boundary
    bnw, bne, bse, bsw = b.boundary
    return Tangle(
        a.nverts + b.nverts,
        a.edges + b.edges + ((asw, bnw), (ase, bne)),
        (anw, ane, bse, bsw),
    )


def tangle_product(a: Tangle, b: Tangle) -> Tangle:
    """Conway product: ``a`` reflected, then summed with ``b``."""
    return tangle_sum(a.reflect(), b)


def rational_tangle(cf: Sequence[int], vertical: bool = False) -> Tangle:
    """Rational tangle from a continued fraction with positive entries.

    Entries alternate between horizontal and vertical twisting, starting
    horizontally, or vertically when ``vertical`` is set.
    """
    if not cf or any(a <= 0 for a in cf):
        raise ValueError("continued fraction entries must be positive")
    t = CROSSING
    horizontal = not vertical
    for k, a in enumerate(cf):
        for _ in range(a - 1 if k == 0 else a):
            t = tangle_sum(t, CROSSING) if horizontal else tangle_stack(t, CROSSING)
        horizontal = not horizontal
    return t


def _closure(t: Tangle, extra: tuple[tuple[Port, Port], ...]) -> list[tuple[Port, Port]]:
    return list(t.edges + extra)


def numerator(t: Tangle) -> list[tuple[Port, Port]]:
    nw, ne, se, sw = t.boundary
    return _closure(t, ((nw, ne), (sw, se)))


def denominator(t: Tangle) -> list[tuple[Port, Port]]:
    nw, ne, se, sw = t.boundary
    return _closure(t, ((nw, sw), (ne, se)))


def alternating_quads(nverts: int, edges: Sequence[tuple[Port, Port]]) -> list[tuple[int, ...]]:
    """Unoriented PD quads of the alternating diagram on a 4-valent planar graph."""
    other = {}
    for p, q in edges:
        other[p] = q
        other[q] = p
    if len(other) != 4 * nverts:
        raise DiagramError("graph has dangling ports")
    # under[v] is the parity of the two ports carrying the under-strand
    under: list[int | None] = [None] * nverts
    for root in range(nverts):
        if under[root] is not None:
            continue
        under[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            for p in range(4):
                v, q = other[(u, p)]
                # under at (u, p) forces over at (v, q) and vice versa
                need = 1 - q % 2 if p % 2 == under[u] else q % 2
                if under[v] is None:
                    under[v] = need
                    stack.append(v)
                elif under[v] != need:
                    raise DiagramError("graph admits no alternating assignment")
    label = {}
    for i, (p, q) in enumerate(edges, 1):
        label[p] = label[q] = i
    return [tuple(label[(v, (under[v] + k) % 4)] for k in range(4)) for v in range(nverts)]


def alternating_diagram(nverts: int, edges: Sequence[tuple[Port, Port]]) -> LinkDiagram:
    return orient_pd(alternating_quads(nverts, edges))


def substitute(quads: Sequence[Sequence[int]], vertex: int, t: Tangle) -> tuple[int, list[tuple[Port, Port]]]:
    """Replace one vertex of a PD-coded graph by a tangle; returns (nverts, edges).

    The tangle's NW, NE, SE, SW ports take the places of slots 0, 1, 2, 3 of
    the replaced crossing.
    """
    n = len(quads)
    ends: dict[int, list[Port]] = {}
    t = t.shifted(n - 1)
    for v, q in enumerate(quads):
        for s, lab in enumerate(q):
            if v == vertex:
                port = t.boundary[s]
            else:
                port = (v if v < vertex else v - 1, s)
            ends.setdefault(lab, []).append(port)
    edges = [tuple(ps) for ps in ends.values()]
    if any(len(e) != 2 for e in edges):
        raise DiagramError("every label must occur exactly twice")
    return n - 1 + t.nverts, edges + list(t.edges)


def montesinos(*cfs: Sequence[int]) -> LinkDiagram:
    """Numerator closure of a sum of vertical rational tangles."""
    t = rational_tangle(cfs[0], vertical=True)
    for cf in cfs[1:]:
        t = tangle_sum(t, rational_tangle(cf, vertical=True))
    return alternating_diagram(t.nverts, numerator(t))


def two_bridge(cf: Sequence[int]) -> LinkDiagram:
    """Numerator closure of a single rational tangle (a 2-bridge link)."""
    t = rational_tangle(cf, vertical=True)
    return alternating_diagram(t.nverts, numerator(t))


def pretzel(*twists: int) -> LinkDiagram:
    return montesinos(*[(n,) for n in twists])
