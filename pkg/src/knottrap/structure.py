"""
Twist regions and Murasugi-sum decompositions of alternating diagrams.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .diagram import LinkDiagram, diagram_predicates, seifert_circles, smooth_crossings
from .errors import PreconditionError
from .invariants import alexander_pd, genus_alternating
from .polyalg import CoeffSeq, normalize_alexander


def _require_reduced_alternating(d: LinkDiagram):
    p = diagram_predicates(d)
    if not p.is_alternating:
        raise PreconditionError("diagram is not alternating")
    if not p.is_reduced:
        raise PreconditionError("diagram is not reduced (nugatory crossing present)")


# ----------------------------------------------------------------------
# twist regions


@dataclass(frozen=True)
class TwistRegion:
    """A maximal chain of crossings joined by bigons, listed along the chain."""

    crossings: tuple[int, ...]
    coherent: bool
    sign: int

    @property
    def size(self) -> int:
        return len(self.crossings)


@dataclass(frozen=True)
class TwistProfile:
    regions: tuple[TwistRegion, ...]

    @property
    def MT(self) -> int:
        return max((r.size for r in self.regions if r.coherent), default=0)

    def region_of(self, x: int) -> TwistRegion:
        for r in self.regions:
            if x in r.crossings:
                return r
        raise KeyError(x)


def bigons(d: LinkDiagram) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """Faces with exactly two corners, at two different crossings."""
    return [f for f in d.faces if len(f) == 2 and f[0][0] != f[1][0]]


def _bigon_is_parallel(d: LinkDiagram, face) -> bool:
    # the bigon's edges leave crossing x through slots j and j+1
    x, j = face[0]
    c = d.crossings[x]
    return c.is_incoming(j) == c.is_incoming((j + 1) % 4)


def _chain_order(nodes: set[int], adj: dict[int, set[int]]) -> tuple[int, ...]:
    ends = sorted(v for v in nodes if len(adj[v]) <= 1)
    start = ends[0] if ends else min(nodes)
    order = [start]
    seen = {start}
    while True:
        nxt = sorted(adj[order[-1]] - seen)
        if not nxt:
            break
        order.append(nxt[0])
        seen.add(nxt[0])
    return tuple(order)


def twist_regions(d: LinkDiagram) -> TwistProfile:
    """Partition the crossings into maximal bigon chains.

    A region is coherent when the two strands run through it in parallel;
    a lone crossing counts as a coherent region of size 1.
    """
    _require_reduced_alternating(d)
    adj: dict[int, set[int]] = defaultdict(set)
    parallel: dict[int, bool] = {}
    for face in bigons(d):
        x, y = face[0][0], face[1][0]
        adj[x].add(y)
        adj[y].add(x)
        par = _bigon_is_parallel(d, face)
        parallel[x] = parallel.get(x, False) or par
        parallel[y] = parallel.get(y, False) or par
    seen: set[int] = set()
    regions = []
    for x in range(len(d.crossings)):
        if x in seen:
            continue
        comp = {x}
        stack = [x]
        while stack:
            for y in adj[stack.pop()]:
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        signs = {d.crossings[y].sign for y in comp}
        if len(signs) != 1:
            raise PreconditionError("bigon chain with mixed crossing signs")
        coherent = len(comp) == 1 or any(parallel.get(y, False) for y in comp)
        regions.append(TwistRegion(_chain_order(comp, adj), coherent, signs.pop()))
    return TwistProfile(tuple(regions))


@dataclass(frozen=True)
class TwistConcentration:
    holds: bool
    MT: int
    g: int
    components: int
    margin: Fraction


def is_twist_concentrated(d: LinkDiagram, c: CoeffSeq | None = None) -> TwistConcentration:
    """Decide MT - 3 >= g + |L|/2 exactly; ``margin`` is the left side minus the right."""
    _require_reduced_alternating(d)
    if c is None:
        c = alexander_pd(d)
    g = genus_alternating(d, c)[0].g
    mt = twist_regions(d).MT
    comps = d.num_components
    margin = Fraction(mt - 3) - (g + Fraction(comps, 2))
    return TwistConcentration(margin >= 0, mt, g, comps, margin)


def guaranteed_prefix(d: LinkDiagram | TwistProfile | int) -> int:
    """Number of leading trapezoidal inequalities implied by the largest coherent twist region."""
    if isinstance(d, LinkDiagram):
        mt = twist_regions(d).MT
    elif isinstance(d, TwistProfile):
        mt = d.MT
    else:
        mt = int(d)
    return max(mt - 3, 0)


# ----------------------------------------------------------------------
# Murasugi sums


@dataclass(frozen=True)
class SumEdge:
    parent: int
    child: int
    length: int
    circle: int | None = None


@dataclass(frozen=True)
class Decomposition:
    """A tree of special alternating pieces joined by Murasugi sums.

    ``crossings[k]`` lists the original crossings that make up piece ``k``
    (in the piece's own crossing order).
    """

    pieces: tuple[LinkDiagram, ...]
    crossings: tuple[tuple[int, ...], ...]
    edges: tuple[SumEdge, ...] = ()
    provenance: dict[int, tuple[int, int]] = field(default_factory=dict, compare=False)

    @property
    def num_pieces(self) -> int:
        return len(self.pieces)

    @property
    def max_length(self) -> int:
        return max((e.length for e in self.edges), default=0)

    def lengths(self) -> list[int]:
        return [e.length for e in self.edges]

    def summary(self) -> dict:
        return {"pieces": self.num_pieces, "max_sum_length": self.max_length}

    def to_nested(self) -> list:
        """Nested list form: ``[crossings, [[length, subtree], ...]]`` from piece 0."""
        children = defaultdict(list)
        for e in self.edges:
            children[e.parent].append(e)

        def build(k):
            return [list(self.crossings[k]), [[e.length, build(e.child)] for e in children[k]]]

        return build(0) if self.pieces else []


def _blocks(n_vertices: int, edges: Sequence[tuple[int, int]]) -> list[list[int]]:
    """Biconnected components (as edge-index lists) of a multigraph."""
    adj = defaultdict(list)
    for k, (u, v) in enumerate(edges):
        adj[u].append((v, k))
        adj[v].append((u, k))
    disc = [-1] * n_vertices
    low = [0] * n_vertices
    stack: list[int] = []
    blocks = []
    counter = [0]

    def dfs(u, parent_edge):
        disc[u] = low[u] = counter[0]
        counter[0] += 1
        for v, k in adj[u]:
            if k == parent_edge:
                continue
            if disc[v] == -1:
                stack.append(k)
                dfs(v, k)
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    block = []
                    while True:
                        e = stack.pop()
                        block.append(e)
                        if e == k:
                            break
                    blocks.append(sorted(block))
            elif disc[v] < disc[u]:
                stack.append(k)
                low[u] = min(low[u], disc[v])

    for u in range(n_vertices):
        if disc[u] == -1 and adj[u]:
            dfs(u, None)
    return sorted(blocks)


def _runs(seq: list[int], b: int) -> int:
    """Maximal cyclic runs of ``b`` in ``seq``."""
    n = len(seq)
    if all(v == b for v in seq):
        return 1
    return sum(1 for i in range(n) if seq[i] == b and seq[i - 1] != b)


def _circle_links(circle: int, seq: list[int]) -> list[tuple[int, int, int, int]]:
    """Split the blocks met along one circle into Murasugi sums.

    The block with the fewest runs around the circle is peeled off first;
    its sum length is that number of runs and it is glued to the block that
    follows its first run.
    """
    seq = list(seq)
    links = []
    while len(set(seq)) > 1:
        b = min(sorted(set(seq)), key=lambda v: _runs(seq, v))
        k = next(i for i in range(len(seq)) if seq[i] == b and seq[i - 1] != b)
        while seq[k % len(seq)] == b:
            k += 1
        links.append((b, seq[k % len(seq)], _runs(seq, b), circle))
        seq = [v for v in seq if v != b]
    return links


def decompose_murasugi(d: LinkDiagram) -> Decomposition:
    """Split a reduced alternating diagram into special alternating pieces.

    Pieces are the blocks of the Seifert graph, so every cut circle is a
    gluing disc.  Along a cut circle the blocks are peeled off one at a
    time; a block's sum length is the number of separate runs its crossings
    form around the circle among the blocks still present.
    """
    _require_reduced_alternating(d)
    sd = seifert_circles(d)
    blocks = _blocks(sd.num_circles, sd.edges)
    block_of = {x: b for b, xs in enumerate(blocks) for x in xs}
    pieces = []
    provenance = {}
    for b, xs in enumerate(blocks):
        keep = set(xs)
        pieces.append(smooth_crossings(d, [x for x in range(len(d.crossings)) if x not in keep]))
        for k, x in enumerate(xs):
            provenance[x] = (b, k)
    # blocks meeting at each circle
    at_circle = defaultdict(set)
    for x, (i, j) in enumerate(sd.edges):
        at_circle[i].add(block_of[x])
        at_circle[j].add(block_of[x])
    links = []  # (block, block, length, circle), undirected
    for c in sorted(at_circle):
        if len(at_circle[c]) > 1:
            links += _circle_links(c, [block_of[x] for x, _side in sd.rotation[c]])
    # orient the block tree breadth-first from block 0
    nbrs = defaultdict(list)
    for a, b, length, c in links:
        nbrs[a].append((b, length, c))
        nbrs[b].append((a, length, c))
    edges = []
    done = {0}
    queue = [0]
    while queue:
        b = queue.pop(0)
        for child, length, c in sorted(nbrs[b]):
            if child not in done:
                done.add(child)
                edges.append(SumEdge(b, child, length, c))
                queue.append(child)
    return Decomposition(tuple(pieces), tuple(tuple(xs) for xs in blocks), tuple(edges), provenance)


def sums_below(dec: Decomposition, bound: int) -> bool:
    return all(e.length < bound for e in dec.edges)


def multiplicativity_holds(d: LinkDiagram, dec: Decomposition) -> bool | None:
    """Check Alexander multiplicativity when every sum is a connected sum.

    Returns None when some sum has length greater than one.
    """
    if any(e.length != 1 for e in dec.edges):
        return None
    prod = None
    for p in dec.pieces:
        poly = alexander_pd(p).poly
        prod = poly if prod is None else prod * poly
    whole = alexander_pd(d)
    return normalize_alexander(prod).coeffs == whole.coeffs


__all__ = [
    "TwistRegion", "TwistProfile", "TwistConcentration", "SumEdge", "Decomposition",
    "bigons", "twist_regions", "is_twist_concentrated", "guaranteed_prefix",
    "decompose_murasugi", "sums_below", "multiplicativity_holds",
]
