"""
Oriented planar link diagrams.

A diagram is a list of crossings written as PD quadruples ``X(a,b,c,d)``.
The four arc labels are listed clockwise around the crossing, starting
with the incoming under-strand ``a``; the under-strand leaves through
``c``.  The over-strand runs ``b -> d`` (a positive crossing) or
``d -> b`` (a negative crossing).  When the labels run consecutively
along each component, as they do in every code produced here, this is the
rule "``d == b + 1`` means positive".

Orientation is inferred from the under-strands, which fixes the direction
of every arc that meets at least one under-crossing; the label-successor
rule is only consulted for components that never pass under anything.
"""

from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from .errors import DiagramError, ParseError, SplitDiagramError

UNDER_IN, OVER_B, UNDER_OUT, OVER_D = 0, 1, 2, 3


@dataclass(frozen=True)
class Crossing:
    slots: tuple[int, int, int, int]
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise DiagramError(f"crossing sign must be +1 or -1, got {self.sign}")

    @property
    def under_in(self) -> int:
        return self.slots[0]

    @property
    def under_out(self) -> int:
        return self.slots[2]

    @property
    def over_in(self) -> int:
        return self.slots[1] if self.sign > 0 else self.slots[3]

    @property
    def over_out(self) -> int:
        return self.slots[3] if self.sign > 0 else self.slots[1]

    @property
    def over_in_slot(self) -> int:
        return OVER_B if self.sign > 0 else OVER_D

    @property
    def over_out_slot(self) -> int:
        return OVER_D if self.sign > 0 else OVER_B

    def is_incoming(self, slot: int) -> bool:
        return slot == UNDER_IN or slot == self.over_in_slot

    def switched(self) -> Crossing:
        a, b, c, d = self.slots
        if self.sign > 0:
            # new under-strand is the old over-strand b -> d
            return Crossing((b, c, d, a), -1)
        return Crossing((d, a, b, c), 1)

    def __str__(self):
        return "X({},{},{},{})".format(*self.slots)


class Dart(NamedTuple):
    crossing: int
    slot: int


@dataclass(frozen=True, eq=True)
class LinkDiagram:
    """A validated, connected, oriented planar diagram with at least one crossing.

    Corners are indexed ``(x, j)`` for the wedge between slots ``j`` and
    ``j + 1`` of crossing ``x``.  Corners 0 and 2 are the ones joined by
    the A-smoothing.
    """

    crossings: tuple[Crossing, ...]

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(self.crossings))
        if not self.crossings:
            raise DiagramError("empty diagram")
        self._validate()

    # --- validation -----------------------------------------------------

    def _validate(self):
        seen: dict[int, list[Dart]] = defaultdict(list)
        for x, cr in enumerate(self.crossings):
            for s, label in enumerate(cr.slots):
                if not isinstance(label, int) or label <= 0:
                    raise DiagramError(f"arc labels must be positive integers, got {label!r}")
                seen[label].append(Dart(x, s))
        for label, darts in seen.items():
            if len(darts) != 2:
                raise DiagramError(f"arc {label} appears {len(darts)} times, expected 2")
            ins = [self.crossings[x].is_incoming(s) for x, s in darts]
            if ins[0] == ins[1]:
                raise DiagramError(f"arc {label} is not consistently oriented")
        n = len(self.crossings)
        # connectivity of the 4-valent graph
        adj = defaultdict(set)
        for darts in seen.values():
            (x1, _), (x2, _) = darts
            adj[x1].add(x2)
            adj[x2].add(x1)
        reached = {0}
        stack = [0]
        while stack:
            for y in adj[stack.pop()]:
                if y not in reached:
                    reached.add(y)
                    stack.append(y)
        if len(reached) != n:
            raise SplitDiagramError("diagram is disconnected (split diagrams are not supported)")
        if len(self.faces) != n + 2:
            raise DiagramError(
                f"non-planar code: {len(self.faces)} faces for {n} crossings, expected {n + 2}")

    # --- basic structure ------------------------------------------------

    @cached_property
    def arc_ends(self) -> dict[int, tuple[Dart, Dart]]:
        """label -> (tail dart, head dart)."""
        tmp: dict[int, list[Dart]] = defaultdict(list)
        for x, cr in enumerate(self.crossings):
            for s, label in enumerate(cr.slots):
                tmp[label].append(Dart(x, s))
        out = {}
        for label, (d1, d2) in tmp.items():
            if self.crossings[d1.crossing].is_incoming(d1.slot):
                d1, d2 = d2, d1
            out[label] = (d1, d2)
        return dict(sorted(out.items()))

    @property
    def labels(self) -> list[int]:
        return list(self.arc_ends)

    def partner(self, dart: Dart) -> Dart:
        label = self.crossings[dart.crossing].slots[dart.slot]
        tail, head = self.arc_ends[label]
        return head if dart == tail else tail

    def next_arc(self, label: int) -> int:
        """The arc that continues ``label`` straight through its head crossing."""
        x, s = self.arc_ends[label][1]
        cr = self.crossings[x]
        return cr.slots[UNDER_OUT] if s == UNDER_IN else cr.over_out

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        """Arc labels of each component in orientation order, starting at the smallest."""
        comps = []
        done = set()
        for start in self.arc_ends:
            if start in done:
                continue
            comp = []
            e = start
            while e not in done:
                done.add(e)
                comp.append(e)
                e = self.next_arc(e)
            comps.append(tuple(comp))
        return tuple(comps)

    @property
    def num_components(self) -> int:
        return len(self.components)

    @cached_property
    def component_of(self) -> dict[int, int]:
        return {e: i for i, comp in enumerate(self.components) for e in comp}

    @property
    def writhe(self) -> int:
        return sum(c.sign for c in self.crossings)

    def __len__(self):
        return len(self.crossings)

    # --- faces ----------------------------------------------------------

    @cached_property
    def faces(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Faces as cyclic tuples of corners ``(crossing, j)``."""
        visited = set()
        faces = []
        for x in range(len(self.crossings)):
            for s in range(4):
                if (x, s) in visited:
                    continue
                corners = []
                dart = Dart(x, s)
                while dart not in visited:
                    visited.add(dart)
                    p = self.partner(dart)
                    corners.append((p.crossing, p.slot))
                    dart = Dart(p.crossing, (p.slot + 1) % 4)
                faces.append(tuple(corners))
        return tuple(faces)

    @cached_property
    def corner_face(self) -> dict[tuple[int, int], int]:
        return {corner: f for f, face in enumerate(self.faces) for corner in face}

    @cached_property
    def face_colors(self) -> tuple[int, ...]:
        """Checkerboard colouring: face ``corner_face[(x, 0)]`` is colour 0 for x = 0."""
        colors: list[int | None] = [None] * len(self.faces)
        colors[self.corner_face[(0, 0)]] = 0
        changed = True
        while changed:
            changed = False
            for x in range(len(self.crossings)):
                for j in range(4):
                    f = self.corner_face[(x, j)]
                    g = self.corner_face[(x, (j + 1) % 4)]
                    for a, b in ((f, g), (g, f)):
                        if colors[a] is not None and colors[b] is None:
                            colors[b] = 1 - colors[a]
                            changed = True
                    if colors[f] is not None and colors[f] == colors[g]:
                        raise DiagramError("faces do not admit a checkerboard colouring")
        return tuple(colors)

    # --- conversions ----------------------------------------------------

    def pd_code(self) -> str:
        return " ".join(str(c) for c in self.crossings)

    def __str__(self):
        return self.pd_code()


def _infer_signs(quads: Sequence[tuple[int, int, int, int]]) -> list[int]:
    """Orient the over-strands so that every arc has one head and one tail."""
    where: dict[int, list[Dart]] = defaultdict(list)
    for x, q in enumerate(quads):
        for s, label in enumerate(q):
            where[label].append(Dart(x, s))
    for label, darts in where.items():
        if len(darts) != 2:
            raise DiagramError(f"arc {label} appears {len(darts)} times, expected 2")
    n = len(quads)
    # b_in[x] is True when the over-strand enters at slot b
    b_in: list[bool | None] = [None] * n

    def incoming(x: int, s: int) -> bool | None:
        if s == UNDER_IN:
            return True
        if s == UNDER_OUT:
            return False
        if b_in[x] is None:
            return None
        return b_in[x] if s == OVER_B else not b_in[x]

    def settle(x: int, s: int, want_in: bool):
        if s in (UNDER_IN, UNDER_OUT):
            if incoming(x, s) != want_in:
                raise DiagramError(f"inconsistent orientation at crossing {x + 1}")
            return False
        value = want_in if s == OVER_B else not want_in
        if b_in[x] is None:
            b_in[x] = value
            return True
        if b_in[x] != value:
            raise DiagramError(f"inconsistent orientation at crossing {x + 1}")
        return False

    def propagate():
        changed = True
        while changed:
            changed = False
            for label, (d1, d2) in where.items():
                i1, i2 = incoming(*d1), incoming(*d2)
                if i1 is not None and i2 is not None:
                    if i1 == i2:
                        raise DiagramError(f"arc {label} is not consistently oriented")
                elif i1 is not None:
                    changed |= settle(d2.crossing, d2.slot, not i1)
                elif i2 is not None:
                    changed |= settle(d1.crossing, d1.slot, not i2)

    propagate()
    total = 2 * n
    for x in range(n):
        if b_in[x] is None:
            # component never passes under: fall back to the successor rule
            _, b, _, d = quads[x]
            b_in[x] = not ((b - d) % total == 1 and (d - b) % total != 1)
            propagate()
    return [1 if v else -1 for v in b_in]


def diagram_from_quads(quads: Iterable[Sequence[int]]) -> LinkDiagram:
    quads = [tuple(int(v) for v in q) for q in quads]
    for q in quads:
        if len(q) != 4:
            raise DiagramError(f"crossing {q} does not have four labels")
    if not quads:
        raise DiagramError("empty diagram")
    signs = _infer_signs(quads)
    return LinkDiagram(tuple(Crossing(q, s) for q, s in zip(quads, signs)))


_TOKEN = re.compile(r"X[\(\[]\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*[\)\]]")


def parse_pd(text: str) -> LinkDiagram:
    """Parse whitespace-separated ``X(a,b,c,d)`` tokens into a validated diagram."""
    quads = []
    pos = 0
    while True:
        while pos < len(text) and (text[pos].isspace() or text[pos] == ","):
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"malformed PD token {text[pos:pos + 12]!r}", pos)
        quads.append(tuple(int(g) for g in m.groups()))
        pos = m.end()
    if not quads:
        raise ParseError("empty diagram", 0)
    return diagram_from_quads(quads)


# ----------------------------------------------------------------------
# braids


@dataclass(frozen=True)
class BraidWord:
    strands: int
    word: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(int(w) for w in self.word))
        if self.strands < 2:
            raise DiagramError(f"a braid needs at least 2 strands, got {self.strands}")
        if not self.word:
            raise DiagramError("empty braid word")
        for w in self.word:
            if w == 0 or abs(w) >= self.strands:
                raise DiagramError(f"generator {w} out of range for {self.strands} strands")

    def permutation(self) -> tuple[int, ...]:
        """Where the strand starting at each position ends up."""
        pos = list(range(self.strands))  # pos[j] = strand currently at position j
        for w in self.word:
            i = abs(w) - 1
            pos[i], pos[i + 1] = pos[i + 1], pos[i]
        end = [0] * self.strands
        for j, strand in enumerate(pos):
            end[strand] = j
        return tuple(end)

    def num_cycles(self) -> int:
        perm = self.permutation()
        seen, cycles = set(), 0
        for j in range(self.strands):
            if j not in seen:
                cycles += 1
                while j not in seen:
                    seen.add(j)
                    j = perm[j]
        return cycles

    def __str__(self):
        return f"{self.strands} ; " + " ".join(map(str, self.word))


def parse_braid(text: str) -> BraidWord:
    """Parse ``"n ; w1 w2 ... wk"``."""
    if ";" not in text:
        raise ParseError("braid must look like 'n ; w1 w2 ...'", 0)
    head, tail = text.split(";", 1)
    try:
        n = int(head)
    except ValueError:
        raise ParseError(f"bad strand count {head.strip()!r}", 0) from None
    word = []
    offset = len(head) + 1
    for m in re.finditer(r"\S+", tail):
        try:
            word.append(int(m.group()))
        except ValueError:
            raise ParseError(f"bad braid letter {m.group()!r}", offset + m.start()) from None
    return BraidWord(n, tuple(word))


def braid_closure(b: BraidWord) -> LinkDiagram:
    """PD code of the closure of ``b`` with strands drawn upward."""
    n = b.strands
    used = {abs(w) - 1 for w in b.word} | {abs(w) for w in b.word}
    if len(used) != n:
        raise SplitDiagramError("closure has a strand without crossings (split link)")
    pos_arc = list(range(n))
    nxt = n
    raw = []
    for w in b.word:
        i = abs(w) - 1
        left_in, right_in = pos_arc[i], pos_arc[i + 1]
        left_out, right_out = nxt, nxt + 1
        nxt += 2
        if w > 0:
            # over-strand SW -> NE, clockwise from SE
            raw.append(((right_in, left_in, left_out, right_out), 1))
        else:
            # over-strand SE -> NW, clockwise from SW
            raw.append(((left_in, left_out, right_out, right_in), -1))
        pos_arc[i], pos_arc[i + 1] = left_out, right_out
    closing = {pos_arc[j]: j for j in range(n)}
    raw = [(tuple(closing.get(v, v) for v in q), s) for q, s in raw]
    return relabel(raw)


def relabel(raw: Sequence[tuple[Sequence[int], int]]) -> LinkDiagram:
    """Renumber arcs 1..2c consecutively along each component.

    ``raw`` holds ``(slots, sign)`` pairs with arbitrary hashable labels.
    Components are ordered by their smallest raw label and traversed from it.
    """
    ends: dict = defaultdict(list)
    for x, (q, s) in enumerate(raw):
        cr_in = {UNDER_IN, OVER_B if s > 0 else OVER_D}
        for slot, label in enumerate(q):
            ends[label].append((x, slot, slot in cr_in))
    nxt_of = {}
    for label, es in ends.items():
        if len(es) != 2:
            raise DiagramError(f"arc {label!r} appears {len(es)} times, expected 2")
        head = [e for e in es if e[2]]
        if len(head) != 1:
            raise DiagramError(f"arc {label!r} is not consistently oriented")
        x, slot, _ = head[0]
        q, s = raw[x]
        if slot == UNDER_IN:
            nxt_of[label] = q[UNDER_OUT]
        else:
            nxt_of[label] = q[OVER_D if s > 0 else OVER_B]
    new = {}
    k = 1
    for start in sorted(ends, key=_sort_key):
        e = start
        while e not in new:
            new[e] = k
            k += 1
            e = nxt_of[e]
    return LinkDiagram(tuple(Crossing(tuple(new[v] for v in q), s) for q, s in raw))


def orient_pd(quads: Sequence[Sequence[int]]) -> LinkDiagram:
    """Orient an unoriented PD code.

    Each quadruple lists edge labels clockwise with the under-strand
    through slots 0 and 2, in either direction.  Every component is
    oriented starting from its smallest label, leaving the crossing slot
    where that label occurs first in the input.
    """
    quads = [tuple(q) for q in quads]
    where: dict = defaultdict(list)
    for x, q in enumerate(quads):
        if len(q) != 4:
            raise DiagramError(f"crossing {q} does not have four labels")
        for s, label in enumerate(q):
            where[label].append(Dart(x, s))
    for label, darts in where.items():
        if len(darts) != 2:
            raise DiagramError(f"arc {label} appears {len(darts)} times, expected 2")
    incoming: set[Dart] = set()
    done = set()
    for start in sorted(where, key=_sort_key):
        if start in done:
            continue
        tail = where[start][0]
        label = start
        while label not in done:
            done.add(label)
            d1, d2 = where[label]
            head = d2 if d1 == tail else d1
            incoming.add(head)
            tail = Dart(head.crossing, (head.slot + 2) % 4)
            label = quads[tail.crossing][tail.slot]
    raw = []
    for x, q in enumerate(quads):
        if Dart(x, 0) not in incoming:
            q = q[2:] + q[:2]
            over_b_in = Dart(x, 3) in incoming
        else:
            over_b_in = Dart(x, 1) in incoming
        raw.append((q, 1 if over_b_in else -1))
    return relabel(raw)


def _sort_key(label):
    return (0, label) if isinstance(label, int) else (1, repr(label))


# ----------------------------------------------------------------------
# derived diagrams


def mirror(d: LinkDiagram) -> LinkDiagram:
    """Switch every crossing."""
    return LinkDiagram(tuple(c.switched() for c in d.crossings))


def smooth_crossings(d: LinkDiagram, indices: Iterable[int]) -> LinkDiagram:
    """Oriented smoothing of the given crossings; crossingless loops are dropped."""
    drop = set(indices)
    parent = {e: e for e in d.arc_ends}

    def find(e):
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    for x in drop:
        c = d.crossings[x]
        for u, v in ((c.under_in, c.over_out), (c.over_in, c.under_out)):
            parent[find(u)] = find(v)
    raw = [(tuple(find(v) for v in c.slots), c.sign)
           for x, c in enumerate(d.crossings) if x not in drop]
    if not raw:
        raise DiagramError("smoothing removed every crossing")
    return relabel(raw)


def connected_sum(d1: LinkDiagram, d2: LinkDiagram, arc1: int = 1, arc2: int | None = None) -> LinkDiagram:
    """Band ``d2`` into ``d1`` by exchanging the heads of ``arc1`` and ``arc2``.

    By default ``arc2`` is the first arc of ``d2`` whose head is the same kind
    (under or over) as the head of ``arc1``, so that the sum of two
    alternating diagrams is alternating.
    """
    if arc2 is None:
        under1 = d1.arc_ends[arc1][1].slot == UNDER_IN
        arc2 = next((e for e, (_, h) in d2.arc_ends.items() if (h.slot == UNDER_IN) == under1), 1)
    off = max(d1.arc_ends)
    raw = [(c.slots, c.sign) for c in d1.crossings]
    raw += [(tuple(v + off for v in c.slots), c.sign) for c in d2.crossings]
    h1 = d1.arc_ends[arc1][1]
    h2 = d2.arc_ends[arc2][1]
    h2 = Dart(h2.crossing + len(d1.crossings), h2.slot)
    swap = {h1: arc2 + off, h2: arc1}
    raw = [(tuple(swap.get(Dart(x, s), v) for s, v in enumerate(q)), sign)
           for x, (q, sign) in enumerate(raw)]
    return relabel(raw)


# ----------------------------------------------------------------------
# predicates


class DiagramPredicates(NamedTuple):
    is_alternating: bool
    is_reduced: bool
    is_special_alternating: bool
    component_count: int
    writhe: int


def is_alternating(d: LinkDiagram) -> bool:
    """Every arc runs from an over-crossing to an under-crossing or vice versa."""
    for tail, head in d.arc_ends.values():
        tail_under = tail.slot == UNDER_OUT
        head_under = head.slot == UNDER_IN
        if tail_under == head_under:
            return False
    return True


def nugatory_crossings(d: LinkDiagram) -> list[int]:
    """Crossings having the same face at two opposite corners."""
    cf = d.corner_face
    return [x for x in range(len(d.crossings))
            if cf[(x, 0)] == cf[(x, 2)] or cf[(x, 1)] == cf[(x, 3)]]


def is_reduced(d: LinkDiagram) -> bool:
    return not nugatory_crossings(d)


def diagram_predicates(d: LinkDiagram) -> DiagramPredicates:
    alt = is_alternating(d)
    signs = {c.sign for c in d.crossings}
    return DiagramPredicates(
        is_alternating=alt,
        is_reduced=is_reduced(d),
        is_special_alternating=alt and len(signs) == 1,
        component_count=d.num_components,
        writhe=d.writhe,
    )


# ----------------------------------------------------------------------
# Seifert circles


@dataclass(frozen=True)
class SeifertData:
    """Seifert circles of an oriented diagram.

    ``circles[i]`` lists arc labels in orientation order.  ``edges[x]`` is
    the pair ``(circle through the incoming under-arc, circle through the
    incoming over-arc)`` for crossing ``x``.  ``rotation[i]`` lists
    ``(crossing, side)`` in the order the crossings are met walking along
    circle ``i``; ``side`` is +1 when the crossing's band lies to the left
    of the circle and -1 when it lies to the right.
    """

    circles: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int], ...]
    rotation: tuple[tuple[tuple[int, int], ...], ...] = field(repr=False)

    @property
    def num_circles(self) -> int:
        return len(self.circles)

    def adjacency(self) -> dict[int, list[tuple[int, int]]]:
        """circle -> [(neighbour circle, crossing)]."""
        adj = defaultdict(list)
        for x, (i, j) in enumerate(self.edges):
            adj[i].append((j, x))
            adj[j].append((i, x))
        return adj

    def is_connected(self) -> bool:
        adj = self.adjacency()
        seen = {0}
        stack = [0]
        while stack:
            for j, _ in adj[stack.pop()]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == self.num_circles


def seifert_circles(d: LinkDiagram) -> SeifertData:
    circle_of: dict[int, int] = {}
    circles = []
    rotation = []
    under_circle = [None] * len(d.crossings)
    over_circle = [None] * len(d.crossings)
    for start in d.arc_ends:
        if start in circle_of:
            continue
        idx = len(circles)
        arcs, rot = [], []
        e = start
        while e not in circle_of:
            circle_of[e] = idx
            arcs.append(e)
            x, s = d.arc_ends[e][1]
            c = d.crossings[x]
            if s == UNDER_IN:
                under_circle[x] = idx
                rot.append((x, 1 if c.sign > 0 else -1))
                e = c.over_out
            else:
                over_circle[x] = idx
                rot.append((x, -1 if c.sign > 0 else 1))
                e = c.under_out
        circles.append(tuple(arcs))
        rotation.append(tuple(rot))
    edges = tuple(zip(under_circle, over_circle))
    return SeifertData(tuple(circles), edges, tuple(rotation))


__all__ = [
    "Crossing", "LinkDiagram", "BraidWord", "SeifertData", "DiagramPredicates",
    "parse_pd", "parse_braid", "braid_closure", "diagram_from_quads", "relabel", "orient_pd",
    "mirror", "smooth_crossings", "connected_sum", "seifert_circles",
    "diagram_predicates", "is_alternating", "is_reduced", "nugatory_crossings",
]
