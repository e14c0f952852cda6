"""
Regenerate the bundled census of alternating knots up to ten crossings.

Candidate diagrams are the alternating diagrams on three families of
4-valent planar graphs:

* numerator closures of algebraic tangles (built from single crossings by
  tangle sums and Conway products) with at most nine crossings, plus
  Montesinos sums of rational tangles with ten;
* the basic polyhedra 6* and 8* with algebraic tangles substituted at
  their vertices;
* closures of alternating 3- and 4-braids.

Connected sums of the prime entries (with both chiralities of the second
summand) are appended.  A candidate is kept when it is reduced, has one
component and is new with respect to the key
(crossings, Alexander coefficients, |signature|).  Two distinct knots may
share a key, so this census is a large sample rather than a complete table.

    python3 tools/build_census.py > src/knottrap/data/census_alt10.txt
"""

from __future__ import annotations

import itertools
import sys

from knottrap.diagram import (
    BraidWord,
    braid_closure,
    connected_sum,
    diagram_predicates,
    mirror,
)
from knottrap.errors import DiagramError
from knottrap.invariants import alexander_pd, signature
from knottrap.tangles import (
    CROSSING,
    alternating_diagram,
    montesinos,
    numerator,
    substitute,
    tangle_product,
    tangle_sum,
)

MAX_CROSSINGS = 10
MAX_ALGEBRAIC = 9


def algebraic_tangles(limit: int) -> dict[int, list]:
    """Algebraic tangles by crossing count, one per canonical form (up to rotation)."""
    found = {1: {CROSSING.key(): CROSSING}}
    for n in range(2, limit + 1):
        cur = {}
        for i in range(1, n):
            for a in found[i].values():
                for b in found[n - i].values():
                    for x in (tangle_sum(a, b), tangle_product(a, b)):
                        for _ in range(4):
                            cur.setdefault(x.key(), x)
                            x = x.rotate()
        found[n] = cur
    return {n: list(v.values()) for n, v in found.items()}


def compositions(total: int, max_parts: int):
    for parts in range(1, max_parts + 1):
        for cut in itertools.combinations(range(1, total), parts - 1):
            bounds = (0, *cut, total)
            yield tuple(bounds[i + 1] - bounds[i] for i in range(parts))


def _alternating_words(strands: int, length: int):
    # generator i with sign (-1)^(i+1) makes the closure alternating
    for word in itertools.product(range(1, strands), repeat=length):
        if word[0] == 1 and set(word) == set(range(1, strands)):
            yield tuple(g if g % 2 else -g for g in word)


def candidates(tangles):
    for n in range(1, MAX_ALGEBRAIC + 1):
        for i, t in enumerate(tangles[n]):
            yield f"algebraic:{n}:{i}", lambda t=t: alternating_diagram(t.nverts, numerator(t))
    small = [cf for n in range(1, 9) for cf in compositions(n, 4)]
    for k in range(2, 6):
        for combo in itertools.combinations_with_replacement(small, k):
            if sum(map(sum, combo)) != MAX_CROSSINGS:
                continue
            for perm in sorted(set(itertools.permutations(combo))):
                if perm[0] == combo[0]:
                    yield f"montesinos:{perm}", lambda p=perm: montesinos(*p)
    for word, base in ((("3 ; 1 -2 1 -2 1 -2"), 6), ("3 ; 1 -2 1 -2 1 -2 1 -2", 8)):
        quads = [c.slots for c in braid_closure(_parse(word)).crossings]
        for graph in _substitutions(quads, MAX_CROSSINGS - base, tangles):
            yield f"polyhedron:{base}*", lambda g=graph: alternating_diagram(*g)
    for strands in (3, 4):
        for length in range(strands, MAX_CROSSINGS + 1):
            for word in _alternating_words(strands, length):
                yield f"braid:{strands};{word}", lambda s=strands, w=word: braid_closure(BraidWord(s, w))


def _parse(text):
    from knottrap.diagram import parse_braid

    return parse_braid(text)


def _substitutions(quads, budget, tangles):
    """All graphs from substituting tangles at distinct vertices, adding at most ``budget`` crossings."""
    frontier = [(quads, 0, 0)]
    while frontier:
        q, used, first = frontier.pop()
        for v in range(first, len(q)):
            for size in range(2, budget - used + 2):
                for t in tangles[size]:
                    for _ in range(2):
                        graph = substitute(q, v, t)
                        yield graph
                        nxt = _graph_quads(*graph)
                        # substituted vertices are renumbered to the end, so
                        # later substitutions start from the same position
                        frontier.append((nxt, used + size - 1, v))
                        t = t.rotate()


def _graph_quads(nverts, edges):
    label = {}
    for i, (p, q) in enumerate(edges, 1):
        label[p] = label[q] = i
    return [tuple(label[(v, s)] for s in range(4)) for v in range(nverts)]


def keep(d):
    p = diagram_predicates(d)
    return p.is_alternating and p.is_reduced and p.component_count == 1


def key_of(d):
    return (len(d.crossings), alexander_pd(d).coeffs, abs(signature(d).sigma))


def main(out=sys.stdout):
    tangles = algebraic_tangles(MAX_ALGEBRAIC)
    seen = {}
    primes = []
    for source, build in candidates(tangles):
        try:
            d = build()
        except DiagramError:
            continue
        if len(d.crossings) > MAX_CROSSINGS or not keep(d):
            continue
        key = key_of(d)
        if key not in seen:
            seen[key] = source
            primes.append((key, source, d))
    primes.sort(key=lambda e: e[0])
    entries = []
    counter: dict[int, int] = {}
    for key, source, d in primes:
        counter[key[0]] = counter.get(key[0], 0) + 1
        entries.append((f"alt{key[0]}_{counter[key[0]]}", source, d))
    composites = []
    factors = entries
    for _ in range(2):
        grown = []
        for (n1, _s1, d1), (n2, _s2, d2) in itertools.product(factors, entries):
            if len(d1.crossings) + len(d2.crossings) > MAX_CROSSINGS:
                continue
            for flip in (False, True):
                d = connected_sum(d1, mirror(d2) if flip else d2)
                if not keep(d):
                    continue
                key = key_of(d)
                if key not in seen:
                    seen[key] = "sum"
                    grown.append((f"{n1}+{'m' if flip else ''}{n2}", "connected sum", d))
        composites.extend(grown)
        factors = grown
    print("# Alternating knots up to ten crossings as reduced alternating PD codes.", file=out)
    print("# Generated by tools/build_census.py: one diagram per", file=out)
    print("# (crossings, Alexander coefficients, |signature|) class.", file=out)
    for name, source, d in entries + composites:
        print(f"# {source}", file=out)
        print(f"{name} ; pd ; {d.pd_code()}", file=out)
    print(f"{len(entries)} entries, {len(composites)} composite sums", file=sys.stderr)


if __name__ == "__main__":
    main()
