from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import assume, given

from knottrap.conjectures import is_trapezoidal, prefix_holds
from knottrap.diagram import braid_closure, connected_sum, diagram_predicates, mirror, parse_braid
from knottrap.errors import PreconditionError
from knottrap.invariants import alexander_pd
from knottrap.structure import (bigons, decompose_murasugi, guaranteed_prefix, is_twist_concentrated,
                                multiplicativity_holds, sums_below, twist_regions)
from strategies import braid_words


def closure(text):
    return braid_closure(parse_braid(text))


def torus2(n):
    return closure("2 ; " + " ".join(["1"] * n))


FIG8 = closure("3 ; 1 -2 1 -2")


def test_torus_twist_regions():
    prof = twist_regions(torus2(5))
    assert [r.size for r in prof.regions] == [5]
    assert prof.regions[0].coherent and prof.MT == 5
    tc = is_twist_concentrated(torus2(5))
    assert not tc.holds and tc.margin == Fraction(-1, 2)


@pytest.mark.parametrize("n, margin", [(7, Fraction(1, 2)), (8, Fraction(1)), (9, Fraction(3, 2))])
def test_long_torus_twists_are_concentrated(n, margin):
    tc = is_twist_concentrated(torus2(n))
    assert tc.holds and tc.margin == margin
    assert guaranteed_prefix(torus2(n)) == n - 3


def test_figure_eight_regions_are_not_coherent():
    prof = twist_regions(FIG8)
    assert sorted(r.size for r in prof.regions) == [2, 2]
    assert not any(r.coherent for r in prof.regions)
    assert prof.MT == 0 and guaranteed_prefix(prof) == 0
    assert len(bigons(FIG8)) == 2


def test_preconditions():
    with pytest.raises(PreconditionError):
        twist_regions(closure("3 ; 1 1 1 2"))  # kink
    with pytest.raises(PreconditionError):
        twist_regions(closure("3 ; 1 2 1 2"))  # not alternating
    with pytest.raises(PreconditionError):
        decompose_murasugi(closure("3 ; 1 1 1 2"))


def test_figure_eight_decomposition():
    dec = decompose_murasugi(FIG8)
    assert dec.num_pieces == 2 and dec.lengths() == [2]
    assert all(len(p) == 2 and p.num_components == 2 for p in dec.pieces)
    assert all(diagram_predicates(p).is_special_alternating for p in dec.pieces)
    assert sums_below(dec, 3) and not sums_below(dec, 2)
    assert multiplicativity_holds(FIG8, dec) is None
    assert dec.summary() == {"pieces": 2, "max_sum_length": 2}


def test_special_alternating_is_one_piece():
    dec = decompose_murasugi(torus2(5))
    assert dec.num_pieces == 1 and dec.edges == ()
    assert dec.to_nested() == [[0, 1, 2, 3, 4], []]


@pytest.mark.parametrize("a, b", [
    (torus2(3), torus2(3)),
    (torus2(3), mirror(torus2(3))),
    (torus2(5), FIG8),
    (torus2(3), closure("3 ; 1 -2 1 1 -2 -2")),
])
def test_connected_sums_decompose_with_unit_lengths(a, b):
    s = connected_sum(a, b)
    dec = decompose_murasugi(s)
    assert dec.num_pieces == decompose_murasugi(a).num_pieces + decompose_murasugi(b).num_pieces
    assert 1 in dec.lengths()
    if all(x == 1 for x in dec.lengths()):
        assert multiplicativity_holds(s, dec) is True


@given(braid_words(max_strands=4, max_length=9, alternating=True))
def test_decomposition_partitions_crossings(b):
    d = braid_closure(b)
    assume(diagram_predicates(d).is_reduced)
    dec = decompose_murasugi(d)
    flat = sorted(x for xs in dec.crossings for x in xs)
    assert flat == list(range(len(d)))
    assert len(dec.edges) == dec.num_pieces - 1
    for p in dec.pieces:
        assert diagram_predicates(p).is_special_alternating


@given(braid_words(max_strands=4, max_length=10, alternating=True))
def test_twist_prefixes_on_alternating_braids(b):
    d = braid_closure(b)
    assume(diagram_predicates(d).is_reduced)
    c = alexander_pd(d)
    tc = is_twist_concentrated(d, c)
    assert prefix_holds(c, guaranteed_prefix(tc.MT))
    if tc.holds:
        assert is_trapezoidal(c).holds
