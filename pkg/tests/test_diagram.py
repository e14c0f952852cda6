from __future__ import annotations

import pytest
from hypothesis import given

from knottrap.diagram import (BraidWord, braid_closure, connected_sum, diagram_predicates,
                              is_alternating, mirror, nugatory_crossings, parse_braid, parse_pd,
                              seifert_circles, smooth_crossings)
from knottrap.errors import DiagramError, ParseError, SplitDiagramError
from strategies import braid_words

TREFOIL = "2 ; 1 1 1"
FIG8 = "3 ; 1 -2 1 -2"


def closure(text):
    return braid_closure(parse_braid(text))


def test_trefoil_structure():
    d = closure(TREFOIL)
    assert len(d) == 3 and d.num_components == 1 and d.writhe == 3
    assert len(d.faces) == len(d) + 2
    p = diagram_predicates(d)
    assert p.is_alternating and p.is_reduced and p.is_special_alternating
    assert seifert_circles(d).num_circles == 2


def test_hopf_link_components():
    d = closure("2 ; 1 1")
    assert d.num_components == 2


def test_pd_roundtrip_and_bracket_syntax():
    d = closure(FIG8)
    assert parse_pd(d.pd_code()) == d
    e = parse_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]")
    assert len(e) == 3 and is_alternating(e)


@pytest.mark.parametrize("text", ["X(1,2,3)", "", "X(1,2,3,4) junk"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_pd(text)


def test_inconsistent_codes_rejected():
    with pytest.raises(DiagramError):
        parse_pd("X(1,3,2,4) X(2,4,3,1)")  # non-planar
    with pytest.raises(DiagramError):
        parse_pd("X(1,2,3,4) X(1,2,3,5)")


def test_braid_parsing():
    b = parse_braid("3 ; 1 -2 1 -2")
    assert b == BraidWord(3, (1, -2, 1, -2))
    with pytest.raises(ParseError):
        parse_braid("3 1 2")
    with pytest.raises(DiagramError):
        parse_braid("2 ; 3")
    with pytest.raises(SplitDiagramError):
        closure("3 ; 1 1")


def test_kinks_are_accepted_but_not_reduced():
    d = closure("2 ; 1 1 1 1")
    kinked = closure("3 ; 1 1 1 2")
    assert diagram_predicates(d).is_reduced
    assert nugatory_crossings(kinked) == [3]
    assert not diagram_predicates(kinked).is_reduced


def test_connected_sum_of_alternating_is_alternating():
    a, b = closure(TREFOIL), closure(FIG8)
    for other in (b, mirror(a)):
        s = connected_sum(a, other)
        assert len(s) == len(a) + len(other)
        assert s.num_components == 1
        assert is_alternating(s)


def test_smoothing_all_but_one_region():
    d = closure(FIG8)
    piece = smooth_crossings(d, [1, 3])
    assert len(piece) == 2 and piece.num_components == 2


@given(braid_words())
def test_mirror_is_involution_and_flips_writhe(b):
    d = braid_closure(b)
    m = mirror(d)
    assert m.writhe == -d.writhe
    assert mirror(m) == d
    assert len(d.faces) == len(d) + 2


@given(braid_words(alternating=True))
def test_alternating_braids_give_alternating_diagrams(b):
    assert is_alternating(braid_closure(b))
