from __future__ import annotations

import pytest

from knottrap.diagram import diagram_predicates, is_alternating
from knottrap.invariants import alexander_pd, signature
from knottrap.tangles import (CROSSING, alternating_diagram, montesinos, numerator, pretzel,
                              rational_tangle, tangle_product, tangle_sum, two_bridge)


@pytest.mark.parametrize("cf, coeffs", [
    ((2, 1), (1, 1, 1)),
    ((2, 2), (1, 3, 1)),
    ((4, 1), (1, 1, 1, 1, 1)),
    ((2, 3), (2, 3, 2)),
    ((1, 3), (1, 1, 1, 1)),
])
def test_two_bridge_values(cf, coeffs):
    d = two_bridge(cf)
    assert is_alternating(d)
    assert alexander_pd(d).coeffs == coeffs


def test_pretzel_values():
    assert alexander_pd(pretzel(3, 3, 3)).coeffs == (7, 13, 7)
    assert alexander_pd(pretzel(2, 3, 3)).coeffs == (1, 3, 4, 5, 4, 3, 1)


def test_single_twist_closes_to_kinked_unknot():
    d = two_bridge((3,))
    assert alexander_pd(d).coeffs == (1,)
    assert not diagram_predicates(d).is_reduced


def test_trefoil_signature_from_tangle():
    assert abs(signature(two_bridge((2, 1))).sigma) == 2


def test_tangle_keys_are_rotation_invariant():
    t = tangle_product(tangle_sum(CROSSING, CROSSING), CROSSING)
    r = t
    for _ in range(4):
        r = r.rotate()
    assert r.key() == t.key()
    assert rational_tangle((1, 2)).nverts == 3


def test_montesinos_closure_is_alternating():
    d = montesinos((3,), (3,), (3,))
    assert is_alternating(d) and d.num_components == 1
    assert alexander_pd(d).coeffs == alexander_pd(pretzel(3, 3, 3)).coeffs


def test_numerator_of_single_crossing_is_an_unknotted_kink():
    edges = numerator(CROSSING)
    d = alternating_diagram(1, edges)
    assert len(d) == 1
