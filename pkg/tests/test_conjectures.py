from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from knottrap.conjectures import (FOX_MILNOR_MAX_LENGTH, concordance_bound_check, fox_milnor,
                                  hm_check, is_trapezoidal, leading_inequalities, prefix_holds,
                                  ratio_scan, StableLength, stable_length,
                                  verify_fox_milnor)
from knottrap.errors import BudgetExceeded, PreconditionError, ShapeViolation
from knottrap.harness import BUNDLED_CENSUS, load_census
from knottrap.invariants import alexander_pd
from knottrap.polyalg import CoeffSeq, LaurentPoly
from oracles import fox_milnor_factorable


@pytest.mark.parametrize("seq", [(1, 1, 1), (1, 3, 1), (1, 2, 3, 3, 3, 2, 1), (2, 3, 2), (1,), (1, 1)])
def test_trapezoidal_examples(seq):
    assert is_trapezoidal(seq).holds


def test_trapezoid_failures_carry_index_and_clause():
    r = is_trapezoidal((1, 2, 2, 3, 3, 2, 2, 1))
    assert not r.holds and (r.index, r.clause) == (2, 2)
    r = is_trapezoidal((1, 2, 1, 3, 1))
    assert not r.holds and r.clause == 1
    with pytest.raises(PreconditionError):
        is_trapezoidal((1, 0, 1))


def test_stable_length_values():
    assert stable_length((1, 1, 1)) == StableLength(1, 3)
    assert stable_length((1, 3, 1)) == StableLength(2, 1)
    assert stable_length((1, 2, 3, 3, 3, 2, 1)) == StableLength(3, 3)
    with pytest.raises(ShapeViolation) as err:
        stable_length((1, 2, 1, 2, 1))
    assert err.value.index >= 0


@pytest.mark.parametrize("seq, sigma, lhs, rhs", [
    ((1, 1, 1), -2, 1, 1),
    ((1, 3, 1), 0, 0, 0),
    ((1, 1, 1, 1, 1), -4, 2, 2),
])
def test_hm_sharp_anchors(seq, sigma, lhs, rhs):
    r = hm_check(CoeffSeq(seq), sigma)
    assert r.holds and r.sharp and (r.lhs, r.rhs) == (lhs, rhs)


def test_hm_can_fail():
    r = hm_check((1, 1, 1, 1, 1), 0)
    assert not r.holds and (r.lhs, r.rhs) == (0, 2)


positive_seqs = st.lists(st.integers(1, 9), min_size=1, max_size=11)


@given(positive_seqs)
def test_trapezoid_verdict_is_reversal_invariant(seq):
    assert is_trapezoidal(seq).holds == is_trapezoidal(seq[::-1]).holds


@given(positive_seqs, st.integers(-12, 12))
def test_hm_is_symmetric_in_sigma(seq, sigma):
    try:
        a = hm_check(seq, sigma)
    except ShapeViolation:
        return
    assert a == hm_check(seq, -sigma)


@st.composite
def trapezoids(draw):
    rise = draw(st.lists(st.integers(1, 4), max_size=4))
    top = sum(rise) + 1
    left = [top - sum(rise[i:]) for i in range(len(rise))]
    flat = draw(st.integers(1, 4))
    return tuple(left + [top] * flat + left[::-1])


@given(trapezoids())
def test_generated_trapezoids_pass_and_report_plateau(seq):
    r = is_trapezoidal(seq)
    assert r.holds
    st_ = stable_length(seq)
    assert (r.i0, r.sl) == (st_.i0, st_.sl)
    assert leading_inequalities(seq) == (len(seq) - 1) // 2
    assert prefix_holds(seq, 100)


def test_fox_milnor_examples():
    cert = fox_milnor((2, 5, 2))
    assert cert.factor == LaurentPoly([-1, 2])
    assert verify_fox_milnor(CoeffSeq((2, 5, 2)), cert)
    none = fox_milnor((1, 1, 1))
    assert not none.found and none.bound == 1
    assert fox_milnor((1,)).factor == LaurentPoly([1])
    assert fox_milnor((1, 2, 3, 2, 1)).factor == LaurentPoly([1, -1, 1])
    assert fox_milnor((4, 12, 17, 12, 4)).factor == LaurentPoly([2, -3, 2])
    assert not fox_milnor((1, 1)).found
    with pytest.raises(BudgetExceeded):
        fox_milnor((1,) * (FOX_MILNOR_MAX_LENGTH + 2))


small_factors = st.lists(st.integers(-3, 3), min_size=1, max_size=4).filter(lambda f: f[0] and f[-1])


@given(small_factors)
def test_fox_milnor_finds_every_product(f):
    p = LaurentPoly(f)
    prod = p * p.substitute_inverse()
    cert = fox_milnor(prod)
    assert cert.found
    g = cert.factor
    assert g * g.substitute_inverse() == prod * cert.sign


@given(st.lists(st.integers(1, 8), min_size=1, max_size=4))
def test_fox_milnor_matches_factorization_oracle(half):
    seq = tuple(half + half[-2::-1])
    signed = tuple((-1) ** i * a for i, a in enumerate(seq))
    assume(len(seq) % 2 == 1)
    assert fox_milnor(signed).found == fox_milnor_factorable(signed)


def test_fox_milnor_on_census_matches_oracle():
    for e in load_census(BUNDLED_CENSUS):
        c = alexander_pd(e.diagram())
        cert = fox_milnor(c)
        assert cert.found == fox_milnor_factorable(c.poly.coeffs), e.name
        if cert.found:
            assert verify_fox_milnor(c, cert)


def test_concordance_bound():
    assert concordance_bound_check((1, 1, 1), (1, 1, 1)).holds
    assert not concordance_bound_check((1, 1, 1, 1, 1), (1, 1, 1)).holds


def test_ratio_scan():
    r = ratio_scan((1, 3, 2, 3, 1))
    assert not r.log_concave and r.log_concave_failure == 2
    assert r.max_ascending == Fraction(3, 2)
    r = ratio_scan((1, 3, 1))
    assert r.log_concave and r.max_descending == Fraction(1, 3)
