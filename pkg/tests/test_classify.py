import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ma2ident.classify import (
    CASE_RANK,
    CorrectSigma,
    Ternary,
    candidate_rank,
    classify_region,
    correct_sigma2,
    simplified_rule,
)
from ma2ident.core import Invertibility, Ma2Params, acf_from_params, invertibility
from ma2ident.errors import DegenerateTheta2, Unclassifiable
from ma2ident.ident import sigma_candidates
from sampling import clear_of_lines


def plane_points():
    return st.tuples(st.floats(-6, 6), st.floats(-6, 6), st.floats(0.01, 100)).filter(
        lambda t: clear_of_lines(t[0], t[1], 1e-3))


@pytest.mark.parametrize("theta, case, sigma", [
    ((0.5, 0.3), "1a", CorrectSigma.X4),
    ((0.1, -0.5), "1b", CorrectSigma.X4),
    ((-3.0, 0.5), "2", CorrectSigma.X2),
    ((3.0, 0.5), "3", CorrectSigma.X2),
    ((0.2, -1.5), "5b", CorrectSigma.X3),
    ((4.5, -4.0), "5a", CorrectSigma.X3),
    ((-3.0, 1.5), "6", CorrectSigma.X1),
    ((0.5, 2.0), "7", CorrectSigma.X3),
    ((3.0, 1.5), "8", CorrectSigma.X1),
    ((3.0, -1.0), "reciprocal", CorrectSigma.X1_EQUALS_X2),
])
def test_examples(theta, case, sigma):
    r = classify_region(*theta)
    assert r.case_id == case
    assert r.correct_sigma is sigma
    assert correct_sigma2(Ma2Params(*theta, 1.0)) == pytest.approx(1.0, rel=1e-12)


def test_case_seven_predicates():
    r = classify_region(0.5, 2.0)
    assert (r.a_holds, r.b_holds, r.c_holds) == (Ternary.REVERSED,) * 3
    assert r.d_holds is Ternary.HOLDS


def test_boundary_and_degenerate():
    assert classify_region(0.5, 0.5).is_boundary
    assert classify_region(1.0, -1.0).is_boundary
    with pytest.raises(DegenerateTheta2):
        classify_region(0.5, 0.0)
    with pytest.raises(Unclassifiable):
        correct_sigma2(Ma2Params(0.5, 0.5, 1.0))


@pytest.mark.parametrize("theta, rule", [
    ((0.5, 0.3), CorrectSigma.X4),
    ((0.5, 2.0), CorrectSigma.X3),
    ((3.0, -1.0), CorrectSigma.X1_EQUALS_X2),
])
def test_simplified_rule_examples(theta, rule):
    assert simplified_rule(*theta) is rule


def test_theta2_plus_one_uses_verification():
    # theta2 = +1 off the unit-root lines: no rule applies, gamma1 = 0
    assert classify_region(3.0, 1.0).case_id == "unclassified"
    with pytest.raises(Unclassifiable):
        simplified_rule(3.0, 1.0)
    for t1 in (3.0, -0.4, 7.5):
        assert correct_sigma2(Ma2Params(t1, 1.0, 2.5)) == pytest.approx(2.5, rel=1e-12)


def test_x1_equals_x2_on_reciprocal_line():
    c = sigma_candidates(acf_from_params(Ma2Params(3.0, -1.0, 1.0)))
    assert c.h_minus == 0.0 and c.x1 == c.x2 == pytest.approx(1.0)
    assert c.x3 < c.x1 < c.x4


@settings(max_examples=1000)
@given(plane_points())
def test_region_table_recovers_sigma2(t):
    p = Ma2Params(*t)
    assert correct_sigma2(p) == pytest.approx(p.sigma2, rel=1e-9)


@settings(max_examples=1000)
@given(plane_points())
def test_case_four_never_occurs(t):
    r = classify_region(t[0], t[1])
    assert not (r.a_holds is Ternary.REVERSED and r.b_holds is Ternary.REVERSED
                and r.c_holds is Ternary.HOLDS)


@settings(max_examples=1000)
@given(plane_points())
def test_x4_only_for_invertible(t):
    p = Ma2Params(*t)
    r = classify_region(p.theta1, p.theta2)
    inv = invertibility(p).status is Invertibility.INVERTIBLE
    assert (r.correct_sigma is CorrectSigma.X4) == inv


@settings(max_examples=1000)
@given(plane_points())
def test_simplified_rule_agrees(t):
    r = classify_region(t[0], t[1])
    assert simplified_rule(t[0], t[1]) is r.correct_sigma


@settings(max_examples=1000)
@given(plane_points())
def test_rank_statements(t):
    p = Ma2Params(*t)
    r = classify_region(p.theta1, p.theta2)
    c = sigma_candidates(acf_from_params(p))
    assert candidate_rank(correct_sigma2(p), c) == CASE_RANK[r.case_id]


def test_every_case_reachable():
    rng = np.random.default_rng(3)
    seen = set()
    for t1, t2 in rng.uniform(-6, 6, size=(20000, 2)):
        if clear_of_lines(t1, t2):
            seen.add(classify_region(float(t1), float(t2)).case_id)
    assert seen == {"1a", "1b", "2", "3", "5a", "5b", "6", "7", "8"}
