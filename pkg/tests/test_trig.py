from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from catalog import L
from coxsupport.coxeter.types import CoxeterType
from coxsupport.poincare import poincare1, poincare_ratio
from coxsupport.support import in_support_equal
from coxsupport.trig import (
    ScopeError,
    TorusPoint,
    in_trig_support,
    stabilizer_subsystem,
    trig_support_strata,
)

WEYL = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "G2", "F4"]


def test_b2_stabilizers():
    b2 = L("B2")
    roots, t = stabilizer_subsystem(b2, (0, 0))
    assert t == CoxeterType.of(b2) and len(roots) == 4
    _, t = stabilizer_subsystem(b2, ("1/2", "1/2"))
    assert t.class_name() == "A1[1]xA1[1]"
    roots, t = stabilizer_subsystem(b2, ("1/3", "1/7"))
    assert roots == [] and t.rank == 0


def test_b2_support():
    b2 = L("B2")
    assert in_trig_support(b2, (0, 0), F(1, 2))
    assert in_trig_support(b2, ("1/2", "1/2"), F(1, 2))
    assert not in_trig_support(b2, ("1/3", "1/7"), F(1, 2))


def test_b2_strata():
    strata = trig_support_strata(L("B2"), F(1, 2))
    inside = {s.ctype.class_name(): s for s in strata if s.in_support}
    assert set(inside) == {"B2[12]", "A1[1]xA1[1]"}
    assert inside["B2[12]"].witness.torus_coords() == ["1", "1"]
    assert inside["A1[1]xA1[1]"].witness.torus_coords() == ["-1", "-1"]
    assert all(s.in_support for s in trig_support_strata(L("B2"), F(1, 3)))


def test_g2_strata():
    inside = {s.ctype.class_name() for s in trig_support_strata(L("G2"), F(1, 2)) if s.in_support}
    assert inside == {"I2(6)[12]", "A1[1]xA1[2]"}


def test_scope():
    with pytest.raises(ScopeError):
        stabilizer_subsystem(L("H3"), (0, 0, 0))
    with pytest.raises(ScopeError):
        in_trig_support(L("B2"), (0, 0), F(-1, 2))
    with pytest.raises(ScopeError):
        trig_support_strata(L("E6"), F(1, 2))
    with pytest.raises(ValueError):
        stabilizer_subsystem(L("B2"), (0, 0, 0))


def test_integer_c():
    # only full-rank stabilizers survive at m = 1
    flags = {s.ctype.rank: s.in_support for s in trig_support_strata(L("B3"), 1)}
    assert flags[3] and not flags[0]


@pytest.mark.parametrize("name", WEYL)
def test_witnesses_and_divisibility(name):
    w = L(name)
    for s in trig_support_strata(w, F(1, 2)):
        _, t = stabilizer_subsystem(w, s.witness)
        assert t == s.ctype
        # the stabilizer's Poincare polynomial divides that of W
        poincare_ratio(w, t)


@given(st.sampled_from(WEYL), st.data())
def test_random_points_closed(name, data):
    w = L(name)
    dim = len(trig_support_strata(w, 1)[0].witness.x)
    x = data.draw(st.lists(st.builds(F, st.integers(-6, 6), st.sampled_from([1, 2, 3, 4, 6])), min_size=dim, max_size=dim))
    roots, t = stabilizer_subsystem(w, x)
    assert t.rank <= w.rank
    assert poincare1(w)(1) % poincare1(t)(1) == 0
    assert all(TorusPoint.of(w, x).root_value(k).denominator == 1 for k in roots)


@given(st.sampled_from(["A2", "A3", "B2", "B3", "G2", "F4"]), st.integers(1, 30), st.integers(2, 30))
def test_parabolic_points_match_rational(name, k, m):
    # small points near the origin have parabolic stabilizers
    w = L(name)
    c = F(k, m)
    if c.denominator == 1:
        return
    for s in trig_support_strata(w, c):
        if 0 not in s.walls:
            assert s.in_support == in_support_equal(w, s.ctype, c)
