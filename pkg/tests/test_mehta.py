import math
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from catalog import SMALL, SWEEP, L
from coxsupport.coxeter.parabolic import standard_parabolics
from coxsupport.mehta import mm_numeric, mm_ratio_nonzero, mm_value, mm_value2, mm_value2_dihedral
from coxsupport.poincare import a_count
from coxsupport.support import in_support_equal, in_support_two


def test_a1_value():
    g = mm_value(L("A1"), F(-1, 2))
    assert g.to_string() == "Γ(2)/Γ(3/2)"
    assert g.value() == pytest.approx(2 / math.sqrt(math.pi), rel=1e-12)


@pytest.mark.parametrize("name", SWEEP)
def test_zero_parameter(name):
    g = mm_value(L(name), 0)
    assert g.pole_order() == 0 and g.value() == pytest.approx(1.0)


def test_b2_pole():
    g = mm_value(L("B2"), F(1, 2))
    assert g.pole_order() == 2
    assert sorted(a.value for a in g.num if a.is_pole) == [-1, 0]
    assert g.value() == math.inf


def test_a2_value():
    g = mm_value(L("A2"), F(-1, 4))
    want = math.gamma(1.5) * math.gamma(1.75) / math.gamma(1.25) ** 2
    assert g.value() == pytest.approx(want, rel=1e-12)


def test_two_parameter_examples():
    for c in [F(-1, 2), F(1, 3), F(-2, 7)]:
        assert mm_value2(L("I2(4)"), c, c).same_as(mm_value(L("I2(4)"), c))
    for p in (4, 6, 8, 12):
        g = mm_value2(L(f"I2({p})"), 0, 0)
        assert g.pole_order() == 0 and g.value() == pytest.approx(1.0)
    assert mm_value2_dihedral(3, 0, 0).value() == pytest.approx(1.0)


@given(st.sampled_from(["B2", "B3", "F4", "G2", "I2(8)"]), st.integers(-30, -1), st.integers(1, 12))
def test_diagonal_values(name, p, q):
    c = F(p, q)
    one = mm_value(L(name), c)
    two = mm_value2(L(name), c, c)
    if one.pole_order() == 0 and two.pole_order() == 0:
        s1, l1 = one.log_value()
        s2, l2 = two.log_value()
        assert s1 == s2 and l2 == pytest.approx(l1, rel=1e-9, abs=1e-9)


def test_large_values_do_not_overflow():
    g = mm_value(L("E8"), -40)
    assert g.value() == math.inf
    assert g.log_value()[1] > 709


def test_ratio_examples():
    b2 = L("B2")
    a1 = standard_parabolics(b2)[1]
    assert not mm_ratio_nonzero(b2, a1, F(1, 2))
    assert mm_ratio_nonzero(b2, b2, F(1, 2))
    assert mm_ratio_nonzero(L("A2"), standard_parabolics(L("A2"))[1], F(1, 2))


@pytest.mark.parametrize("name", SWEEP)
def test_ratio_matches_counts(name):
    w = L(name)
    for p in standard_parabolics(w):
        for m in range(2, 31):
            for k in (1, m - 1):
                c = F(k, m)
                assert mm_ratio_nonzero(w, p, c) == (a_count(w, m) == a_count(p.ctype, m)) == in_support_equal(w, p, c)


@given(st.sampled_from(["B2", "B3", "F4", "G2", "I2(8)", "B3~"]), st.integers(1, 36), st.integers(1, 36))
def test_ratio_matches_lines(name, a, b):
    w = L(name)
    c = (F(a, 12), F(b, 12))
    for p in standard_parabolics(w):
        assert mm_ratio_nonzero(w, p, c) == in_support_two(w, p, c)


@pytest.mark.parametrize("name", ["A1", "I2(3)", "I2(4)", "I2(5)", "I2(6)", "B2"])
@pytest.mark.parametrize("c", [F(-1, 4), F(-1, 2), F(-1)])
def test_numeric_quadrature(name, c):
    val, _ = mm_numeric(L(name), c)
    assert val == pytest.approx(mm_value(L(name), c).value(), rel=1e-6)


@pytest.mark.parametrize("name", ["A1", "I2(5)", "B2"])
def test_numeric_monte_carlo(name):
    c = F(-1, 2)
    val, _ = mm_numeric(L(name), c, method="mc")
    assert val == pytest.approx(mm_value(L(name), c).value(), rel=1e-3)


def test_numeric_two_parameters():
    val, _ = mm_numeric(L("I2(4)"), (F(-1, 2), F(-1, 2)))
    assert val == pytest.approx(mm_value2(L("I2(4)"), F(-1, 2), F(-1, 2)).value(), rel=1e-6)
    val, _ = mm_numeric(L("G2"), (F(-1, 3), F(-1, 5)))
    assert val == pytest.approx(mm_value2(L("G2"), F(-1, 3), F(-1, 5)).value(), rel=1e-6)


def test_numeric_scope():
    with pytest.raises(ValueError):
        mm_numeric(L("A3"), F(-1, 2))
    with pytest.raises(ValueError):
        mm_numeric(L("A1"), F(1, 2))
