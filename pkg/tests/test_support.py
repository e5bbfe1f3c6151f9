from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from catalog import SMALL, SWEEP, TWO_CLASS, L
from coxsupport.coxeter.parabolic import standard_parabolics
from coxsupport.exact.lines import PositiveLine
from coxsupport.poincare import poincare2
from coxsupport.support import (
    closure_violations,
    finite_dim_denominators,
    in_support_cyclotomic,
    in_support_equal,
    in_support_two,
    in_support_two_oracle,
    is_finite_dim_equal,
    is_finite_dim_two,
    support_strata,
    support_strata_two,
    vanish_order_on_line,
)

rationals = st.builds(F, st.integers(-40, 40), st.integers(1, 30))


def _flags(strata):
    return {s.name: s.in_support for s in strata}


def test_equal_examples():
    b2 = L("B2")
    ps = {p.class_name(): p for p in standard_parabolics(b2)}
    assert not in_support_equal(b2, ps["1"], F(1, 2))
    assert in_support_equal(L("A2"), standard_parabolics(L("A2"))[1], F(1, 2))
    assert _flags(support_strata(b2, F(1, 2))) == {"1": False, "A1[1]": False, "A1[2]": False, "B2[12]": True}
    a2 = _flags(support_strata(L("A2"), F(1, 2)))
    assert a2 == {"1": False, "A1[1]": True, "A2[1]": True}
    assert is_finite_dim_equal(b2, F(1, 2))
    assert not is_finite_dim_equal(L("A2"), F(1, 2))


@pytest.mark.parametrize("name", SWEEP)
def test_negative_parameter_everything_in_support(name):
    assert all(s.in_support for s in support_strata(L(name), F(-3, 4)))


def test_seven_coprime():
    # 7 divides no degree of these groups
    for name in ["B3", "F4", "H3", "E6", "D5"]:
        assert all(s.in_support for s in support_strata(L(name), F(1, 7)))


def test_finite_lists():
    assert finite_dim_denominators(L("H3")) == [2, 6, 10]
    assert finite_dim_denominators(L("H4")) == [2, 3, 4, 5, 6, 10, 12, 15, 20, 30]
    for p in range(3, 31):
        lab = L(f"I2({p})")
        assert finite_dim_denominators(lab, 40) == [d for d in range(2, 41) if p % d == 0]


def test_integer_c_not_finite():
    assert not is_finite_dim_equal(L("B2"), 1)
    assert not is_finite_dim_equal(L("B2"), F(-1, 2))


def test_float_rejected():
    with pytest.raises(TypeError):
        in_support_equal(L("A2"), L("A1"), 0.5)


@pytest.mark.parametrize("name", SWEEP)
def test_finite_means_only_origin(name):
    w = L(name)
    for m in range(2, 31):
        c = F(1, m)
        flags = [s for s in support_strata(w, c) if s.in_support]
        only_origin = all(s.codimension == w.rank for s in flags)
        assert is_finite_dim_equal(w, c) == only_origin


@pytest.mark.parametrize("name", SWEEP)
def test_closure(name):
    w = L(name)
    for q in range(1, 13):
        for p in range(1, q):
            assert closure_violations(w, support_strata(w, F(p, q))) == []


@given(st.sampled_from(SMALL), rationals)
def test_cyclotomic_route_agrees(name, c):
    w = L(name)
    for p in standard_parabolics(w):
        assert in_support_cyclotomic(w, p, c) == in_support_equal(w, p, c)


# -- two parameters -------------------------------------------------------------


def test_vanish_order_examples():
    f4 = poincare2(L("F4"))
    assert vanish_order_on_line(f4, (F(1, 2), F(1, 2)), PositiveLine(1, 2, F(3, 2))) == 1
    i24 = poincare2(L("I2(4)"))
    assert vanish_order_on_line(i24, (F(1, 4), F(1, 4)), PositiveLine(1, 1, F(1, 2))) == 1
    # no factor of I2(4) is normal to (1, 2)
    assert vanish_order_on_line(i24, (F(1, 4), F(1, 4)), PositiveLine(1, 2, F(3, 4))) == 0
    with pytest.raises(ValueError):
        vanish_order_on_line(i24, (F(1, 4), F(1, 3)), PositiveLine(1, 1, F(1, 2)))


def test_two_parameter_examples():
    assert is_finite_dim_two(L("F4"), (F(1, 2), F(1, 2)))
    assert is_finite_dim_two(L("B2"), (F(1, 4), F(1, 4)))
    assert not is_finite_dim_two(L("B2"), (F(1, 4), F(1, 8)))


def test_two_parameter_scope():
    with pytest.raises(ValueError):
        is_finite_dim_two(L("A3"), (F(1, 2), F(1, 2)))
    with pytest.raises(ValueError):
        is_finite_dim_two(L("I2(5)"), (F(1, 2), F(1, 2)))


@pytest.mark.parametrize("name", TWO_CLASS)
def test_diagonal_matches_equal(name):
    w = L(name)
    for q in range(1, 13):
        for p in range(1, 2 * q):
            c = F(p, q)
            if c.denominator == 1:
                continue
            assert is_finite_dim_two(w, (c, c)) == is_finite_dim_equal(w, c), c


@pytest.mark.parametrize("n", [3, 4])
def test_bn_with_zero_short_parameter_is_dn(n):
    for q in range(2, 13):
        for p in range(1, 2 * q):
            c = F(p, q)
            if c.denominator == 1:
                continue
            assert is_finite_dim_two(L(f"B{n}"), (c, F(0))) == is_finite_dim_equal(L(f"D{n}" if n > 3 else "A3"), c)


@given(st.sampled_from(TWO_CLASS), rationals, rationals)
def test_factor_bookkeeping_vs_expanded(name, c1, c2):
    w = L(name)
    for p in standard_parabolics(w):
        assert in_support_two(w, p, (c1, c2)) == in_support_two_oracle(w, p, (c1, c2))


@given(st.sampled_from(["B2", "G2", "I2(8)", "B3"]), st.integers(1, 24), st.integers(1, 24))
def test_exhaustive_lines_add_nothing(name, a, b):
    w = L(name)
    c = (F(a, 12), F(b, 12))
    for p in standard_parabolics(w):
        assert in_support_two_oracle(w, p, c, exhaustive=True) == in_support_two(w, p, c)


@given(st.sampled_from(TWO_CLASS), st.integers(-24, 0), st.integers(-24, 0))
def test_nonpositive_two_parameters(name, a, b):
    w = L(name)
    assert all(s.in_support for s in support_strata_two(w, (F(a, 7), F(b, 5))))


@given(st.sampled_from(TWO_CLASS), st.integers(1, 36), st.integers(1, 36))
def test_two_parameter_closure(name, a, b):
    w = L(name)
    assert closure_violations(w, support_strata_two(w, (F(a, 12), F(b, 12)))) == []
