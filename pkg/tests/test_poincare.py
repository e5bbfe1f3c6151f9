import pytest
from hypothesis import given, strategies as st

from catalog import SMALL, SWEEP, TWO_CLASS, L
from coxsupport.coxeter.parabolic import standard_parabolics
from coxsupport.coxeter.types import CoxeterType
from coxsupport.exact.cyclo import CycloNum, cyclo_eval
from coxsupport.exact.poly import BiLaurent, UniPoly
from coxsupport.poincare import (
    a_count,
    poincare1,
    poincare2,
    poincare2_explicit,
    poincare_bruteforce,
    poincare_ratio,
)

q = UniPoly.q()
one = UniPoly([1])

BRUTE_ONE = [f"I2({p})" for p in range(3, 13)] + ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "H3", "F4"]
BRUTE_TWO = ["I2(4)", "I2(6)", "I2(8)", "I2(10)", "I2(12)", "B2", "B3", "B4", "F4", "B3~", "F4~", "I2(8)~"]


def test_small_examples():
    assert poincare1(L("A1")) == one + q
    assert poincare1(L("B2")) == (one + q) ** 2 * (one + q * q)
    assert poincare1(L("A2")) == UniPoly([1, 2, 2, 1])


def test_a_count_examples():
    assert a_count(L("H4"), 5) == 2
    assert a_count(L("B2"), 2) == 2
    for name in SWEEP:
        assert a_count(L(name), 1) == L(name).rank
    with pytest.raises(ValueError):
        a_count(L("A2"), 0)


@pytest.mark.parametrize("name", BRUTE_ONE)
def test_bruteforce_one_variable(name):
    assert poincare_bruteforce(L(name)) == poincare1(L(name))


@pytest.mark.parametrize("name", BRUTE_TWO)
def test_bruteforce_two_variable(name):
    brute = poincare_bruteforce(L(name), two_var=True)
    assert poincare2(L(name)).expand() == brute


@pytest.mark.parametrize("name", ["I2(4)", "I2(6)", "I2(8)", "B2", "B3", "B4", "F4", "B3~", "F4~"])
def test_explicit_forms(name):
    assert poincare2_explicit(L(name)) == poincare2(L(name)).expand()


def test_dihedral_two_variable_examples():
    q1 = BiLaurent.monomial(1, 0)
    q2 = BiLaurent.monomial(0, 1)
    u = BiLaurent({(0, 0): 1})
    assert poincare2(L("I2(4)")).expand() == (u + q1) * (u + q2) * (u + q1 * q2)
    want = (u + q1) * (u + q2) * (u + q1 * q2 + q1 * q1 * q2 * q2)
    assert poincare_bruteforce(L("I2(6)"), two_var=True) == want


def test_b2_matches_i2_4():
    assert poincare2(L("B2")).expand() == poincare2(L("I2(4)")).expand()


def test_bn_mass():
    for n in range(2, 9):
        assert poincare2_explicit(L(f"B{n}")).mass() == L(f"B{n}").order()


@pytest.mark.parametrize("name", SWEEP)
def test_total_mass(name):
    assert poincare1(L(name))(1) == L(name).order()


@pytest.mark.parametrize("name", TWO_CLASS + ["B5", "B8"])
def test_two_variable_mass_and_diagonal(name):
    f = poincare2(L(name))
    assert f.at_one() == L(name).order()
    assert f.expand().diagonal() == poincare1(L(name))


def test_one_class_rejected():
    with pytest.raises(ValueError):
        poincare2(L("A3"))
    with pytest.raises(ValueError):
        poincare2_explicit(L("I2(5)"))


def test_ratio_examples():
    b2 = L("B2")
    ps = {p.class_name(): p.ctype for p in standard_parabolics(b2)}
    assert poincare_ratio(b2, ps["A1[1]"]) == (one + q) * (one + q * q)
    assert poincare_ratio(b2, b2) == one
    long_pair = CoxeterType.of(L("A1"), L("A1"))
    assert poincare_ratio(b2, long_pair) == one + q * q


@pytest.mark.parametrize("name", SWEEP)
def test_parabolic_ratio_vs_a_count(name):
    w = L(name)
    for p in standard_parabolics(w):
        ratio = poincare_ratio(w, p.ctype)
        assert all(c >= 0 for _, c in ratio.items())
        for m in range(2, 31):
            nonzero = not cyclo_eval(ratio, [CycloNum.zeta(m)]).is_zero()
            assert nonzero == (a_count(w, m) == a_count(p.ctype, m))


@given(st.sampled_from(SMALL), st.integers(1, 40))
def test_parabolic_count_monotone(name, m):
    w = L(name)
    assert all(a_count(w, m) >= a_count(p.ctype, m) for p in standard_parabolics(w))
