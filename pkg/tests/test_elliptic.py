import pytest

from catalog import L
from coxsupport.elliptic import (
    brute_force_search,
    codegrees,
    element_orders,
    is_elliptic_number,
    is_regular_number,
)
from coxsupport.coxeter.groups import element_table
from coxsupport.poincare import a_count
from coxsupport.support import is_finite_dim_equal
from fractions import Fraction as F


def test_examples():
    assert is_elliptic_number(L("A2"), 3)
    assert not is_elliptic_number(L("A2"), 2)
    assert is_elliptic_number(L("H3"), 6)
    assert is_regular_number(L("A2"), 2)
    assert is_regular_number(L("B2"), 4) and is_elliptic_number(L("B2"), 4)
    assert is_regular_number(L("A3"), 3) and not is_elliptic_number(L("A3"), 3)
    assert codegrees(L("B3")) == [0, 2, 4]


def test_m_one_rejected():
    for f in (is_elliptic_number, is_regular_number, brute_force_search):
        with pytest.raises(ValueError):
            f(L("A2"), 1)


def test_oracle_examples():
    r = brute_force_search(L("A1"), 2)
    assert (r.with_eigenvalue, r.regular, r.regular_elliptic, r.max_eigen_dim) == (1, 1, 1, 1)
    r = brute_force_search(L("H3"), 10)
    assert r.has_regular_elliptic
    r = brute_force_search(L("B3"), 4)
    assert r.has_regular_elliptic == is_elliptic_number(L("B3"), 4)
    assert r.has_regular == is_regular_number(L("B3"), 4)
    assert "B3, m=4" in r.summary()


def test_element_orders():
    t = element_table(L("B2"))
    assert sorted(element_orders(t.perms).tolist()) == [1, 2, 2, 2, 2, 2, 4, 4]


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "B2", "B3", "D4", "G2", "H3", "I2(5)", "I2(7)", "I2(8)"])
def test_criterion_vs_oracle(name):
    w = L(name)
    for m in range(2, max(w.degrees()) + 3):
        r = brute_force_search(w, m)
        assert r.has_regular_elliptic == is_elliptic_number(w, m), m
        assert r.has_regular == is_regular_number(w, m), m
        if r.has_regular:
            assert r.max_eigen_dim == a_count(w, m)


@pytest.mark.parametrize("name", ["A1", "A4", "B3", "B4", "D4", "F4", "G2", "E6"])
def test_elliptic_is_finite_dim(name):
    w = L(name)
    for m in range(2, 31):
        assert is_elliptic_number(w, m) == is_finite_dim_equal(w, F(1, m))
