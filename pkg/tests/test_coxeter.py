import numpy as np
import pytest

from catalog import SWEEP, L
from coxsupport.coxeter import _kernels_py, kernels
from coxsupport.coxeter.groups import EnumerationRefused, element_table, enumerate_elements
from coxsupport.coxeter.parabolic import (
    NotClosedError,
    identify_subsystem,
    maximal_parabolics,
    standard_parabolics,
)
from coxsupport.coxeter.roots import exponents_from_heights, positive_roots
from coxsupport.coxeter.types import CoxeterType, UnknownTypeError, parse_label, parse_type


# -- catalog and parsing ---------------------------------------------------------


@pytest.mark.parametrize(
    "name,degrees",
    [("A1", [2]), ("H4", [2, 12, 20, 30]), ("B3", [2, 4, 6]), ("E8", [2, 8, 12, 14, 18, 20, 24, 30]),
     ("F4", [2, 6, 8, 12]), ("I2(7)", [2, 7]), ("D4", [2, 4, 4, 6]), ("H3", [2, 6, 10])],
)
def test_degrees(name, degrees):
    assert sorted(L(name).degrees()) == degrees


def test_parse_aliases():
    assert parse_label("G2") == parse_label("I2:6") == parse_label("I2(6)")
    assert parse_label("D3") == parse_label("A3")
    assert parse_type("A1xA2").rank == 3
    assert parse_label("B3~").swapped


@pytest.mark.parametrize("bad", ["Z3", "D2", "E9", "I2(2)", "H5", "F3", "B1", "A0"])
def test_unknown_types(bad):
    with pytest.raises(UnknownTypeError):
        parse_label(bad)


def test_node_classes():
    assert L("B3").node_classes() == (1, 1, 2)
    assert L("F4").node_classes() == (1, 1, 2, 2)
    assert L("I2(5)").node_classes() == (1, 1)
    assert L("I2(8)").node_classes() == (1, 2)
    assert L("B3~").node_classes() == (2, 2, 1)
    assert L("E6").num_classes() == 1


# -- roots -----------------------------------------------------------------------


@pytest.mark.parametrize("name", SWEEP)
def test_root_count(name):
    lab = L(name)
    data = positive_roots(lab)
    assert data.n_pos == sum(lab.degrees()) - lab.rank


@pytest.mark.parametrize("name", [n for n in SWEEP if L(n).crystallographic])
def test_exponents_from_heights(name):
    lab = L(name)
    assert exponents_from_heights(positive_roots(lab)) == sorted(d - 1 for d in lab.degrees())


def test_small_root_examples():
    a2 = positive_roots(L("A2"))
    assert sorted(sum(v) for v in a2.roots) == [1, 1, 2]
    b2 = positive_roots(L("B2"))
    norms = sorted(b2.norm(k) for k in range(4))
    assert norms == [1, 1, 2, 2]
    assert b2.class_counts() == {1: 2, 2: 2}
    assert positive_roots(L("E8")).n_pos == 120


@pytest.mark.parametrize("name", ["B3", "F4", "H3", "I2(7)", "G2"])
def test_reflections_permute_roots(name):
    data = positive_roots(L(name))
    n = data.n_pos
    for k in range(n):
        p = data.reflection_perm(k)
        assert sorted(p.tolist()) == list(range(2 * n))
        assert p[k] == k + n
        # an involution
        assert np.array_equal(p[p], np.arange(2 * n))


# -- enumeration -------------------------------------------------------------------


@pytest.mark.parametrize("name", ["A1", "A3", "B2", "B3", "D4", "G2", "H3", "I2(9)", "F4"])
def test_enumeration_counts(name):
    lab = L(name)
    t = element_table(lab)
    assert len(t) == lab.order()
    assert t.length.max() == positive_roots(lab).n_pos
    # the longest element sends every positive root negative
    assert (t.perms[t.longest(), : t.data.n_pos] >= t.data.n_pos).all()


def test_b2_class_lengths():
    t = element_table(L("B2"))
    assert len(t) == 8
    assert (int(t.l1.max()), int(t.l2.max())) == (2, 2)
    assert sorted(t.length.tolist()) == [0, 1, 1, 2, 2, 3, 3, 4]


def test_a1_elements():
    els = list(enumerate_elements(L("A1")))
    assert [e[1] for e in els] == [0, 1]
    assert els[1][0] == [[-1]]


@pytest.mark.parametrize("name", ["B3", "H3", "F4", "I2(11)"])
def test_kernels_agree(name):
    data = positive_roots(L(name))
    fast = kernels.bfs_elements(data.perms, data.n_pos, 100_000)
    slow = _kernels_py.bfs_elements(data.perms, data.n_pos, 100_000)
    assert np.array_equal(fast[0], slow[0])
    assert np.array_equal(fast[1], slow[1])


def test_cap_refusal(monkeypatch):
    with pytest.raises(EnumerationRefused) as e:
        element_table(L("E8"))
    assert "696729600" in str(e.value)
    monkeypatch.setenv("COXSUPPORT_ENUM_CAP", "10")
    with pytest.raises(EnumerationRefused):
        element_table(L("A3"))


# -- parabolics and subsystems ---------------------------------------------------------


def _names(ps):
    return sorted(p.class_name() for p in ps)


def test_parabolics_small():
    assert _names(standard_parabolics(L("A2"))) == ["1", "A1[1]", "A2[1]"]
    assert _names(standard_parabolics(L("B2"))) == ["1", "A1[1]", "A1[2]", "B2[12]"]


def test_h4_maximal():
    names = sorted(p.ctype.name for p in maximal_parabolics(L("H4")))
    assert names == sorted(["H3", "A1xI2(5)", "A1xA2", "A3"])


@pytest.mark.parametrize("name", SWEEP[:20])
def test_parabolic_counts_sum(name):
    ps = standard_parabolics(L(name))
    assert sum(p.count for p in ps) == 2 ** L(name).rank


def test_identify_subsystem_b2():
    data = positive_roots(L("B2"))
    # roots in simple coordinates: e1-e2 = (1,0), e2 = (0,1), e1 = (1,1), e1+e2 = (1,2)
    idx = {tuple(v): k for k, v in enumerate(data.roots)}
    long_pair = [idx[(1, 0)], idx[(1, 2)]]
    t, simple = identify_subsystem(data, long_pair)
    assert t.class_name() == "A1[1]xA1[1]"
    t, _ = identify_subsystem(data, range(4))
    assert t == CoxeterType.of(L("B2"))
    with pytest.raises(NotClosedError):
        identify_subsystem(data, [idx[(1, 0)], idx[(0, 1)]])


@pytest.mark.parametrize("name", ["A3", "B3", "D4", "F4", "H3", "E6"])
def test_identify_full_system(name):
    data = positive_roots(L(name))
    t, simple = identify_subsystem(data, range(data.n_pos))
    assert t == CoxeterType.of(L(name))
    assert len(simple) == L(name).rank
