from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from coxsupport.exact import (
    BiLaurent,
    CycloNum,
    NotDivisible,
    PositiveLine,
    QSqrt5,
    UniPoly,
    cyclo_eval,
    cyclotomic_polynomial,
    euler_phi,
    format_rational,
    parse_rational,
    poly_div_exact,
    restrict_to_line,
)
from coxsupport.exact.linalg import charpoly, inverse, mat_mul, nullspace, rank, solve_rank_field

q = UniPoly.q()
one = UniPoly([1])


# -- rationals ---------------------------------------------------------------


def test_parse_rational_forms():
    assert parse_rational("3/6") == Fraction(1, 2)
    assert parse_rational("-7") == -7
    assert parse_rational(" -1/4 ") == Fraction(-1, 4)
    assert format_rational(Fraction(6, 3)) == "2"
    assert format_rational(Fraction(-1, 4)) == "-1/4"


@pytest.mark.parametrize("bad", ["0.5", "1/0", "a/b", "", "1//2"])
def test_parse_rational_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def test_parse_rational_rejects_float():
    with pytest.raises(TypeError):
        parse_rational(0.5)


# -- Q(sqrt 5) ---------------------------------------------------------------


def test_golden_ratio_identity():
    tau = QSqrt5.golden()
    assert tau * tau == tau + 1
    assert (tau * tau.inverse()) == 1
    assert tau.sign() == 1 and (1 - tau).sign() == -1


@given(st.integers(-20, 20), st.integers(-20, 20))
def test_qsqrt5_sign_matches_float(a, b):
    x = QSqrt5(a, b)
    f = a + b * 5 ** 0.5
    assert x.sign() == (0 if a == b == 0 else (1 if f > 0 else -1))


# -- cyclotomic numbers -------------------------------------------------------


def test_cyclo_eval_examples():
    z3 = CycloNum.zeta(3)
    assert cyclo_eval(UniPoly([1, 1, 1]), [z3]).is_zero()
    pb2 = UniPoly([1, 1]) ** 2 * UniPoly([1, 0, 1])
    assert cyclo_eval(pb2, [CycloNum.rational(-1)]).is_zero()
    v = cyclo_eval(UniPoly([1, 1]), [CycloNum.zeta(4)])
    assert not v.is_zero()
    assert complex(v) == pytest.approx(1 + 1j)


@pytest.mark.parametrize("n", range(1, 25))
def test_cyclotomic_polynomial_roots(n):
    phi = UniPoly(list(cyclotomic_polynomial(n)))
    assert phi.degree() == euler_phi(n)
    for m in range(1, 25):
        val = cyclo_eval(phi, [CycloNum.zeta(m)])
        assert val.is_zero() == (m == n)


def test_qsqrt5_embedding():
    tau = QSqrt5.golden()
    z = CycloNum.from_qsqrt5(tau)
    assert complex(z).real == pytest.approx(float(tau))
    assert z * z == z + 1


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=6), st.sampled_from([3, 4, 5, 7, 8, 12]))
def test_cyclo_field_inverse(coeffs, n):
    x = CycloNum(n, coeffs + [0] * n)
    if x.is_zero():
        return
    assert x * x.inverse() == 1


def test_conductor_lift_equality():
    assert CycloNum.zeta(4, 2) == -1
    assert CycloNum.zeta(6, 2) == CycloNum.zeta(3)
    assert CycloNum.zeta(12).lift(24) == CycloNum.zeta(24, 2)


# -- polynomials ---------------------------------------------------------------


def test_poly_div_examples():
    assert poly_div_exact(UniPoly.one_minus_q_pow(4), UniPoly.one_minus_q_pow(1)) == UniPoly([1, 1, 1, 1])
    pb2 = UniPoly([1, 1]) ** 2 * UniPoly([1, 0, 1])
    assert poly_div_exact(pb2, UniPoly([1, 1])) == UniPoly([1, 1]) * UniPoly([1, 0, 1])
    with pytest.raises(NotDivisible) as e:
        poly_div_exact(UniPoly([1, 0, 1]), UniPoly([1, 1]))
    assert not e.value.remainder.is_zero()


polys = st.lists(st.integers(-6, 6), min_size=1, max_size=6).map(UniPoly)


@given(polys, polys)
def test_poly_div_roundtrip(a, b):
    if b.is_zero():
        return
    assert poly_div_exact(a * b, b) == a


def test_bilaurent_binomial_division():
    p = BiLaurent.binomial(2, 2) * BiLaurent.binomial(1, 0)
    assert p.div_binomial(1, 1).div_binomial(1, 0) == BiLaurent({(0, 0): 1, (1, 1): 1})
    with pytest.raises(NotDivisible):
        BiLaurent.binomial(1, 0).div_binomial(0, 1)


# -- lines --------------------------------------------------------------------


def test_restrict_to_line_examples():
    half, quarter = Fraction(1, 2), Fraction(1, 4)
    # 1 - q1 q2 on c1 + c2 = 1/2: u-exponents cancel, constant 1 - e^{pi i} = 2
    r = restrict_to_line(BiLaurent({(0, 0): 1, (1, 1): -1}), (quarter, quarter), PositiveLine(1, 1, half))
    assert r == UniPoly([2])
    r = restrict_to_line(BiLaurent({(0, 0): 1, (1, 0): -1}), (half, 0), PositiveLine(1, 0, half))
    assert r == UniPoly([2])
    r = restrict_to_line(BiLaurent({(0, 0): 1, (1, 0): 1}), (half, 0), PositiveLine(1, 0, half))
    assert r.is_zero()


def test_restrict_off_line_rejected():
    with pytest.raises(ValueError):
        restrict_to_line(BiLaurent({(0, 0): 1}), (Fraction(1, 3), 0), PositiveLine(1, 0, Fraction(1, 2)))


def test_positive_line_validation():
    with pytest.raises(ValueError):
        PositiveLine(2, 2, 1)
    with pytest.raises(ValueError):
        PositiveLine(1, 1, 0)
    assert str(PositiveLine(1, 2, Fraction(3, 2))) == "c1 + 2*c2 = 3/2"


# -- linear algebra -------------------------------------------------------------


def test_rank_and_nullspace():
    m = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
    assert rank(m) == 2 == solve_rank_field(m)
    ns = nullspace(m)
    assert len(ns) == 1
    assert all(sum(a * b for a, b in zip(row, ns[0])) == 0 for row in m)


def test_inverse_and_charpoly():
    a = [[2, 1], [1, 1]]
    assert mat_mul(a, inverse(a)) == [[1, 0], [0, 1]]
    assert charpoly([[0, -1], [1, -1]]) == [1, 1, 1]


def test_cyclotomic_rank():
    z = CycloNum.zeta(5)
    m = [[z, z * z], [CycloNum.rational(1), z]]
    assert rank(m) == 1
    assert solve_rank_field(m) == 1


@given(st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=1, max_size=4))
def test_fraction_free_rank_matches_field_rank(rows):
    assert rank(rows) == solve_rank_field(rows)
