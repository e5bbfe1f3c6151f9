"""Exact arithmetic substrate."""

from fractions import Fraction as Rational

from .cyclo import CycloNum, cyclo_eval, cyclotomic_polynomial, euler_phi
from .lines import PositiveLine, restrict_to_line
from .poly import BiLaurent, NotDivisible, UniPoly, poly_div_exact
from .qsqrt5 import QSqrt5
from .rational import format_rational, parse_rational

__all__ = [
    "BiLaurent",
    "CycloNum",
    "NotDivisible",
    "PositiveLine",
    "QSqrt5",
    "Rational",
    "UniPoly",
    "cyclo_eval",
    "cyclotomic_polynomial",
    "euler_phi",
    "format_rational",
    "parse_rational",
    "poly_div_exact",
    "restrict_to_line",
]
