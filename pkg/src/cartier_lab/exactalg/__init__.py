"""Exact arithmetic over a prime field F_p."""

from .field import FieldElem, check_prime, is_prime
from .polynomial import NEG_INF, Polynomial, poly_gcd
from .rational import (
    PolarPart,
    RationalFunction,
    from_partial_fractions,
    p_power_decompose,
    partial_fractions,
    split_denominator,
)
from .series import TruncatedSeries, solve_artin_schreier_series
from .splitfrac import SplitFraction

__all__ = [
    "FieldElem",
    "NEG_INF",
    "PolarPart",
    "Polynomial",
    "RationalFunction",
    "SplitFraction",
    "TruncatedSeries",
    "check_prime",
    "from_partial_fractions",
    "is_prime",
    "p_power_decompose",
    "partial_fractions",
    "poly_gcd",
    "solve_artin_schreier_series",
    "split_denominator",
]
