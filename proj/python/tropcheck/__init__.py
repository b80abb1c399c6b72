"""Exact containment checks for tropical (min-plus) hypersurfaces.

Rational values cross the boundary as fractions.Fraction. Points may be given
as ints, Fractions, decimal strings or "p/q" strings.
"""

from ._core import (
    DimensionError,
    DomainError,
    Error,
    ParseError,
    Polynomial,
    check_containment,
    newton,
    oracle_check,
    parse,
)

__all__ = [
    "DimensionError",
    "DomainError",
    "Error",
    "ParseError",
    "Polynomial",
    "check_containment",
    "newton",
    "oracle_check",
    "parse",
]
