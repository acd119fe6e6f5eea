"""Exact rational approximations to -, di- and trilogarithms.

All exact values cross the boundary as canonical rational strings "p/q"
(denominator omitted when 1); arbitrary-precision reals as fixed-notation
decimal strings.
"""

from ._core import (
    a_explicit,
    char_roots,
    coeffs,
    constant,
    digits_for_n,
    direct_tail,
    double_integral,
    extend,
    integrality_report,
    lcm_upto,
    phi_tilde,
    polylog,
    remainder,
    verify,
)

__all__ = [
    "a_explicit",
    "char_roots",
    "coeffs",
    "constant",
    "digits_for_n",
    "direct_tail",
    "double_integral",
    "extend",
    "integrality_report",
    "lcm_upto",
    "phi_tilde",
    "polylog",
    "remainder",
    "verify",
]
