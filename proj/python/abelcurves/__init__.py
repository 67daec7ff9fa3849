"""Exact rational solutions and Darboux integrability of the Abel equation
x' = A(t) x^3 + B(t) x^2 with polynomial coefficients.

All arithmetic is exact; polynomial strings use the single variable t and
the grammar of the CLI (implicit multiplication accepted, e.g.
"4(t-1)t(t+1)").
"""

from ._core import (
    InputError,
    MismatchError,
    ParseError,
    ResourceError,
    bound,
    check,
    family,
    family_ids,
    format,
    ideal,
    parse,
    solve,
    solve_ideal,
)

__all__ = [
    "bound",
    "check",
    "family",
    "family_ids",
    "format",
    "ideal",
    "parse",
    "solve",
    "solve_ideal",
    "InputError",
    "MismatchError",
    "ParseError",
    "ResourceError",
]
