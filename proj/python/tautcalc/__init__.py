"""Chern characters and Chern classes of moduli spaces of stable curves.

Rational results come back as strings from the extension; the helpers here
turn them into fractions.Fraction where that is the natural type.
"""

from fractions import Fraction

from ._tautcalc import (
    DomainError,
    a_coeff as _a_coeff,
    bernoulli as _bernoulli,
    boundary_count,
    ch,
    chern,
    partitions,
    rank,
    render,
    verify,
)

__all__ = [
    "DomainError",
    "a_coeff",
    "bernoulli",
    "boundary_count",
    "ch",
    "chern",
    "partitions",
    "rank",
    "render",
    "verify",
]


def bernoulli(k: int) -> Fraction:
    """B_k with B_1 = -1/2."""
    return Fraction(_bernoulli(k))


def a_coeff(m: int) -> Fraction:
    return Fraction(_a_coeff(m))
