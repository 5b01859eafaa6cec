"""Exact rational scalars and their JSON string form.

Every numeric payload on the wire is a string like "3", "-1/2", "7/16";
parsing accepts anything ``fractions.Fraction`` accepts, including "3/1".
"""
from __future__ import annotations

from fractions import Fraction

Rational = int | Fraction


def fr(x: Rational | str) -> Fraction:
    """Coerce an int, Fraction, or exact string to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


def fr_str(x: Rational) -> str:
    """Canonical exact string: "p/q" in lowest terms, "p" when q = 1."""
    return str(fr(x))


def parse_fr(s: str) -> Fraction:
    """Parse an exact rational string; floats are rejected."""
    if not isinstance(s, str):
        raise TypeError(f"rational payloads must be strings, got {s!r}")
    return Fraction(s)
