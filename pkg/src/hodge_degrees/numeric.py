"""Exact arithmetic kernel.

Every degree computed by this package is a :class:`fractions.Fraction`.
Fractions are normalized at construction (positive denominator, coprime
numerator), which is what the rest of the package relies on for exact
equality checks. Floats only ever appear in :func:`to_decimal`, for display.
"""

from __future__ import annotations

from decimal import Decimal, localcontext
from fractions import Fraction
from math import factorial, gcd
from typing import Iterable

Rational = Fraction

__all__ = [
    "Rational",
    "frac_part",
    "gcd_with",
    "multinomial",
    "format_rational",
    "parse_rational",
    "to_decimal",
]


def frac_part(a: int, b: int) -> Fraction:
    """Fractional part of ``a/b``, i.e. ``(a mod b)/b`` with the residue in ``[0, b)``."""
    if b < 1:
        raise ValueError(f"frac_part needs a positive denominator, got {b}")
    return Fraction(a % b, b)


def gcd_with(a: int, d: int) -> int:
    """``gcd(|a|, d)``; by convention ``gcd_with(0, d) == d``."""
    if d < 1:
        raise ValueError(f"gcd_with needs d >= 1, got {d}")
    return gcd(a, d)


def multinomial(parts: Iterable[int]) -> int:
    parts = list(parts)
    if any(k < 0 for k in parts):
        raise ValueError(f"multinomial parts must be nonnegative: {parts}")
    out = factorial(sum(parts))
    for k in parts:
        out //= factorial(k)
    return out


def format_rational(x: Fraction | int) -> str:
    """Exact ``"num/den"`` rendering (integers render without a denominator)."""
    return str(Fraction(x))


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def to_decimal(x: Fraction, digits: int = 15) -> str:
    """Decimal approximation with ``digits`` significant digits. Display only."""
    with localcontext() as ctx:
        ctx.prec = digits
        value = Decimal(x.numerator) / Decimal(x.denominator)
    return format(value, "g") if value != 0 else "0"
