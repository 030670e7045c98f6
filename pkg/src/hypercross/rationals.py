"""Exact rational scalars: coercion, parsing, and the wire format.

The scalar type is the standard library ``Fraction``, which already keeps
every value in canonical form (lowest terms, positive denominator) and has
exact, total arithmetic. This module owns the interchange format: ``"p/q"``
for non-integers, a bare ``"p"`` for integers.
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def as_rational(value) -> Fraction:
    """Coerce an int, rational string, or Fraction to an exact rational.

    Floats are refused outright: nothing in this library is allowed to
    round.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` into a Fraction.

    Zero denominators are rejected; non-canonical inputs such as ``"4/6"``
    or ``"2/-4"`` are normalized on read.
    """
    if not isinstance(text, str):
        raise TypeError(f"expected a rational string, got {type(text).__name__}")
    num_part, sep, den_part = text.partition("/")
    try:
        num = int(num_part.strip())
    except ValueError:
        raise ValueError(f"invalid rational literal {text!r}") from None
    if not sep:
        return Fraction(num)
    try:
        den = int(den_part.strip())
    except ValueError:
        raise ValueError(f"invalid rational literal {text!r}") from None
    if den == 0:
        raise ValueError(f"zero denominator in rational literal {text!r}")
    return Fraction(num, den)


def format_rational(value: Fraction) -> str:
    """Canonical string form: ``"p/q"``, or ``"p"`` when the value is integral."""
    return str(value)
