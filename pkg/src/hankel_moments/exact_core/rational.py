"""Rational scalars.

Rationals are plain :class:`fractions.Fraction` values; this module only adds
coercion and the ``"p/q"`` text format used by every JSON document.
"""

from __future__ import annotations

import re
from fractions import Fraction

_RATIONAL_RE = re.compile(r"\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


class RationalParseError(ValueError):
    """Raised for text that is not of the form ``p`` or ``p/q`` with q > 0."""

    def __init__(self, message: str, position: int = 0):
        super().__init__(message)
        self.position = position


def to_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def parse_rational(text: str, position: int = 0) -> Fraction:
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise RationalParseError(
            f"malformed rational {text!r} at position {position}", position)
    num, den = match.group(1), match.group(2)
    if den is not None and int(den) == 0:
        raise RationalParseError(
            f"zero denominator in {text!r} at position {position}", position)
    return Fraction(int(num), int(den) if den is not None else 1)


def parse_rational_list(text: str) -> list[Fraction]:
    """Parse ``"1,2,5/2"`` into ``[1, 2, 5/2]``.

    Errors carry the character offset of the offending item.
    """
    if not text.strip():
        return []
    out = []
    pos = 0
    for item in text.split(","):
        out.append(parse_rational(item, pos))
        pos += len(item) + 1
    return out


def format_rational(value) -> str:
    """``Fraction(-3, 4)`` -> ``"-3/4"``; denominators of 1 are dropped."""
    q = to_rational(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
