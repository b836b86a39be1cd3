"""Seeded random instances for property checks and the CLI."""

from __future__ import annotations

import random
from fractions import Fraction

from .orthopoly import RecurrenceCoeffs

BOUND = 9


def rational(rng: random.Random, bound: int = BOUND) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def nonzero_rational(rng: random.Random, bound: int = BOUND) -> Fraction:
    while True:
        v = rational(rng, bound)
        if v:
            return v


def distinct_rationals(rng: random.Random, k: int, bound: int = BOUND) -> list[Fraction]:
    out: list[Fraction] = []
    while len(out) < k:
        v = rational(rng, bound)
        if v not in out:
            out.append(v)
    return out


def recurrence_coeffs(rng: random.Random, prefix: int = 3,
                      bound: int = BOUND) -> RecurrenceCoeffs:
    """Coefficients with random prefixes of up to ``prefix`` terms."""
    sp = tuple(rational(rng, bound) for _ in range(rng.randint(0, prefix)))
    tp = tuple(nonzero_rational(rng, bound) for _ in range(rng.randint(0, prefix)))
    return RecurrenceCoeffs(sp, rational(rng, bound), tp, nonzero_rational(rng, bound))


def matrix(rng: random.Random, size: int, bound: int = BOUND,
           singular: bool = False) -> list[list[Fraction]]:
    """Random rational matrix; ``singular`` forces a dependent last row."""
    rows = [[rational(rng, bound) for _ in range(size)] for _ in range(size)]
    if singular and size >= 2:
        a, b = rational(rng, bound), rational(rng, bound)
        i, j = rng.sample(range(size - 1), 2) if size > 2 else (0, 0)
        rows[-1] = [a * x + b * y for x, y in zip(rows[i], rows[j])]
    return rows
