"""Classical moment sequences and explicit shifted Hankel determinants.

The registry pairs each sequence with three-term recurrence data whose
path-counting moments reproduce it.  Motzkin and large Schroeder data are
the textbook ones; the rest were derived by matching the first terms and
are flagged ``provenance="matched"``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from math import comb, factorial

from .exact_core import RatMatrix, det_fraction_free, poly_taylor_coeff
from .orthopoly import (
    InsufficientMomentsError,
    RecurrenceCoeffs,
    build_family,
    hankel_base_det,
    hankel_matrix,
    moments_from_coeffs,
)


@dataclass(frozen=True)
class SequenceSpec:
    name: str
    coeffs: RecurrenceCoeffs
    known_terms: tuple
    provenance: str
    base_hankel_closed_form: str | None = None

    def moments(self, count: int) -> list[Fraction]:
        return list(moments_from_coeffs(self.coeffs, count).values)


_PARAMS = {
    # name: (s_prefix, s_tail, t_prefix, t_tail, provenance, base Hankel form)
    "motzkin": ((), 1, (), 1, "literature", "1"),
    "schroeder_large": ((2,), 3, (), 2, "literature", "2^binom(n,2)"),
    "catalan": ((1,), 2, (), 1, "matched", "1"),
    "central_binomial": ((2,), 2, (2,), 1, "matched", "2^(n-1)"),
    "central_trinomial": ((), 1, (2,), 1, "matched", "2^(n-1)"),
    "delannoy_central": ((), 3, (4,), 2, "matched", "4^(n-1) 2^binom(n-1,2)"),
    "riordan": ((0,), 1, (), 1, "matched", "1"),
    "fine": ((0,), 2, (), 1, "matched", "1"),
}


def load_known_terms() -> dict[str, tuple[int, ...]]:
    text = resources.files("hankel_moments").joinpath("data/known_terms.json").read_text()
    doc = json.loads(text)
    return {name: tuple(int(v) for v in entry["terms"]) for name, entry in doc.items()}


@lru_cache(maxsize=None)
def _registry() -> tuple[SequenceSpec, ...]:
    terms = load_known_terms()
    out = []
    for name, (sp, st, tp, tt, prov, form) in _PARAMS.items():
        out.append(SequenceSpec(name, RecurrenceCoeffs(sp, st, tp, tt),
                                terms[name], prov, form))
    return tuple(out)


def registry() -> list[SequenceSpec]:
    return list(_registry())


def get_sequence(name: str) -> SequenceSpec:
    for spec in _registry():
        if spec.name == name:
            return spec
    names = ", ".join(s.name for s in _registry())
    raise KeyError(f"unknown sequence {name!r}; known: {names}")


def shifted_hankel_direct(seq: SequenceSpec, n: int, d: int) -> Fraction:
    """``det(mu_{i+j+d})_{0<=i,j<n}`` from the sequence's moments."""
    if n < 0 or d < 0:
        raise ValueError("n and d must be non-negative")
    if n == 0:
        return Fraction(1)
    need = 2 * n - 1 + d
    if need > 4096:
        raise InsufficientMomentsError(f"{need} moments requested")
    return det_fraction_free(hankel_matrix(seq.moments(need), n, d))


def zero_point_sides(seq: SequenceSpec, n: int, d: int) -> tuple[Fraction, Fraction]:
    """Both sides of the all-points-at-zero specialisation.

    left:  det(mu_{i+j+d}) / det(mu_{i+j})
    right: (-1)^(nd) det(p_{n+i-1}^{(j-1)}(0) / (j-1)!)_{1<=i,j<=d}
    """
    left = shifted_hankel_direct(seq, n, d) / hankel_base_det(seq.coeffs, n)
    if d == 0:
        return left, Fraction(1)
    fam = build_family(seq.coeffs, "p", n + d - 1)
    mat = RatMatrix.from_function(
        d, d, lambda i, j: poly_taylor_coeff(fam[n + i], j, 0))
    sign = -1 if (n * d) % 2 else 1
    return left, sign * det_fraction_free(mat)


def eq71_check(seq: SequenceSpec, n: int, d: int) -> bool:
    left, right = zero_point_sides(seq, n, d)
    return left == right


def binom(p: int, q: int) -> int:
    """Binomial coefficient extended to negative integer arguments.

    For ``p >= 0`` this is the usual one (zero outside ``0..p``).  For
    ``p < 0`` it is the symmetric extension: ``(-1)^q binom(q-p-1, q)``
    when ``q >= 0``, ``(-1)^(p-q) binom(-q-1, p-q)`` when ``q <= p``, and
    zero in between.  In particular ``binom(-1, -1) == 1``.
    """
    if p >= 0:
        return comb(p, q) if 0 <= q <= p else 0
    if q >= 0:
        return (-1) ** q * comb(q - p - 1, q)
    if q <= p:
        return (-1) ** (p - q) * comb(-q - 1, p - q)
    return 0


def _motzkin_a(i: int, j: int, n: int) -> int:
    total = 0
    b = 0
    while n + i - j - 3 * b >= 0:
        total += (-1) ** b * binom(j, n + i - j - 3 * b) * binom(j + b - 1, b)
        b += 1
    return total


def motzkin_shift_closed_form(n: int, d: int) -> Fraction:
    """``det(M_{i+j+d})_{0<=i,j<n}`` as the d x d determinant of

    A_{i,j}(n) = sum_b (-1)^b binom(j, n+i-j-3b) binom(j+b-1, b).
    """
    if n < 0 or d < 0:
        raise ValueError("n and d must be non-negative")
    mat = RatMatrix.from_function(d, d, lambda i, j: _motzkin_a(i + 1, j + 1, n))
    return det_fraction_free(mat)


def _schroeder_b(i: int, j: int, n: int) -> int:
    m = n + i - j
    first = sum(2 ** (j - a - 1) * binom(2 * j - a - 2, j - 1) * binom(a + m - 1, m)
                for a in range(1, j))
    second = sum((-1) ** b * 2 ** (n + i - 1) * binom(2 * j - b - 2, j - 2)
                 * binom(b + m - 1, m)
                 for b in range(1, j + 1))
    return first + second


def schroeder_shift_closed_form(n: int, d: int) -> Fraction:
    """``det(r_{i+j+d})_{0<=i,j<n}`` for the large Schroeder numbers, as

    (-1)^binom(d+1, 2) 2^binom(n, 2) det(B_{i,j}(n))_{1<=i,j<=d}.
    """
    if n < 0 or d < 0:
        raise ValueError("n and d must be non-negative")
    mat = RatMatrix.from_function(d, d, lambda i, j: _schroeder_b(i + 1, j + 1, n))
    sign = -1 if comb(d + 1, 2) % 2 else 1
    return sign * Fraction(2) ** comb(n, 2) * det_fraction_free(mat)


def motzkin_chebyshev_derivative(n: int, j: int) -> Fraction:
    """``p_n^{(j)}(0)`` for the Motzkin family ``p_n(x) = U_n((x-1)/2)``."""
    if n < 0 or j < 0:
        raise ValueError("n and j must be non-negative")
    total = 0
    b = 0
    while n - j - 3 * b >= 0:
        total += (-1) ** (n - j - b) * binom(j + 1, n - j - 3 * b) * binom(j + b, b)
        b += 1
    return Fraction(factorial(j) * total)
