"""Orthogonal polynomials from three-term recurrences, and their moments.

A family is given by coefficient sequences ``s_i``, ``t_i`` through

    p_n(x) = (x - s_{n-1}) p_{n-1}(x) - t_{n-2} p_{n-2}(x),  p_{-1} = 0, p_0 = 1.

The sequences are stored as a finite prefix followed by a constant tail,
which is all any finite computation needs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exact_core import RatMatrix, UniPoly, det_fraction_free, format_rational, to_rational


class DegenerateFunctionalError(ValueError):
    """A leading principal Hankel determinant of the moments vanishes."""

    def __init__(self, size: int):
        super().__init__(f"Hankel determinant of size {size} vanishes; "
                         "the moment functional is degenerate")
        self.size = size


class InsufficientMomentsError(ValueError):
    pass


@dataclass(frozen=True)
class RecurrenceCoeffs:
    s_prefix: tuple = ()
    s_tail: Fraction = Fraction(0)
    t_prefix: tuple = ()
    t_tail: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "s_prefix", tuple(to_rational(v) for v in self.s_prefix))
        object.__setattr__(self, "t_prefix", tuple(to_rational(v) for v in self.t_prefix))
        object.__setattr__(self, "s_tail", to_rational(self.s_tail))
        object.__setattr__(self, "t_tail", to_rational(self.t_tail))
        if self.t_tail == 0 or any(t == 0 for t in self.t_prefix):
            raise ValueError("every t_i must be non-zero")

    @classmethod
    def constant(cls, s, t) -> "RecurrenceCoeffs":
        return cls((), s, (), t)

    def s(self, i: int) -> Fraction:
        return self.s_prefix[i] if i < len(self.s_prefix) else self.s_tail

    def t(self, i: int) -> Fraction:
        return self.t_prefix[i] if i < len(self.t_prefix) else self.t_tail

    def to_json(self) -> dict:
        return {
            "s_prefix": [format_rational(v) for v in self.s_prefix],
            "s_tail": format_rational(self.s_tail),
            "t_prefix": [format_rational(v) for v in self.t_prefix],
            "t_tail": format_rational(self.t_tail),
        }

    @classmethod
    def from_json(cls, doc) -> "RecurrenceCoeffs":
        if isinstance(doc, str):
            doc = json.loads(doc)
        try:
            return cls(tuple(doc.get("s_prefix", ())), doc["s_tail"],
                       tuple(doc.get("t_prefix", ())), doc["t_tail"])
        except KeyError as exc:
            raise ValueError(f"coefficient document lacks {exc.args[0]!r}") from None


@dataclass(frozen=True)
class MomentSequence:
    values: tuple
    source: str = "user-supplied"

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(to_rational(v) for v in self.values))

    def __len__(self):
        return len(self.values)

    def __getitem__(self, k):
        return self.values[k]

    def require(self, count: int) -> None:
        if len(self.values) < count:
            raise InsufficientMomentsError(
                f"need {count} moments, only {len(self.values)} available")


@dataclass(frozen=True)
class PolySequence:
    family: tuple
    kind: str
    norms: tuple = field(default=())

    def __getitem__(self, n: int) -> UniPoly:
        if n >= len(self.family):
            raise IndexError(f"family built only up to degree {len(self.family) - 1}")
        return self.family[n]

    def __len__(self):
        return len(self.family)


def moments_from_coeffs(c: RecurrenceCoeffs, count: int) -> MomentSequence:
    """Moments as weighted Motzkin path counts.

    ``mu_n`` sums, over paths of length ``n`` from height 0 back to 0, the
    product of step weights: up steps weigh 1, a level step at height ``h``
    weighs ``s(h)``, a down step from height ``h`` weighs ``t(h-1)``.
    """
    if count < 0:
        raise ValueError("count must be non-negative")
    if count == 0:
        return MomentSequence((), "from-coefficients")
    max_h = (count - 1) // 2
    s = [c.s(h) for h in range(max_h + 1)]
    t = [c.t(h) for h in range(max_h + 1)]
    row = [Fraction(0)] * (max_h + 2)
    row[0] = Fraction(1)
    out = [row[0]]
    for length in range(1, count):
        # heights above the remaining distance home cannot reach 0
        top = min(length, count - 1 - length, max_h)
        new = [Fraction(0)] * (max_h + 2)
        for h in range(top + 1):
            v = row[h] * s[h] + row[h + 1] * t[h]
            if h:
                v += row[h - 1]
            new[h] = v
        row = new
        out.append(row[0])
    return MomentSequence(tuple(out), "from-coefficients")


def build_family(c: RecurrenceCoeffs, kind: str = "p", upto: int = 0) -> PolySequence:
    """Members of degree ``0..upto`` of the p- or f-family.

    The f-family uses ``f_n = (x + s_{n-1}) f_{n-1} - t_{n-2} f_{n-2}``,
    i.e. the p-recurrence with the sign of ``s`` flipped.
    """
    if kind not in ("p", "f"):
        raise ValueError("kind must be 'p' or 'f'")
    if upto < 0:
        raise ValueError("upto must be non-negative")
    sign = -1 if kind == "p" else 1
    x = UniPoly.x()
    fam = [UniPoly((1,))]
    prev = UniPoly(())
    for n in range(1, upto + 1):
        nxt = (x + sign * c.s(n - 1)) * fam[-1]
        if n >= 2:
            nxt = nxt - prev * c.t(n - 2)
        prev = fam[-1]
        fam.append(nxt)
    norms = [Fraction(1)]
    for n in range(1, upto + 1):
        norms.append(norms[-1] * c.t(n - 1))
    return PolySequence(tuple(fam), kind, tuple(norms))


def hankel_matrix(values: Sequence, n: int, shift: int = 0) -> RatMatrix:
    """The n x n matrix ``(values[i + j + shift])``."""
    return RatMatrix.from_function(n, n, lambda i, j: values[i + j + shift])


def poly_from_moments(m: MomentSequence, n: int) -> UniPoly:
    """Monic degree-n orthogonal polynomial ``det(nu_{i+j+1} - nu_{i+j} x)``.

    The leading coefficient of that determinant is ``(-1)^n det(nu_{i+j})``,
    which must not vanish.
    """
    if n == 0:
        return UniPoly((1,))
    m.require(2 * n)
    for size in range(1, n + 1):
        if not det_fraction_free(hankel_matrix(m.values, size)):
            raise DegenerateFunctionalError(size)
    x = UniPoly.x()
    mat = RatMatrix.from_function(
        n, n, lambda i, j: UniPoly((m[i + j + 1],)) - x * m[i + j])
    det = det_fraction_free(mat)
    return det / det.leading


def hankel_base_det(c: RecurrenceCoeffs, n: int) -> Fraction:
    """``det(mu_{i+j})_{0<=i,j<n} = prod_{i<n} t_i^(n-i-1)``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    acc = Fraction(1)
    for i in range(n):
        acc *= c.t(i) ** (n - i - 1)
    return acc


def chebyshev_u(upto: int) -> list[UniPoly]:
    """Chebyshev polynomials of the second kind ``U_0..U_upto``."""
    if upto < 0:
        raise ValueError("upto must be non-negative")
    x = UniPoly.x()
    us = [UniPoly((1,))]
    if upto >= 1:
        us.append(2 * x)
    for _ in range(2, upto + 1):
        us.append(2 * x * us[-1] - us[-2])
    return us


def apply_functional(m: MomentSequence, p: UniPoly) -> Fraction:
    """L(p) with ``L(x^a) = mu_a``."""
    if not p:
        return Fraction(0)
    m.require(p.degree + 1)
    return sum((c * m[a] for a, c in enumerate(p.coeffs)), Fraction(0))
