"""Finitely supported formal measures and Heine's multiple-sum formula.

For a measure with atoms ``(u, w)`` the n x n moment Hankel determinant
equals ``(1/n!) sum over n-tuples of atoms of prod_{i<j}(u_i - u_j)^2 prod w``.
Everything here is brute force, and serves as an oracle for the Hankel code.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import factorial

from .exact_core import format_rational, to_rational
from .identity import PointConfiguration, lambda_from_points, lhs_hankel
from .orthopoly import MomentSequence

ENUMERATION_BUDGET = 10 ** 7


class EnumerationBudgetError(RuntimeError):
    pass


@dataclass(frozen=True)
class DiscreteMeasure:
    atoms: tuple  # ((location, weight), ...)

    def __post_init__(self):
        atoms = tuple((to_rational(x), to_rational(w)) for x, w in self.atoms)
        locs = [x for x, _ in atoms]
        if len(set(locs)) != len(locs):
            raise ValueError("atom locations must be pairwise distinct")
        if any(w == 0 for _, w in atoms):
            raise ValueError("atom weights must be non-zero")
        object.__setattr__(self, "atoms", atoms)

    def to_json(self) -> dict:
        return {"atoms": [{"x": format_rational(x), "w": format_rational(w)}
                          for x, w in self.atoms]}

    @classmethod
    def from_json(cls, doc) -> "DiscreteMeasure":
        if isinstance(doc, str):
            doc = json.loads(doc)
        try:
            return cls(tuple((a["x"], a["w"]) for a in doc["atoms"]))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed measure document: {exc}") from None


def measure_moments(m: DiscreteMeasure, count: int) -> MomentSequence:
    if count < 0:
        raise ValueError("count must be non-negative")
    vals = []
    for s in range(count):
        vals.append(sum((w * x ** s for x, w in m.atoms), Fraction(0)))
    return MomentSequence(tuple(vals), "from-measure")


def heine_multisum(m: DiscreteMeasure, n: int) -> Fraction:
    """Brute-force ``(1/n!) sum prod_{i<j}(u_i-u_j)^2 prod w`` over n-tuples."""
    if n < 0:
        raise ValueError("n must be non-negative")
    k = len(m.atoms)
    if k ** n > ENUMERATION_BUDGET:
        raise EnumerationBudgetError(
            f"{k}^{n} tuples exceed the budget of {ENUMERATION_BUDGET}")
    total = Fraction(0)
    for tup in product(m.atoms, repeat=n):
        term = Fraction(1)
        for _, w in tup:
            term *= w
        for j in range(n):
            uj = tup[j][0]
            for i in range(j):
                diff = tup[i][0] - uj
                term *= diff * diff
            if not term:
                break
        total += term
    return total / factorial(n)


def twist_measure(m: DiscreteMeasure, cfg: PointConfiguration) -> DiscreteMeasure:
    """Multiply weights by ``prod_l (x_l - u)``; atoms that hit zero drop out."""
    atoms = []
    for u, w in m.atoms:
        f = w
        for x, mult in cfg.points:
            f *= (x - u) ** mult
        if f:
            atoms.append((u, f))
    return DiscreteMeasure(tuple(atoms))


def twisted_hankel(moments: MomentSequence, cfg: PointConfiguration, n: int) -> Fraction:
    """``det(mu^{i+j} prod_l (x_l - mu))`` in umbral notation.

    ``prod (x_l - u) = (-1)^d prod (u + (-x_l))``, so this is ``(-1)^{nd}``
    times the monic combination for the negated points.
    """
    lc = lambda_from_points(cfg.negated())
    sign = -1 if (n * cfg.d) % 2 else 1
    return sign * lhs_hankel(moments, lc, n)


def heine_check(m: DiscreteMeasure, cfg: PointConfiguration, n: int) -> bool:
    moments = measure_moments(m, max(2 * n - 1 + cfg.d, 1))
    lhs = twisted_hankel(moments, cfg, n)
    rhs = heine_multisum(twist_measure(m, cfg), n)
    return lhs == rhs
