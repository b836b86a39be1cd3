"""Hankel determinants of linear combinations of moments, and the
determinant identity relating them to orthogonal polynomials at points.

For points ``x_1..x_d`` and ``q(x) = prod (x + x_l) = sum lambda_k x^k``::

    det(sum_k lambda_k mu_{i+j+k})_{0<=i,j<n}
        = (-1)^(n d) det(mu_{i+j}) * det(p_{n+i-1}(-x_j)) / prod_{i<j} (x_i - x_j)

Repeated points are handled by replacing the corresponding columns with
Taylor coefficients of ``p`` at ``-y`` (the confluent form).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .exact_core import (
    RatMatrix,
    UniPoly,
    det_fraction_free,
    format_rational,
    jacobi_identity_check,
    poly_taylor_coeff,
    to_rational,
    vandermonde_product,
)
from .orthopoly import (
    MomentSequence,
    PolySequence,
    RecurrenceCoeffs,
    apply_functional,
    build_family,
    hankel_base_det,
    hankel_matrix,
    moments_from_coeffs,
)


class RepeatedPointError(ValueError):
    """rhs_distinct was given coinciding points; use rhs_confluent."""


@dataclass(frozen=True)
class PointConfiguration:
    points: tuple  # ((y, multiplicity), ...)

    def __post_init__(self):
        pts = tuple((to_rational(y), int(m)) for y, m in self.points)
        ys = [y for y, _ in pts]
        if len(set(ys)) != len(ys):
            raise ValueError("points in a configuration must be pairwise distinct")
        if any(m < 1 for _, m in pts):
            raise ValueError("multiplicities must be positive")
        object.__setattr__(self, "points", pts)

    @classmethod
    def from_list(cls, xs: Sequence) -> "PointConfiguration":
        """Group a flat list ``x_1..x_d`` (with repeats) by value."""
        counts: dict = {}
        for x in xs:
            x = to_rational(x)
            counts[x] = counts.get(x, 0) + 1
        return cls(tuple(counts.items()))

    @property
    def d(self) -> int:
        return sum(m for _, m in self.points)

    @property
    def e(self) -> int:
        return len(self.points)

    @property
    def is_distinct(self) -> bool:
        return all(m == 1 for _, m in self.points)

    def expanded(self) -> list[Fraction]:
        return [y for y, m in self.points for _ in range(m)]

    def negated(self) -> "PointConfiguration":
        return PointConfiguration(tuple((-y, m) for y, m in self.points))


@dataclass(frozen=True)
class LinearCombination:
    lam: tuple  # lambda_0 .. lambda_d, lambda_d == 1

    def __post_init__(self):
        lam = tuple(to_rational(v) for v in self.lam)
        if not lam or lam[-1] != 1:
            raise ValueError("the last coefficient lambda_d must equal 1")
        object.__setattr__(self, "lam", lam)

    @property
    def d(self) -> int:
        return len(self.lam) - 1

    @property
    def q(self) -> UniPoly:
        return UniPoly(self.lam)


@dataclass(frozen=True)
class IdentityReport:
    n: int
    d: int
    lhs: Fraction
    rhs_ratio: Fraction
    base_det: Fraction
    sign: int
    equal: bool
    checks: tuple = ()

    def to_json(self) -> dict:
        doc = {
            "n": self.n,
            "d": self.d,
            "lhs": format_rational(self.lhs),
            "rhs_ratio": format_rational(self.rhs_ratio),
            "base_det": format_rational(self.base_det),
            "sign": self.sign,
            "equal": self.equal,
        }
        if self.checks:
            doc["checks"] = {name: ok for name, ok in self.checks}
        return doc


def lambda_from_points(cfg: PointConfiguration) -> LinearCombination:
    """Coefficients of ``prod (x + x_l)``, i.e. ``lambda_k = e_{d-k}(x)``."""
    q = UniPoly.from_roots([-x for x in cfg.expanded()])
    return LinearCombination(q.coeffs)


def combination_hankel(m: MomentSequence, coeffs: Sequence, n: int) -> Fraction:
    """``det(sum_k coeffs[k] mu_{i+j+k})_{0<=i,j<n}`` for any coefficients."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return Fraction(1)
    d = len(coeffs) - 1
    m.require(2 * n - 1 + d)
    comb_vals = [sum((c * m[a + k] for k, c in enumerate(coeffs)), Fraction(0))
                 for a in range(2 * n - 1)]
    return det_fraction_free(hankel_matrix(comb_vals, n))


def lhs_hankel(m: MomentSequence, lc: LinearCombination, n: int) -> Fraction:
    return combination_hankel(m, lc.lam, n)


def _require_family(fam: PolySequence, top: int) -> None:
    if top >= len(fam):
        raise ValueError(f"family must contain p_0..p_{top}, has {len(fam)} members")


def rhs_distinct(fam: PolySequence, cfg: PointConfiguration, n: int) -> Fraction:
    """``det(p_{n+i-1}(-x_j)) / prod_{i<j} (x_i - x_j)`` for distinct points."""
    if not cfg.is_distinct:
        raise RepeatedPointError(
            "repeated point in configuration; use rhs_confluent")
    xs = cfg.expanded()
    d = len(xs)
    if d == 0:
        return Fraction(1)
    _require_family(fam, n + d - 1)
    mat = RatMatrix.from_function(d, d, lambda i, j: fam[n + i](-xs[j]))
    # vandermonde_product gives prod_{i<j}(x_j - x_i)
    denom = (-1) ** comb(d, 2) * vandermonde_product(xs)
    return det_fraction_free(mat) / denom


def confluent_matrix(fam: PolySequence, cfg: PointConfiguration, n: int) -> RatMatrix:
    """Columns ``p_{n+i-1}^{(j)}(-y)/j!`` for ``j < m`` per point ``(y, m)``."""
    d = cfg.d
    _require_family(fam, n + d - 1)
    cols = [(y, j) for y, mult in cfg.points for j in range(mult)]
    return RatMatrix.from_function(
        d, d, lambda i, c: poly_taylor_coeff(fam[n + i], cols[c][1], -cols[c][0]))


def rhs_confluent(fam: PolySequence, cfg: PointConfiguration, n: int) -> Fraction:
    """Right-hand ratio with repeated points, via derivative columns.

    The denominator is ``prod_{i<j} (y_i - y_j)^(m_i m_j)`` over distinct
    points ``y`` with multiplicities ``m``.
    """
    if cfg.d == 0:
        return Fraction(1)
    denom = Fraction(1)
    pts = cfg.points
    for a in range(len(pts)):
        for b in range(a + 1, len(pts)):
            denom *= (pts[a][0] - pts[b][0]) ** (pts[a][1] * pts[b][1])
    return det_fraction_free(confluent_matrix(fam, cfg, n)) / denom


def identity_sign(n: int, d: int) -> int:
    return -1 if (n * d) % 2 else 1


def verify_theorem1(c: RecurrenceCoeffs, cfg: PointConfiguration, n: int,
                    moments: MomentSequence | None = None) -> IdentityReport:
    """Evaluate both sides of the identity and report whether they agree.

    Three right-hand forms are checked: the p-family ratio with sign
    ``(-1)^(nd)`` (any multiplicities, via the confluent matrix), and, for
    distinct points, the form with ``prod (x_j - x_i)`` and sign
    ``(-1)^(nd + binom(d, 2))`` as well as the f-family form with no sign.

    ``moments`` overrides the moments derived from ``c`` (the family still
    comes from ``c``); this is how corrupted data is detected.
    """
    d = cfg.d
    if n < 0:
        raise ValueError("n must be non-negative")
    if moments is None:
        moments = moments_from_coeffs(c, max(2 * n - 1 + d, 1))
    lc = lambda_from_points(cfg)
    lhs = lhs_hankel(moments, lc, n)
    base = hankel_base_det(c, n)
    top = n + d - 1
    fam = build_family(c, "p", max(top, 0))
    ratio = rhs_confluent(fam, cfg, n)
    sign = identity_sign(n, d)
    checks = [("p_family", lhs == sign * base * ratio)]
    if cfg.is_distinct and d:
        xs = cfg.expanded()
        vdm = vandermonde_product(xs)
        p_det = det_fraction_free(
            RatMatrix.from_function(d, d, lambda i, j: fam[n + i](-xs[j])))
        sign14 = sign * (-1) ** comb(d, 2)
        checks.append(("vandermonde", lhs == sign14 * base * p_det / vdm))
        ffam = build_family(c, "f", top)
        f_det = det_fraction_free(
            RatMatrix.from_function(d, d, lambda i, j: ffam[n + i](xs[j])))
        checks.append(("f_family", lhs == base * f_det / vdm))
    equal = all(ok for _, ok in checks)
    return IdentityReport(n, d, lhs, ratio, base, sign, equal, tuple(checks))


def gram_form(m: MomentSequence, lc: LinearCombination, fam: PolySequence, n: int) -> Fraction:
    """``det(L(q p_i p_j))_{0<=i,j<n}``."""
    if n == 0:
        return Fraction(1)
    m.require(2 * (n - 1) + lc.d + 1)
    _require_family(fam, n - 1)
    q = lc.q
    qp = [q * fam[i] for i in range(n)]
    return det_fraction_free(RatMatrix.from_function(
        n, n, lambda i, j: apply_functional(m, qp[i] * fam[j])))


def _combo_det(cseq, weights, size):
    """``det(sum_k weights[k] c_{i+j+k})_{0<=i,j<size}``."""
    vals = [sum((w * cseq[a + k] for k, w in enumerate(weights)), Fraction(0))
            for a in range(max(2 * size - 1, 0))]
    return det_fraction_free(hankel_matrix(vals, size))


def lemma3_check(cseq: Sequence, alpha, beta, n: int) -> bool:
    """Three-term Hankel identity relating shifts by alpha and beta.

    (beta - alpha) H_{n}(alpha*beta, alpha+beta, 1) H_{n+1}(1)
        = H_n(alpha, 1) H_{n+1}(beta, 1) - H_n(beta, 1) H_{n+1}(alpha, 1)

    where ``H_k(w)`` is the k x k Hankel determinant of ``sum w_r c_{i+j+r}``.
    """
    cseq = [to_rational(v) for v in cseq]
    alpha, beta = to_rational(alpha), to_rational(beta)
    if n < 0:
        raise ValueError("n must be non-negative")
    if len(cseq) < 2 * n + 2:
        raise ValueError(f"sequence needs at least {2 * n + 2} terms")
    lhs = ((beta - alpha)
           * _combo_det(cseq, (alpha * beta, alpha + beta, 1), n)
           * _combo_det(cseq, (1,), n + 1))
    rhs = (_combo_det(cseq, (alpha, 1), n) * _combo_det(cseq, (beta, 1), n + 1)
           - _combo_det(cseq, (beta, 1), n) * _combo_det(cseq, (alpha, 1), n + 1))
    return lhs == rhs


def shift_expansion(cseq: Sequence, alpha, M: int) -> tuple[Fraction, Fraction]:
    """Both sides of the row-multilinearity expansion

    det(alpha c_{i+j} + c_{i+j+1})_{0<=i,j<=M}
        = sum_{r=0}^{M+1} alpha^r det(c_{i+j+[i>=r]})_{0<=i,j<=M}.
    """
    cseq = [to_rational(v) for v in cseq]
    alpha = to_rational(alpha)
    if M < 0:
        raise ValueError("M must be non-negative")
    if len(cseq) < 2 * M + 2:
        raise ValueError(f"sequence needs at least {2 * M + 2} terms")
    size = M + 1
    lhs = _combo_det(cseq, (alpha, 1), size)
    rhs = Fraction(0)
    for r in range(M + 2):
        mat = RatMatrix.from_function(
            size, size, lambda i, j: cseq[i + j + (1 if i >= r else 0)])
        rhs += alpha ** r * det_fraction_free(mat)
    return lhs, rhs


def padded_hankel(cseq: Sequence, n: int) -> RatMatrix:
    """The (n+2) x (n+2) matrix with Hankel block ``c_{i+j}`` and last
    column ``(0, ..., 0, 1)``, on which Jacobi's identity yields the
    coefficient form of the three-term Hankel identity."""
    cseq = [to_rational(v) for v in cseq]
    size = n + 2

    def entry(i, j):
        if j == size - 1:
            return Fraction(1 if i == size - 1 else 0)
        return cseq[i + j]

    return RatMatrix.from_function(size, size, entry)


def padded_jacobi_check(cseq: Sequence, n: int, s: int, t: int) -> bool:
    """Jacobi's identity on :func:`padded_hankel` with rows ``s+1, t+2`` and
    the last two columns (1-based), for ``0 <= s <= t <= n``."""
    if not 0 <= s <= t <= n:
        raise ValueError("need 0 <= s <= t <= n")
    return jacobi_identity_check(padded_hankel(cseq, n), s + 1, t + 2, n + 1, n + 2)
