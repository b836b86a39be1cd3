"""Linear recurrences for scaled Hankel determinants of moment combinations.

When the recurrence data is eventually constant (``s_i = s``, ``t_i = t``),
the sequence

    H_n = t_0^-(n-1) t^-binom(n-1, 2) det(sum_k lambda_k mu_{i+j+k})

satisfies a recurrence of order ``2^d`` whose coefficients are those of the
characteristic polynomial of ``(x) [[x_l + s, t], [-1, 0]]`` written in
terms of ``lambda_k = e_{d-k}(x)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from math import comb
from typing import Sequence

from .exact_core import (
    MultiPoly,
    RatMatrix,
    UniPoly,
    char_poly,
    format_rational,
    kronecker_product,
    rref_solve,
    sym_reduce,
    to_rational,
)
from .identity import LinearCombination, lhs_hankel
from .orthopoly import RecurrenceCoeffs, hankel_base_det, moments_from_coeffs

WINDOW_RULES = ("cor9", "remark2a", "remark2b")
SYMBOLIC_MAX_D = 3


class InsufficientTermsError(ValueError):
    pass


@dataclass(frozen=True)
class ScaledHankelSeq:
    values: tuple  # H_0, H_1, ...
    coeffs: RecurrenceCoeffs
    lam: LinearCombination

    def __len__(self):
        return len(self.values)

    def __getitem__(self, n):
        return self.values[n]


@dataclass(frozen=True)
class RecurrenceSpec:
    order: int
    c: tuple  # c_0 .. c_order, c_0 == 1
    validity_start: int
    window_rule: str = "cor9"

    def __post_init__(self):
        c = tuple(to_rational(v) for v in self.c)
        if len(c) != self.order + 1:
            raise ValueError(f"expected {self.order + 1} coefficients, got {len(c)}")
        if c[0] != 1:
            raise ValueError("c_0 must equal 1")
        if self.window_rule not in WINDOW_RULES:
            raise ValueError(f"unknown window rule {self.window_rule!r}")
        object.__setattr__(self, "c", c)

    def to_json(self) -> dict:
        return {"order": self.order,
                "c": [format_rational(v) for v in self.c],
                "validity_start": self.validity_start,
                "window_rule": self.window_rule}

    @classmethod
    def from_json(cls, doc) -> "RecurrenceSpec":
        if isinstance(doc, str):
            doc = json.loads(doc)
        try:
            return cls(int(doc["order"]), tuple(doc["c"]),
                       int(doc["validity_start"]), doc.get("window_rule", "cor9"))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed recurrence document: {exc}") from None


def tail_scaling(c: RecurrenceCoeffs, n: int) -> Fraction:
    """``t_0^(n-1) t^binom(n-1, 2)`` with ``t`` the tail value (1 for n = 0)."""
    if n == 0:
        return Fraction(1)
    return c.t(0) ** (n - 1) * c.t_tail ** comb(n - 1, 2)


def scaled_hankel_seq(c: RecurrenceCoeffs, lc: LinearCombination, count: int,
                      scaling: str = "tail") -> ScaledHankelSeq:
    """H_0 .. H_{count-1}, with H_0 = 1.

    ``scaling="base"`` divides by the plain moment Hankel determinant
    instead; the two agree whenever both prefixes have length at most 1,
    and only the latter keeps the recurrence when the ``t`` prefix is longer.
    """
    if scaling not in ("tail", "base"):
        raise ValueError(f"unknown scaling {scaling!r}")
    if count < 0:
        raise ValueError("count must be non-negative")
    moments = moments_from_coeffs(c, max(2 * count - 3 + lc.d, 1))
    vals = []
    for n in range(count):
        if n == 0:
            vals.append(Fraction(1))
            continue
        div = tail_scaling(c, n) if scaling == "tail" else hankel_base_det(c, n)
        vals.append(lhs_hankel(moments, lc, n) / div)
    return ScaledHankelSeq(tuple(vals), c, lc)


def _tensor_block(x, s, t, nvars):
    one = MultiPoly.constant(1, nvars)
    zero = MultiPoly.constant(0, nvars)
    return RatMatrix.from_rows([[x + s, one * t], [-one, zero]])


@lru_cache(maxsize=64)
def _symbolic_charpoly(d: int, s: Fraction, t: Fraction) -> tuple:
    """Coefficients of X^(2^d - i), i = 0..2^d, reduced to elementary
    symmetric polynomials (variable k stands for e_{k+1})."""
    xs = MultiPoly.gens(d)
    if d == 0:
        mat = RatMatrix.from_rows([[MultiPoly.constant(1, 0)]])
    else:
        mat = reduce(kronecker_product, [_tensor_block(x, s, t, d) for x in xs])
    cp = char_poly(mat)
    size = 2 ** d
    out = []
    for i in range(size + 1):
        coeff = cp.coeff(size - i)
        if not isinstance(coeff, MultiPoly):
            coeff = MultiPoly.constant(coeff, d)
        out.append(sym_reduce(coeff))
    return tuple(out)


def charpoly_tensor(lc: LinearCombination, s, t) -> UniPoly:
    """Monic degree ``2^d`` polynomial whose coefficients ``c_0..c_{2^d}``
    (from the top) define the recurrence."""
    s, t = to_rational(s), to_rational(t)
    d = lc.d
    if d > SYMBOLIC_MAX_D:
        raise NotImplementedError(
            f"symbolic synthesis is limited to d <= {SYMBOLIC_MAX_D}; "
            "use synthesize_recurrence(..., symbolic=True) to force it")
    return _charpoly_tensor(lc, s, t)


def _charpoly_tensor(lc: LinearCombination, s: Fraction, t: Fraction) -> UniPoly:
    d = lc.d
    # e_j = lambda_{d-j}
    e_vals = [lc.lam[d - j] for j in range(1, d + 1)]
    cs = [q.evaluate(e_vals) for q in _symbolic_charpoly(d, s, t)]
    return UniPoly(list(reversed(cs)), var="X")


def c1_value(lc: LinearCombination, s) -> Fraction:
    """``-sum_j lambda_j s^j``."""
    s = to_rational(s)
    return -sum((lam * s ** j for j, lam in enumerate(lc.lam)), Fraction(0))


def symmetry_check(spec: RecurrenceSpec, t, d: int) -> bool:
    """Whether ``c_{2^d - i} = t^(d (2^(d-1) - i)) c_i`` for all i.

    For ``d = 0`` the exponent is fractional and the relation is void.
    """
    t = to_rational(t)
    if d < 1:
        raise ValueError("the symmetry relation needs d >= 1")
    size = 2 ** d
    if spec.order != size:
        raise ValueError(f"spec has order {spec.order}, expected {size}")
    half = 2 ** (d - 1)
    for i in range(size + 1):
        e = d * (half - i)
        if spec.c[size - i] != t ** e * spec.c[i]:
            return False
    return True


def window_rule(c: RecurrenceCoeffs, d: int) -> tuple[int, str]:
    """First index from which the recurrence is asserted, and which rule gave it."""
    size = 2 ** d
    if len(c.s_prefix) <= 1 and not c.t_prefix:
        return size, "remark2a"
    if len(c.s_prefix) <= 1 and len(c.t_prefix) <= 1:
        return size + 1, "cor9"
    n_const = max(len(c.s_prefix) - 1, len(c.t_prefix))
    return size + n_const, "remark2b"


def default_scaling(c: RecurrenceCoeffs) -> str:
    """Prefixes longer than one break the plain t_0/t scaling; see
    :func:`scaled_hankel_seq`."""
    return "tail" if len(c.t_prefix) <= 1 else "base"


def spec_from_poly(poly: UniPoly, c: RecurrenceCoeffs, d: int) -> RecurrenceSpec:
    size = 2 ** d
    start, rule = window_rule(c, d)
    return RecurrenceSpec(size, tuple(poly.coeff(size - i) for i in range(size + 1)),
                          start, rule)


def verify_recurrence(seq: ScaledHankelSeq | Sequence, spec: RecurrenceSpec) -> bool:
    values = seq.values if isinstance(seq, ScaledHankelSeq) else tuple(seq)
    start = max(spec.validity_start, spec.order)
    checkable = len(values) - start
    if checkable < spec.order + 4:
        raise InsufficientTermsError(
            f"{checkable} checkable instances from n = {start}; "
            f"need at least {spec.order + 4}")
    return first_failure(values, spec) is None


def first_failure(values: Sequence, spec: RecurrenceSpec) -> int | None:
    """Smallest checkable n where the recurrence fails, or None."""
    start = max(spec.validity_start, spec.order)
    for n in range(start, len(values)):
        if sum((ci * values[n - i] for i, ci in enumerate(spec.c)), Fraction(0)):
            return n
    return None


def fit_recurrence(seq: ScaledHankelSeq | Sequence, order: int, start: int,
                   window_rule_name: str = "cor9") -> RecurrenceSpec | None:
    """Solve for ``c_1..c_order`` (``c_0 = 1``) from all instances ``n >= start``.

    Underdetermined systems are resolved by setting free variables to zero
    after reduction, so the answer is reproducible.  Returns None when no
    recurrence of this order fits.
    """
    values = [to_rational(v) for v in
              (seq.values if isinstance(seq, ScaledHankelSeq) else seq)]
    if order < 0:
        raise ValueError("order must be non-negative")
    first = max(start, order)
    if len(values) - first < 2 * order + 2:
        raise InsufficientTermsError(
            f"need {2 * order + 2} terms from n = {first}, have {len(values) - first}")
    rows = [[values[n - i] for i in range(1, order + 1)] for n in range(first, len(values))]
    rhs = [-values[n] for n in range(first, len(values))]
    if order == 0:
        if any(rhs):
            return None
        return RecurrenceSpec(0, (Fraction(1),), start, window_rule_name)
    sol = rref_solve(RatMatrix.from_rows(rows), rhs)
    if sol is None:
        return None
    return RecurrenceSpec(order, (Fraction(1), *sol), start, window_rule_name)


def synthesize_recurrence(c: RecurrenceCoeffs, lc: LinearCombination,
                          symbolic: bool = False) -> RecurrenceSpec:
    """Recurrence for the scaled Hankel sequence of ``(c, lc)``.

    Up to ``d = 3`` (or with ``symbolic=True``) the coefficients come from
    the tensor characteristic polynomial.  Beyond that they are fitted from
    a long enough sequence and then checked on further terms.
    """
    d = lc.d
    if d <= SYMBOLIC_MAX_D or symbolic:
        return spec_from_poly(_charpoly_tensor(lc, c.s_tail, c.t_tail), c, d)
    start, rule = window_rule(c, d)
    order = 2 ** d
    count = start + 2 * order + 2 + order + 4
    seq = scaled_hankel_seq(c, lc, count, default_scaling(c))
    spec = fit_recurrence(seq.values[:start + 2 * order + 2], order, start, rule)
    if spec is None or not verify_recurrence(seq, spec):
        raise ArithmeticError("no recurrence of order 2^d fits the sequence")
    return spec


def minimal_recurrence(seq: ScaledHankelSeq | Sequence, max_order: int,
                       start: int) -> RecurrenceSpec | None:
    """Lowest-order recurrence fitting every instance from ``start`` on."""
    values = seq.values if isinstance(seq, ScaledHankelSeq) else tuple(seq)
    for order in range(max_order + 1):
        try:
            spec = fit_recurrence(values, order, start)
        except InsufficientTermsError:
            return None
        if spec is not None:
            return spec
    return None


def recurrence_poly(spec: RecurrenceSpec) -> UniPoly:
    """``sum c_i X^(order - i)``."""
    return UniPoly(list(reversed(spec.c)), var="X")
