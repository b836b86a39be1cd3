"""Rewriting symmetric polynomials in elementary symmetric polynomials."""

from __future__ import annotations

from itertools import combinations

from .multipoly import MultiPoly


class SymmetryError(ValueError):
    """The polynomial is not invariant under permutations of its variables."""


def elementary_symmetric(nvars: int) -> list[MultiPoly]:
    """``[e_0, e_1, ..., e_nvars]`` as MultiPolys in ``nvars`` variables."""
    out = []
    for k in range(nvars + 1):
        terms = {}
        for idx in combinations(range(nvars), k):
            exps = [0] * nvars
            for i in idx:
                exps[i] = 1
            terms[tuple(exps)] = 1
        out.append(MultiPoly(nvars, terms))
    return out


def sym_reduce(p: MultiPoly) -> MultiPoly:
    """Express a symmetric ``p(x_1..x_d)`` as a polynomial in ``e_1..e_d``.

    The result is a MultiPoly in ``d`` variables where variable ``i``
    stands for ``e_{i+1}``.  Leading terms are removed in graded lex
    order: a leading monomial ``x^a`` with ``a_1 >= ... >= a_d`` is
    cancelled by ``e_1^(a_1-a_2) ... e_d^(a_d)``.
    """
    d = p.nvars
    if not p.is_symmetric():
        raise SymmetryError(f"{p} is not symmetric in its {d} variables")
    if d == 0:
        return MultiPoly(0, dict(p.terms))
    e = elementary_symmetric(d)[1:]
    pow_cache: dict = {}

    def e_pow(i, k):
        key = (i, k)
        if key not in pow_cache:
            pow_cache[key] = e[i] ** k
        return pow_cache[key]

    result: dict = {}
    rem = p
    while rem:
        exps, c = rem.leading_term()
        ks = tuple(exps[i] - exps[i + 1] for i in range(d - 1)) + (exps[d - 1],)
        if min(ks) < 0:
            raise SymmetryError("leading exponent is not a partition")
        prod = MultiPoly.constant(c, d)
        for i, k in enumerate(ks):
            if k:
                prod = prod * e_pow(i, k)
        result[ks] = result.get(ks, 0) + c
        rem = rem - prod
    return MultiPoly(d, result)


def expand_elementary(q: MultiPoly, nvars: int | None = None) -> MultiPoly:
    """Inverse of :func:`sym_reduce`: substitute ``e_j(x_1..x_d)`` for ``e_j``."""
    d = q.nvars if nvars is None else nvars
    e = elementary_symmetric(d)[1:]
    total = MultiPoly(d, {})
    for ks, c in q.terms.items():
        term = MultiPoly.constant(c, d)
        for i, k in enumerate(ks):
            if k:
                term = term * e[i] ** k
        total = total + term
    return total
