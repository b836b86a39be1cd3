"""Sparse multivariate polynomials over the rationals.

Terms are kept in a dict ``{exponent tuple: Fraction}``.  Monomials are
compared in graded lexicographic order with ``x_1 > x_2 > ... > x_d``.
"""

from __future__ import annotations

from fractions import Fraction


def grlex_key(exps: tuple[int, ...]):
    return (sum(exps), exps)


class MultiPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for exps, c in terms.items():
                if len(exps) != nvars:
                    raise ValueError(
                        f"exponent vector {exps} does not have {nvars} entries")
                if c:
                    clean[tuple(exps)] = Fraction(c)
        self.terms = clean

    @classmethod
    def _raw(cls, nvars, terms):
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        return obj

    @classmethod
    def constant(cls, c, nvars: int) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, i: int, nvars: int) -> "MultiPoly":
        """The variable ``x_{i+1}`` (0-based index ``i``)."""
        exps = [0] * nvars
        exps[i] = 1
        return cls(nvars, {tuple(exps): 1})

    @classmethod
    def gens(cls, nvars: int) -> list["MultiPoly"]:
        return [cls.var(i, nvars) for i in range(nvars)]

    # protocol ---------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MultiPoly.constant(other, self.nvars)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        return f"MultiPoly({self.nvars}, {self.terms!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms, key=grlex_key, reverse=True):
            c = self.terms[exps]
            mono = "*".join(
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}"
                for i, e in enumerate(exps) if e)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"({c})*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def leading_term(self):
        """``(exponents, coefficient)`` of the grlex-largest monomial."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exps = max(self.terms, key=grlex_key)
        return exps, self.terms[exps]

    # arithmetic -------------------------------------------------------
    def _lift(self, other):
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        return MultiPoly.constant(other, self.nvars)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return MultiPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            if isinstance(other, (int, Fraction)):
                if not other:
                    return MultiPoly._raw(self.nvars, {})
                return MultiPoly._raw(
                    self.nvars, {e: c * other for e, c in self.terms.items()})
            return NotImplemented
        if other.nvars != self.nvars:
            raise ValueError("variable count mismatch")
        out: dict = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = out.get(e, 0) + ca * cb
        return MultiPoly._raw(self.nvars, {e: c for e, c in out.items() if c})

    def __rmul__(self, other):
        return self * other

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, MultiPoly):
            if other.is_constant() and other:
                other = other.terms[(0,) * self.nvars]
            else:
                return self.exquo(other)
        inv = 1 / Fraction(other)
        return MultiPoly._raw(self.nvars, {e: c * inv for e, c in self.terms.items()})

    def exquo(self, other) -> "MultiPoly":
        """Exact division by repeated leading-term cancellation.

        Raises ArithmeticError when ``other`` does not divide ``self``.
        """
        if not isinstance(other, MultiPoly):
            return self / other
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        lead_e, lead_c = other.leading_term()
        rem = self
        quot: dict = {}
        while rem:
            e, c = rem.leading_term()
            diff = tuple(a - b for a, b in zip(e, lead_e))
            if min(diff) < 0:
                raise ArithmeticError("inexact multivariate division")
            q = c / lead_c
            quot[diff] = quot.get(diff, 0) + q
            rem = rem - MultiPoly._raw(self.nvars, {diff: q}) * other
        return MultiPoly(self.nvars, quot)

    # substitution -----------------------------------------------------
    def evaluate(self, values):
        """Substitute ``values[i]`` for ``x_{i+1}``; values may be any ring."""
        if len(values) != self.nvars:
            raise ValueError("wrong number of values")
        total = Fraction(0)
        for exps, c in self.terms.items():
            term = c
            for v, e in zip(values, exps):
                if e:
                    term = term * v ** e
            total = total + term
        return total

    def permute(self, perm) -> "MultiPoly":
        """Rename ``x_{i+1}`` to ``x_{perm[i]+1}``."""
        out = {}
        for exps, c in self.terms.items():
            new = [0] * self.nvars
            for i, e in enumerate(exps):
                new[perm[i]] = e
            out[tuple(new)] = c
        return MultiPoly._raw(self.nvars, out)

    def is_symmetric(self) -> bool:
        d = self.nvars
        for i in range(d - 1):
            perm = list(range(d))
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
            if self.permute(perm) != self:
                return False
        return True
