"""Dense univariate polynomials with exact coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import factorial


def _coerce_coeff(c):
    if isinstance(c, int) and not isinstance(c, bool):
        return Fraction(c)
    return c


class UniPoly:
    """Immutable polynomial ``sum(coeffs[k] * var**k)``.

    Coefficients are normally Fractions, but any commutative ring element
    supporting ``+``, ``*`` and truthiness works (MultiPoly coefficients are
    used for characteristic polynomials of symbolic matrices).  The zero
    polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=(), var: str = "x"):
        cs = [_coerce_coeff(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self.var = var

    # construction -----------------------------------------------------
    @classmethod
    def constant(cls, c, var: str = "x") -> "UniPoly":
        return cls((c,), var)

    @classmethod
    def x(cls, var: str = "x") -> "UniPoly":
        return cls((0, 1), var)

    @classmethod
    def from_roots(cls, roots, var: str = "x") -> "UniPoly":
        """Monic polynomial ``prod(var - r)``."""
        p = cls((1,), var)
        for r in roots:
            p = p * cls((-_coerce_coeff(r), 1), var)
        return p

    # basic protocol ---------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly((other,)).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("UniPoly", self.coeffs))

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)!r}, var={self.var!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else (self.var if k == 1 else f"{self.var}^{k}")
            if mono and c == 1:
                parts.append(mono)
            elif mono and c == -1:
                parts.append("-" + mono)
            elif mono:
                parts.append(f"({c})*{mono}")
            else:
                parts.append(f"{c}")
        return " + ".join(parts).replace("+ -", "- ")

    # arithmetic -------------------------------------------------------
    def _lift(self, other):
        if isinstance(other, UniPoly):
            return other
        return UniPoly((other,), self.var)

    def __add__(self, other):
        other = self._lift(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return UniPoly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            other = _coerce_coeff(other)
            return UniPoly([c * other for c in self.coeffs], self.var)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly((), self.var)
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                out[i + j] = out[i + j] + ca * cb
        return UniPoly(out, self.var)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = UniPoly((1,), self.var)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __truediv__(self, other):
        """Division by a nonzero scalar only; use :meth:`exquo` for polys."""
        if isinstance(other, UniPoly):
            if other.degree == 0:
                other = other.coeffs[0]
            else:
                return self.exquo(other)
        other = _coerce_coeff(other)
        return UniPoly([c / other for c in self.coeffs], self.var)

    def divmod(self, other: "UniPoly"):
        """Euclidean division over the coefficient field."""
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly((), self.var), self
        quot = [Fraction(0)] * (dq + 1)
        for k in range(dq, -1, -1):
            c = rem[k + len(other.coeffs) - 1] / lead
            quot[k] = c
            if c:
                for i, oc in enumerate(other.coeffs):
                    rem[k + i] = rem[k + i] - c * oc
        return UniPoly(quot, self.var), UniPoly(rem, self.var)

    def exquo(self, other):
        """Exact quotient; raises ArithmeticError if a remainder is left."""
        if not isinstance(other, UniPoly):
            return self / other
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    # calculus & evaluation --------------------------------------------
    def __call__(self, value):
        """Horner evaluation; ``value`` may itself be a polynomial."""
        acc = 0 * value if isinstance(value, UniPoly) else Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def derivative(self, order: int = 1) -> "UniPoly":
        cs = list(self.coeffs)
        for _ in range(order):
            cs = [k * cs[k] for k in range(1, len(cs))]
        return UniPoly(cs, self.var)

    def taylor_coeff(self, j: int, y):
        """``p^(j)(y) / j!``, computed without factorials."""
        if j < 0:
            raise ValueError("Taylor order must be non-negative")
        y = _coerce_coeff(y)
        total = Fraction(0)
        # p^(j)(y)/j! = sum_k binom(k, j) c_k y^(k-j)
        binom = 1
        ypow = Fraction(1)
        for k in range(j, len(self.coeffs)):
            if k > j:
                binom = binom * k // (k - j)
                ypow = ypow * y
            total += binom * self.coeffs[k] * ypow
        return total

    def compose(self, inner: "UniPoly") -> "UniPoly":
        return self(inner)

    def scale_var(self, factor) -> "UniPoly":
        """``p(factor * x)``."""
        factor = _coerce_coeff(factor)
        out, f = [], Fraction(1)
        for c in self.coeffs:
            out.append(c * f)
            f *= factor
        return UniPoly(out, self.var)


def poly_taylor_coeff(p: UniPoly, j: int, y) -> Fraction:
    """Exact ``p^(j)(y)/j!``."""
    return p.taylor_coeff(j, y)


def derivative_at(p: UniPoly, j: int, y) -> Fraction:
    return p.taylor_coeff(j, y) * factorial(j)
