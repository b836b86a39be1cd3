"""Dense exact matrices and determinant kernels.

Entries are Fractions, :class:`UniPoly` or :class:`MultiPoly` values; a
matrix should hold a single kind.  All kernels only use ring operations
plus exact division, so they work unchanged over every entry kind.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .poly import UniPoly


class DimensionError(ValueError):
    pass


def _coerce(x):
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    return x


def _is_rational(x) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def exact_div(a, b):
    """``a / b`` where the quotient is known to be exact in the entry ring."""
    if _is_rational(a) and _is_rational(b):
        return Fraction(a) / b
    if not a:
        return a
    if _is_rational(a):
        # rational numerator over a polynomial: only constants divide
        return a / _as_constant(b)
    return a.exquo(b)


def _as_constant(p):
    if isinstance(p, UniPoly) and p.degree == 0:
        return p.coeffs[0]
    if hasattr(p, "is_constant") and p.is_constant() and p:
        return next(iter(p.terms.values()))
    raise ArithmeticError("rational divided by a non-constant polynomial")


class RatMatrix:
    """Immutable row-major matrix."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries):
        entries = tuple(_coerce(e) for e in entries)
        if len(entries) != rows * cols:
            raise DimensionError(
                f"{len(entries)} entries do not fill a {rows}x{cols} matrix")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows) -> "RatMatrix":
        rows = [list(r) for r in rows]
        if not rows:
            return cls(0, 0, ())
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged rows")
        return cls(len(rows), ncols, [e for r in rows for e in r])

    @classmethod
    def from_function(cls, rows: int, cols: int, f) -> "RatMatrix":
        return cls(rows, cols, [f(i, j) for i in range(rows) for j in range(cols)])

    @classmethod
    def identity(cls, n: int, one=Fraction(1)) -> "RatMatrix":
        zero = one * 0
        return cls.from_function(n, n, lambda i, j: one if i == j else zero)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def tolist(self) -> list[list]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols])
                for i in range(self.rows)]

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and all(
            a == b for a, b in zip(self.entries, other.entries))

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"RatMatrix.from_rows({self.tolist()!r})"

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError("shape mismatch in addition")
        return RatMatrix(self.rows, self.cols,
                         [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError("shape mismatch in subtraction")
        return RatMatrix(self.rows, self.cols,
                         [a - b for a, b in zip(self.entries, other.entries)])

    def scale(self, c) -> "RatMatrix":
        return RatMatrix(self.rows, self.cols, [e * c for e in self.entries])

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise DimensionError("inner dimensions differ")
        a, b = self.tolist(), other.tolist()
        out = []
        for i in range(self.rows):
            row = a[i]
            for j in range(other.cols):
                acc = None
                for k in range(self.cols):
                    if row[k] and b[k][j]:
                        term = row[k] * b[k][j]
                        acc = term if acc is None else acc + term
                out.append(acc if acc is not None else row[0] * 0 if row else 0)
        return RatMatrix(self.rows, other.cols, out)

    def transpose(self) -> "RatMatrix":
        return RatMatrix.from_function(self.cols, self.rows, lambda i, j: self[j, i])

    def submatrix(self, row_idx, col_idx) -> "RatMatrix":
        row_idx, col_idx = list(row_idx), list(col_idx)
        return RatMatrix(len(row_idx), len(col_idx),
                         [self[i, j] for i in row_idx for j in col_idx])

    def minor_matrix(self, drop_rows=(), drop_cols=()) -> "RatMatrix":
        """Delete the given 0-based rows and columns."""
        keep_r = [i for i in range(self.rows) if i not in set(drop_rows)]
        keep_c = [j for j in range(self.cols) if j not in set(drop_cols)]
        return self.submatrix(keep_r, keep_c)

    def map(self, f) -> "RatMatrix":
        return RatMatrix(self.rows, self.cols, [f(e) for e in self.entries])


def as_matrix(m) -> RatMatrix:
    return m if isinstance(m, RatMatrix) else RatMatrix.from_rows(m)


def _require_square(m: RatMatrix) -> None:
    if not m.is_square:
        raise DimensionError(f"determinant of a non-square {m.rows}x{m.cols} matrix")


# ----------------------------------------------------------------------
# determinants
# ----------------------------------------------------------------------

def _bareiss(a: list[list], div) -> object:
    """Fraction-free elimination in place with full pivot search."""
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not a[k][k]:
            pivot = None
            for j in range(k, n):
                for i in range(k, n):
                    if a[i][j]:
                        pivot = (i, j)
                        break
                if pivot:
                    break
            if pivot is None:
                return a[k][k] * 0
            pi, pj = pivot
            if pi != k:
                a[k], a[pi] = a[pi], a[k]
                sign = -sign
            if pj != k:
                for row in a:
                    row[k], row[pj] = row[pj], row[k]
                sign = -sign
        akk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                val = akk * ri[j] - aik * rk[j]
                ri[j] = div(val, prev) if k else val
            ri[k] = aik * 0
        prev = akk
    return a[n - 1][n - 1] if sign > 0 else -a[n - 1][n - 1]


def det_fraction_free(m) -> object:
    """Exact determinant by Bareiss elimination.

    Rational matrices are scaled row-wise to integers first so the
    elimination runs on Python ints; polynomial matrices use exact
    polynomial division.
    """
    m = as_matrix(m)
    _require_square(m)
    n = m.rows
    if n == 0:
        return Fraction(1)
    rows = m.tolist()
    if all(_is_rational(e) for e in m.entries):
        scale = Fraction(1)
        int_rows = []
        for row in rows:
            den = lcm(*(Fraction(e).denominator for e in row))
            scale *= den
            int_rows.append([int(e * den) for e in row])
        if n == 1:
            return Fraction(int_rows[0][0]) / scale
        return Fraction(_bareiss(int_rows, lambda v, p: v // p)) / scale
    if n == 1:
        return rows[0][0]
    return _bareiss(rows, exact_div)


def det_condensation(m) -> object:
    """Determinant by Dodgson condensation.

    Each condensation step produces the determinants of all contiguous
    (k+1)x(k+1) minors from the k x k and (k-1)x(k-1) ones via Jacobi's
    identity.  When the interior divisor vanishes, that single contiguous
    minor is evaluated by :func:`det_fraction_free` instead.
    """
    m = as_matrix(m)
    _require_square(m)
    n = m.rows
    if n == 0:
        return Fraction(1)
    a = m.tolist()
    one = a[0][0] * 0 + 1
    prev = [[one] * (n + 1) for _ in range(n + 1)]
    cur = a
    for k in range(1, n):
        size = n - k
        new = []
        for i in range(size):
            row = []
            for j in range(size):
                val = cur[i][j] * cur[i + 1][j + 1] - cur[i][j + 1] * cur[i + 1][j]
                divisor = prev[i + 1][j + 1]
                if divisor:
                    row.append(exact_div(val, divisor) if k > 1 else val)
                else:
                    block = m.submatrix(range(i, i + k + 1), range(j, j + k + 1))
                    row.append(det_fraction_free(block))
            new.append(row)
        prev, cur = cur, new
    return cur[0][0]


def jacobi_identity_check(m, i1: int, i2: int, j1: int, j2: int) -> bool:
    """Check Jacobi's minor identity for 1-based rows i1<i2, columns j1<j2.

    ``det A * det A[i1,i2 ; j1,j2] == det A[i1;j1] det A[i2;j2]
    - det A[i1;j2] det A[i2;j1]`` where ``A[rows; cols]`` deletes the
    listed rows and columns.
    """
    m = as_matrix(m)
    _require_square(m)
    n = m.rows
    if not (1 <= i1 < i2 <= n and 1 <= j1 < j2 <= n):
        raise IndexError(f"need 1 <= i1 < i2 <= {n} and 1 <= j1 < j2 <= {n}")
    r1, r2, c1, c2 = i1 - 1, i2 - 1, j1 - 1, j2 - 1

    def minor(rows, cols):
        return det_fraction_free(m.minor_matrix(rows, cols))

    lhs = det_fraction_free(m) * minor((r1, r2), (c1, c2))
    rhs = minor((r1,), (c1,)) * minor((r2,), (c2,)) - minor((r1,), (c2,)) * minor((r2,), (c1,))
    return lhs == rhs


def vandermonde_product(points) -> object:
    """``prod_{i<j} (points[j] - points[i])``; 1 for fewer than two points."""
    pts = [_coerce(p) for p in points]
    acc = Fraction(1)
    for j in range(len(pts)):
        for i in range(j):
            acc = acc * (pts[j] - pts[i])
    return acc


# ----------------------------------------------------------------------
# characteristic polynomial, tensor products
# ----------------------------------------------------------------------

def char_poly(m, var: str = "X") -> UniPoly:
    """``det(X*I - m)`` by the Faddeev-LeVerrier recursion.

    Only ring operations and division by small integers are needed, so the
    entries may be MultiPoly values; the result is then a UniPoly whose
    coefficients are MultiPoly.
    """
    m = as_matrix(m)
    _require_square(m)
    n = m.rows
    if n == 0:
        return UniPoly((1,), var)
    a = m.tolist()
    zero = a[0][0] * 0
    one = zero + 1
    coeffs = [zero] * (n + 1)
    coeffs[n] = one
    # sparse view of A: row -> [(k, a_ik)]
    a_sparse = [[(k, e) for k, e in enumerate(row) if e] for row in a]
    mk = [[zero] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        c = coeffs[n - k + 1]
        new = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = zero
                for kk, aik in a_sparse[i]:
                    v = mk[kk][j]
                    if v:
                        acc = acc + aik * v
                if i == j:
                    acc = acc + c
                row.append(acc)
            new.append(row)
        mk = new
        trace = zero
        for i in range(n):
            for kk, aik in a_sparse[i]:
                v = mk[kk][i]
                if v:
                    trace = trace + aik * v
        coeffs[n - k] = trace * Fraction(-1, k)
    return UniPoly(coeffs, var)


def kronecker_product(a, b) -> RatMatrix:
    a, b = as_matrix(a), as_matrix(b)
    rows, cols = a.rows * b.rows, a.cols * b.cols

    def entry(i, j):
        return a[i // b.rows, j // b.cols] * b[i % b.rows, j % b.cols]

    return RatMatrix.from_function(rows, cols, entry)


def rref_solve(a, b):
    """Solve ``a @ x = b`` over the rationals by reduced row echelon form.

    Returns the solution with every free variable set to zero, or None when
    the system is inconsistent.
    """
    a = as_matrix(a)
    rows = [[Fraction(e) for e in row] + [Fraction(bi)]
            for row, bi in zip(a.tolist(), b)]
    ncols = a.cols
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [vi - f * vr for vi, vr in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    if any(row[-1] for row in rows[r:]):
        return None
    x = [Fraction(0)] * ncols
    for i, col in enumerate(pivots):
        x[col] = rows[i][-1]
    return x
