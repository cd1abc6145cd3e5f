"""Exact rational scalars, dense matrices and univariate polynomials.

Everything here works over ``fractions.Fraction``; there is no floating
point anywhere in the package.  Matrices are small (dimension at most a
dozen or so), dense and immutable.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Rational = Fraction

_RATIONAL_RE = re.compile(r"^-?(0|[1-9][0-9]*)(/[1-9][0-9]*)?$")


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and canonical strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def format_rational(q: Fraction) -> str:
    """Canonical text form: ``"p/q"``, or ``"p"`` when the denominator is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse a canonical rational string; anything non-canonical is rejected.

    ``"2/4"``, ``"1/1"``, ``"+3"``, ``"-0"`` and ``"007"`` all raise ValueError.
    """
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise ValueError(f"malformed rational {text!r}")
    q = Fraction(text)
    if format_rational(q) != text:
        raise ValueError(f"non-canonical rational {text!r} (expected {format_rational(q)!r})")
    return q


class Matrix:
    """Immutable dense matrix with Fraction entries, stored row-major."""

    __slots__ = ("rows", "cols", "_data", "_hash")

    def __init__(self, rows: Iterable[Iterable], cols: int | None = None):
        data = tuple(tuple(as_rational(x) for x in row) for row in rows)
        if cols is None:
            cols = len(data[0]) if data else 0
        for row in data:
            if len(row) != cols:
                raise ValueError("ragged matrix rows")
        self.rows = len(data)
        self.cols = cols
        self._data = data
        self._hash = None

    # construction helpers
    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "Matrix":
        cols = rows if cols is None else cols
        return cls(((0,) * cols for _ in range(rows)), cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(((1 if i == j else 0 for j in range(n)) for i in range(n)), n)

    @classmethod
    def diag(cls, entries: Sequence) -> "Matrix":
        n = len(entries)
        return cls(((entries[i] if i == j else 0 for j in range(n)) for i in range(n)), n)

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> "Matrix":
        """The matrix unit E_{ij} (1-based indices, like the basis labels)."""
        return cls(((1 if (r, c) == (i - 1, j - 1) else 0 for c in range(n)) for r in range(n)), n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> "Matrix":
        if not columns:
            return cls.zeros(rows or 0, 0)
        nrows = len(columns[0])
        return cls(((col[i] for col in columns) for i in range(nrows)), len(columns))

    @classmethod
    def from_flat(cls, flat: Sequence, rows: int, cols: int) -> "Matrix":
        if len(flat) != rows * cols:
            raise ValueError("flat entry list has the wrong length")
        return cls((flat[r * cols:(r + 1) * cols] for r in range(rows)), cols)

    # access
    def __getitem__(self, idx):
        i, j = idx
        return self._data[i][j]

    def row(self, i: int) -> tuple:
        return self._data[i]

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self._data)

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._data]

    def flatten(self) -> tuple:
        return tuple(x for row in self._data for x in row)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(x == 0 for row in self._data for x in row)

    # arithmetic
    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self._data))
        return self._hash

    def __add__(self, other: "Matrix") -> "Matrix":
        _same_shape(self, other)
        return Matrix((tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)), self.cols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        _same_shape(self, other)
        return Matrix((tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)), self.cols)

    def __neg__(self) -> "Matrix":
        return Matrix((tuple(-a for a in r) for r in self._data), self.cols)

    def __mul__(self, scalar) -> "Matrix":
        if isinstance(scalar, Matrix):
            return NotImplemented
        s = as_rational(scalar)
        return Matrix((tuple(s * a for a in r) for r in self._data), self.cols)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            ocols = [other.column(j) for j in range(other.cols)]
            return Matrix(
                (tuple(_dot(r, c) for c in ocols) for r in self._data), other.cols
            )
        vec = tuple(other)
        if len(vec) != self.cols:
            raise ValueError("vector length does not match matrix columns")
        return tuple(_dot(r, vec) for r in self._data)

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self._data), self.rows) if self.rows else Matrix.zeros(self.cols, 0)

    T = property(transpose)

    def trace(self) -> Fraction:
        _require_square(self)
        return sum((self._data[i][i] for i in range(self.rows)), Fraction(0))

    def __pow__(self, k: int) -> "Matrix":
        _require_square(self)
        if k < 0:
            raise ValueError("negative matrix powers are not supported")
        result = Matrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def __repr__(self):
        body = "; ".join(" ".join(format_rational(x) for x in r) for r in self._data)
        return f"Matrix({self.rows}x{self.cols}: [{body}])"


def _dot(u, v) -> Fraction:
    s = Fraction(0)
    for a, b in zip(u, v):
        if a and b:
            s += a * b
    return s


def _same_shape(a: Matrix, b: Matrix) -> None:
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch {a.shape} vs {b.shape}")


def _require_square(m: Matrix) -> None:
    if not m.is_square:
        raise ValueError(f"square matrix required, got {m.rows}x{m.cols}")


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return a @ b - b @ a


# --------------------------------------------------------------------------
# Row reduction
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class RREF:
    reduced: Matrix
    pivot_columns: tuple[int, ...]
    rank: int


def sparse_rref(rows: Iterable[dict[int, Fraction]]) -> list[dict[int, Fraction]]:
    """Reduced row-echelon form of sparse rows ``{column: value}``.

    Rows are folded in one at a time against the pivots found so far, which
    keeps the tall, very sparse systems produced by the derivation solver
    cheap.  The result is sorted by pivot column, every pivot equals 1 and
    every pivot column is zero in all other rows.
    """
    pivots: dict[int, dict[int, Fraction]] = {}
    for raw in rows:
        row = {c: Fraction(v) for c, v in raw.items() if v}
        # eliminate known pivots; pivot rows are only partially reduced
        # against each other, so repeat until no pivot column survives
        while row:
            hit = next((c for c in sorted(row) if c in pivots), None)
            if hit is None:
                break
            factor = row[hit]
            for c, v in pivots[hit].items():
                nv = row.get(c, 0) - factor * v
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
        if not row:
            continue
        lead = min(row)
        inv = 1 / row[lead]
        pivots[lead] = {c: v * inv for c, v in row.items()}
    # back-substitution to reach the reduced form
    order = sorted(pivots)
    for idx in range(len(order) - 1, -1, -1):
        p = order[idx]
        prow = pivots[p]
        for q in order[:idx]:
            other = pivots[q]
            factor = other.get(p)
            if factor:
                for c, v in prow.items():
                    nv = other.get(c, 0) - factor * v
                    if nv:
                        other[c] = nv
                    else:
                        other.pop(c, None)
    return [pivots[p] for p in order]


def rref(m: Matrix) -> RREF:
    """Reduced row-echelon form, pivoting on the first nonzero entry."""
    sparse = sparse_rref({j: x for j, x in enumerate(m.row(i)) if x} for i in range(m.rows))
    pivots = tuple(min(r) for r in sparse)
    dense = [[r.get(j, Fraction(0)) for j in range(m.cols)] for r in sparse]
    dense += [[Fraction(0)] * m.cols for _ in range(m.rows - len(sparse))]
    return RREF(Matrix(dense, m.cols), pivots, len(pivots))


def rank(m: Matrix) -> int:
    return rref(m).rank


def nullspace_sparse(rows: Iterable[dict[int, Fraction]], ncols: int) -> list[tuple[Fraction, ...]]:
    """Kernel basis of a sparse system, one vector per free column."""
    reduced = sparse_rref(rows)
    pivot_of = {min(r): r for r in reduced}
    free = [c for c in range(ncols) if c not in pivot_of]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for p, r in pivot_of.items():
            coeff = r.get(f)
            if coeff:
                v[p] = -coeff
        basis.append(tuple(v))
    return basis


def nullspace(m: Matrix) -> Matrix:
    """Rows of the result form a basis of ``{v : m v = 0}``."""
    rows = ({j: x for j, x in enumerate(m.row(i)) if x} for i in range(m.rows))
    basis = nullspace_sparse(rows, m.cols)
    return Matrix(basis, m.cols)


def det(m: Matrix) -> Fraction:
    """Determinant by fraction Gaussian elimination."""
    _require_square(m)
    a = m.tolist()
    n = m.rows
    result = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            result = -result
        p = a[col][col]
        result *= p
        for r in range(col + 1, n):
            f = a[r][col]
            if f:
                f = f / p
                for c in range(col, n):
                    a[r][c] -= f * a[col][c]
    return result


def inverse(m: Matrix) -> Matrix:
    _require_square(m)
    n = m.rows
    aug = Matrix((tuple(m.row(i)) + tuple(1 if j == i else 0 for j in range(n)) for i in range(n)), 2 * n)
    red = rref(aug)
    if red.pivot_columns[:n] != tuple(range(n)):
        raise ValueError("matrix is singular")
    return Matrix((red.reduced.row(i)[n:] for i in range(n)), n)


# --------------------------------------------------------------------------
# Polynomials
# --------------------------------------------------------------------------

class UniPoly:
    """Univariate polynomial with Fraction coefficients, ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [as_rational(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> "UniPoly":
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial reports -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return UniPoly(x + y for x, y in zip(a, b))

    def __neg__(self) -> "UniPoly":
        return UniPoly(-x for x in self.coeffs)

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other) -> "UniPoly":
        if not isinstance(other, UniPoly):
            s = as_rational(other)
            return UniPoly(s * x for x in self.coeffs)
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.leading
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if c:
                f = c / lead
                quot[k - dq] = f
                for j, b in enumerate(other.coeffs):
                    rem[k - dq + j] -= f * b
        return UniPoly(quot), UniPoly(rem)

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self * (1 / self.leading)

    def eval_matrix(self, m: Matrix) -> Matrix:
        """Horner evaluation p(m)."""
        _require_square(m)
        acc = Matrix.zeros(m.rows)
        ident = Matrix.identity(m.rows)
        for c in reversed(self.coeffs):
            acc = acc @ m + ident * c
        return acc

    def rational_roots(self) -> list[Fraction]:
        """All distinct rational roots (rational root theorem)."""
        if self.is_zero():
            raise ValueError("the zero polynomial has every number as a root")
        coeffs = list(self.coeffs)
        roots: list[Fraction] = []
        if coeffs[0] == 0:
            roots.append(Fraction(0))
            while coeffs and coeffs[0] == 0:
                coeffs.pop(0)
        if len(coeffs) <= 1:
            return roots
        denom = 1
        for c in coeffs:
            denom = denom * c.denominator // gcd(denom, c.denominator)
        ints = [int(c * denom) for c in coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        ints = [v // g for v in ints]
        p = UniPoly(coeffs)
        for num in _divisors(abs(ints[0])):
            for den in _divisors(abs(ints[-1])):
                for sign in (1, -1):
                    r = Fraction(sign * num, den)
                    if r not in roots and p(r) == 0:
                        roots.append(r)
        return sorted(roots)

    def __repr__(self):
        return f"UniPoly({[format_rational(c) for c in self.coeffs]})"

    def __str__(self):
        return self.to_string()

    def to_string(self, var: str = "t") -> str:
        if self.is_zero():
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = format_rational(mag)
            else:
                head = "" if mag == 1 else format_rational(mag)
                body = head + (var if k == 1 else f"{var}^{k}")
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _divisors(n: int) -> list[int]:
    if n == 0:
        return [0]
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd over Q[t] by the Euclidean algorithm (gcd(0, 0) = 0)."""
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
        if not b.is_zero():
            b = b.monic()
    return a.monic()


def charpoly(m: Matrix) -> UniPoly:
    """Characteristic polynomial det(tI - m) via Faddeev-LeVerrier."""
    _require_square(m)
    n = m.rows
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    ident = Matrix.identity(n)
    mk = Matrix.zeros(n)
    for k in range(1, n + 1):
        mk = m @ mk + ident * coeffs[n - k + 1]
        coeffs[n - k] = -(m @ mk).trace() / k
    return UniPoly(coeffs)


def is_nilpotent_matrix(m: Matrix) -> bool:
    """True iff the characteristic polynomial is t^n."""
    _require_square(m)
    return charpoly(m) == UniPoly.monomial(m.rows)
