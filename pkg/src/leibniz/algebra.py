"""Structure-constant tables, brackets, subspaces and the algebra file format.

Basis vectors are labelled e_1..e_n with 1-based indices everywhere in the
public API.  Vectors are plain tuples of Fractions of length ``dim``
(position 0 holds the e_1 coefficient).
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .ratmat import Matrix, as_rational, format_rational, parse_rational, rref

Vector = tuple  # tuple[Fraction, ...]


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def basis_vector(n: int, i: int) -> Vector:
    """The vector e_i in dimension n (1-based)."""
    if not 1 <= i <= n:
        raise IndexError(f"basis index {i} outside 1..{n}")
    return tuple(Fraction(1) if k == i - 1 else Fraction(0) for k in range(n))


def vec(*entries) -> Vector:
    return tuple(as_rational(x) for x in entries)


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(s, u: Vector) -> Vector:
    s = as_rational(s)
    return tuple(s * a for a in u)


def is_zero_vector(u: Vector) -> bool:
    return all(a == 0 for a in u)


class AlgebraTable:
    """Sparse structure constants of an n-dimensional algebra.

    ``constants[(i, j)]`` is a dict ``{k: C_ij^k}`` holding only nonzero
    coefficients; absent pairs bracket to zero.
    """

    __slots__ = ("dim", "_constants", "_hash")

    def __init__(self, dim: int, constants: Mapping[tuple[int, int], Mapping[int, object]] | None = None):
        if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
            raise ValueError(f"dimension must be a non-negative integer, got {dim!r}")
        self.dim = dim
        clean: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (i, j), out in (constants or {}).items():
            for idx in (i, j):
                _check_index(idx, dim)
            row = {}
            for k, c in out.items():
                _check_index(k, dim)
                c = as_rational(c)
                if c:
                    row[k] = c
            if row:
                clean[(i, j)] = dict(sorted(row.items()))
        self._constants = dict(sorted(clean.items()))
        self._hash = None

    @classmethod
    def abelian(cls, dim: int) -> "AlgebraTable":
        return cls(dim, {})

    @classmethod
    def from_brackets(cls, dim: int, entries: Iterable[tuple[int, int, Mapping[int, object]]]) -> "AlgebraTable":
        """Build from ``(i, j, {k: c})`` triples, summing repeated pairs."""
        acc: dict[tuple[int, int], dict[int, Fraction]] = {}
        for i, j, out in entries:
            row = acc.setdefault((i, j), {})
            for k, c in out.items():
                row[k] = row.get(k, Fraction(0)) + as_rational(c)
        return cls(dim, acc)

    # structure access
    @property
    def constants(self) -> dict[tuple[int, int], dict[int, Fraction]]:
        return {key: dict(out) for key, out in self._constants.items()}

    def basis_bracket(self, i: int, j: int) -> dict[int, Fraction]:
        """Sparse coefficients of [e_i, e_j]; the returned dict must not be mutated."""
        return self._constants.get((i, j), _EMPTY)

    def bracket_vector(self, i: int, j: int) -> Vector:
        out = [Fraction(0)] * self.dim
        for k, c in self.basis_bracket(i, j).items():
            out[k - 1] = c
        return tuple(out)

    def pairs(self):
        return self._constants.items()

    def nonzero_pair_count(self) -> int:
        return len(self._constants)

    def restrict(self, n: int) -> "AlgebraTable":
        """Table of the span of e_1..e_n, which must be closed under brackets."""
        if not 0 <= n <= self.dim:
            raise ValueError(f"cannot restrict a {self.dim}-dimensional table to {n}")
        out = {}
        for (i, j), row in self._constants.items():
            if i <= n and j <= n:
                if any(k > n for k in row):
                    raise ValueError(f"[e{i},e{j}] leaves span(e1..e{n})")
                out[(i, j)] = row
        return AlgebraTable(n, out)

    def __eq__(self, other):
        if not isinstance(other, AlgebraTable):
            return NotImplemented
        return self.dim == other.dim and self._constants == other._constants

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.dim, tuple((key, tuple(v.items())) for key, v in self._constants.items())))
        return self._hash

    def __repr__(self):
        return f"AlgebraTable(dim={self.dim}, pairs={len(self._constants)})"

    def describe(self) -> str:
        """Human-readable bracket list, e.g. ``[e1,e1] = e2``."""
        lines = []
        for (i, j), row in self._constants.items():
            lines.append(f"[e{i},e{j}] = {format_combination(row)}")
        return "\n".join(lines) if lines else "(abelian)"


_EMPTY: dict = {}


def _check_index(idx, dim: int) -> None:
    if not isinstance(idx, int) or isinstance(idx, bool) or not 1 <= idx <= dim:
        raise IndexError(f"basis index {idx!r} outside 1..{dim}")


def format_combination(coeffs: Mapping[int, Fraction]) -> str:
    if not coeffs:
        return "0"
    parts = []
    for k, c in sorted(coeffs.items()):
        mag = abs(c)
        term = f"e{k}" if mag == 1 else f"{format_rational(mag)}e{k}"
        parts.append(("-" if c < 0 else "+", term))
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, term in parts[1:]:
        text += f" {sign} {term}"
    return text


# --------------------------------------------------------------------------
# Brackets and multiplication operators
# --------------------------------------------------------------------------

def _check_dim(t: AlgebraTable, *vectors: Sequence) -> None:
    for v in vectors:
        if len(v) != t.dim:
            raise ValueError(f"vector of length {len(v)} does not live in a {t.dim}-dimensional algebra")


def bracket(t: AlgebraTable, x: Sequence, y: Sequence) -> Vector:
    """Bilinear extension of the table to arbitrary vectors."""
    _check_dim(t, x, y)
    out = [Fraction(0)] * t.dim
    for (i, j), row in t.pairs():
        a = x[i - 1]
        if not a:
            continue
        b = y[j - 1]
        if not b:
            continue
        s = a * b
        for k, c in row.items():
            out[k - 1] += s * c
    return tuple(out)


def right_mult_operator(t: AlgebraTable, x: Sequence) -> Matrix:
    """Matrix of R_x : y -> [y, x]; column j is [e_j, x]."""
    _check_dim(t, x)
    n = t.dim
    cols = [[Fraction(0)] * n for _ in range(n)]
    for (i, j), row in t.pairs():
        s = x[j - 1]
        if s:
            for k, c in row.items():
                cols[i - 1][k - 1] += s * c
    return Matrix.from_columns(cols) if n else Matrix.zeros(0)


def left_mult_operator(t: AlgebraTable, x: Sequence) -> Matrix:
    """Matrix of L_x : y -> [x, y]; column j is [x, e_j]."""
    _check_dim(t, x)
    n = t.dim
    cols = [[Fraction(0)] * n for _ in range(n)]
    for (i, j), row in t.pairs():
        s = x[i - 1]
        if s:
            for k, c in row.items():
                cols[j - 1][k - 1] += s * c
    return Matrix.from_columns(cols) if n else Matrix.zeros(0)


def right_op(t: AlgebraTable, i: int) -> Matrix:
    return right_mult_operator(t, basis_vector(t.dim, i))


def left_op(t: AlgebraTable, i: int) -> Matrix:
    return left_mult_operator(t, basis_vector(t.dim, i))


# --------------------------------------------------------------------------
# Subspaces
# --------------------------------------------------------------------------

class Subspace:
    """A subspace given by its canonical reduced row-echelon basis."""

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, vectors: Iterable[Sequence] = ()):
        rows = [tuple(as_rational(x) for x in v) for v in vectors]
        for r in rows:
            if len(r) != ambient_dim:
                raise ValueError("spanning vector has the wrong length")
        if rows:
            red = rref(Matrix(rows, ambient_dim))
            basis = Matrix((red.reduced.row(i) for i in range(red.rank)), ambient_dim)
        else:
            basis = Matrix.zeros(0, ambient_dim)
        self.ambient_dim = ambient_dim
        self.basis = basis

    @classmethod
    def whole(cls, n: int) -> "Subspace":
        return cls(n, (basis_vector(n, i) for i in range(1, n + 1)))

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, ())

    @classmethod
    def span_of_basis(cls, n: int, indices: Iterable[int]) -> "Subspace":
        return cls(n, (basis_vector(n, i) for i in indices))

    @property
    def dim(self) -> int:
        return self.basis.rows

    def vectors(self) -> list[Vector]:
        return [self.basis.row(i) for i in range(self.dim)]

    def is_zero(self) -> bool:
        return self.dim == 0

    def contains(self, v: Sequence) -> bool:
        if len(v) != self.ambient_dim:
            raise ValueError("vector has the wrong length")
        if is_zero_vector(v):
            return True
        return Subspace(self.ambient_dim, self.vectors() + [tuple(v)]).dim == self.dim

    def contains_subspace(self, other: "Subspace") -> bool:
        if other.ambient_dim != self.ambient_dim:
            raise ValueError("ambient dimensions differ")
        return Subspace(self.ambient_dim, self.vectors() + other.vectors()).dim == self.dim

    def __add__(self, other: "Subspace") -> "Subspace":
        if other.ambient_dim != self.ambient_dim:
            raise ValueError("ambient dimensions differ")
        return Subspace(self.ambient_dim, self.vectors() + other.vectors())

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim} in {self.ambient_dim})"

    def describe(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for v in self.vectors():
            parts.append(format_combination({k + 1: c for k, c in enumerate(v) if c}))
        return "span{" + ", ".join(parts) + "}"


def subspace_product(t: AlgebraTable, u: Subspace, v: Subspace) -> Subspace:
    """Span of all brackets [a, b] with a, b running over the two bases."""
    if u.ambient_dim != t.dim or v.ambient_dim != t.dim:
        raise ValueError("subspace does not live in this algebra")
    products = [bracket(t, a, b) for a in u.vectors() for b in v.vectors()]
    return Subspace(t.dim, (p for p in products if not is_zero_vector(p)))


# --------------------------------------------------------------------------
# File format
# --------------------------------------------------------------------------

class FormatError(ValueError):
    """Malformed algebra (or related) document."""


def table_to_dict(t: AlgebraTable) -> dict:
    brackets = []
    for (i, j), row in t.pairs():
        brackets.append({
            "left": i,
            "right": j,
            "out": {str(k): format_rational(c) for k, c in sorted(row.items())},
        })
    return {"dim": t.dim, "field": "Q", "brackets": brackets}


def serialize_table(t: AlgebraTable) -> str:
    """Canonical JSON text (brackets sorted by (left, right, k))."""
    return json.dumps(table_to_dict(t), indent=2) + "\n"


def _strict_int(value, what: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise FormatError(f"{what} must be an integer, got {value!r}")
    return value


def table_from_dict(doc) -> AlgebraTable:
    if not isinstance(doc, dict):
        raise FormatError("algebra document must be a JSON object")
    unknown = set(doc) - {"dim", "field", "brackets"}
    if unknown:
        raise FormatError(f"unknown keys {sorted(unknown)}")
    if "dim" not in doc:
        raise FormatError("missing 'dim'")
    dim = _strict_int(doc["dim"], "dim")
    if dim < 0:
        raise FormatError("dim must be non-negative")
    if doc.get("field", "Q") != "Q":
        raise FormatError(f"unsupported field {doc.get('field')!r}")
    entries = doc.get("brackets", [])
    if not isinstance(entries, list):
        raise FormatError("'brackets' must be a list")
    constants: dict[tuple[int, int], dict[int, Fraction]] = {}
    for entry in entries:
        if not isinstance(entry, dict) or set(entry) != {"left", "right", "out"}:
            raise FormatError(f"bracket entry must have exactly left/right/out: {entry!r}")
        i = _strict_int(entry["left"], "left")
        j = _strict_int(entry["right"], "right")
        for idx in (i, j):
            if not 1 <= idx <= dim:
                raise IndexError(f"basis index {idx} outside 1..{dim}")
        if (i, j) in constants:
            raise FormatError(f"duplicate bracket entry ({i},{j})")
        out = entry["out"]
        if not isinstance(out, dict):
            raise FormatError("'out' must be an object")
        row = {}
        for key, text in out.items():
            if not isinstance(key, str) or not key.isdigit() or key != str(int(key)):
                raise FormatError(f"output index {key!r} is not a canonical integer")
            k = int(key)
            if not 1 <= k <= dim:
                raise IndexError(f"basis index {k} outside 1..{dim}")
            try:
                row[k] = parse_rational(text)
            except ValueError as exc:
                raise FormatError(str(exc)) from None
        constants[(i, j)] = row
    return AlgebraTable(dim, constants)


def parse_table(text: str) -> AlgebraTable:
    """Parse the JSON algebra format; raises FormatError or IndexError."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    return table_from_dict(doc)


def load_table(path) -> AlgebraTable:
    with open(path, encoding="utf-8") as fh:
        return parse_table(fh.read())


def save_table(t: AlgebraTable, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_table(t))


def matrix_to_json(m: Matrix) -> list[list[str]]:
    return [[format_rational(x) for x in m.row(i)] for i in range(m.rows)]


def matrix_from_json(rows) -> Matrix:
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise FormatError("matrix must be a list of rows")
    try:
        return Matrix([[parse_rational(x) for x in r] for r in rows])
    except ValueError as exc:
        raise FormatError(str(exc)) from None
