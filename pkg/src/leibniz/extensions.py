"""Solvable extensions of a nilradical: assembly, condition systems,
nilradical evidence and basis changes.

Index conventions follow the structure equations of an extension with
nilradical N = span(e_1..e_n) and complement span(e_{n+1}..e_p):

    [e_i, e_j] = C_ij^k e_k     [e_a, e_i] = A_ai^k e_k
    [e_i, e_a] = A_ia^k e_k     [e_a, e_b] = B_ab^k e_k

with i, j, k, m in 1..n and a, b in n+1..p.  Generator a carries two n x n
matrices: ``right_op`` (column i is [e_i, e_a], i.e. R_{e_a} on N) and
``left_op`` (column i is [e_a, e_i], i.e. L_{e_a} on N).
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional

from .algebra import (
    AlgebraTable,
    FormatError,
    Subspace,
    basis_vector,
    bracket,
    format_combination,
    matrix_from_json,
    matrix_to_json,
    right_op,
    left_op,
    subspace_product,
    table_from_dict,
    table_to_dict,
)
from .derivations import NilKind, pair_nil_independent, restrict_operator
from .identity import (
    IdentityReport,
    check_left_leibniz,
    check_right_leibniz,
    is_derivation,
    left_leibniz_defect,
    right_leibniz_defect,
)
from .ratmat import Matrix, as_rational, det, format_rational, inverse, is_nilpotent_matrix, parse_rational
from .series import is_nilpotent


# --------------------------------------------------------------------------
# Extension data
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class ExtensionData:
    nilradical: AlgebraTable
    right_ops: tuple  # Matrix per generator, column i = [e_i, e_a]
    left_ops: tuple   # Matrix per generator, column i = [e_a, e_i]
    top_brackets: Mapping = field(default_factory=dict)  # (a, b) -> {k: coeff}, k <= n

    def __post_init__(self):
        n = self.nilradical.dim
        if len(self.right_ops) != len(self.left_ops):
            raise ValueError("right and left operator lists differ in length")
        if len(self.right_ops) not in (1, 2):
            raise ValueError("an extension adjoins one or two generators")
        for m in tuple(self.right_ops) + tuple(self.left_ops):
            if m.shape != (n, n):
                raise ValueError(f"generator operator must be {n}x{n}")
        p = self.dim
        clean = {}
        for (a, b), out in self.top_brackets.items():
            if not (n < a <= p and n < b <= p):
                raise ValueError(f"top bracket ({a},{b}) is not between adjoined generators")
            row = {}
            for k, c in out.items():
                if not 1 <= k <= n:
                    raise ValueError(f"top bracket [e{a},e{b}] must lie in the nilradical")
                c = as_rational(c)
                if c:
                    row[k] = c
            if row:
                clean[(a, b)] = row
        object.__setattr__(self, "top_brackets", dict(sorted(clean.items())))

    @property
    def n(self) -> int:
        return self.nilradical.dim

    @property
    def codim(self) -> int:
        return len(self.right_ops)

    @property
    def dim(self) -> int:
        return self.n + self.codim

    @property
    def generators(self) -> range:
        return range(self.n + 1, self.dim + 1)

    def outer_ops(self, side: str = "right") -> tuple:
        """The matrices A_a: R_{e_a}|_N for the right side, L_{e_a}|_N for the left."""
        if side == "right":
            return self.right_ops
        if side == "left":
            return self.left_ops
        raise ValueError(f"side must be 'right' or 'left', got {side!r}")

    def cross_brackets(self) -> dict:
        """Map (a, i) -> [e_a, e_i] and (i, a) -> [e_i, e_a] as sparse dicts."""
        out = {}
        for a, (r, l) in zip(self.generators, zip(self.right_ops, self.left_ops)):
            for i in range(1, self.n + 1):
                out[(a, i)] = _column(l, i)
                out[(i, a)] = _column(r, i)
        return out

    @classmethod
    def from_table(cls, t: AlgebraTable, n: int) -> "ExtensionData":
        """Split a p-dimensional table whose first n basis vectors span the nilradical."""
        if not 0 < n < t.dim:
            raise ValueError("nilradical dimension must satisfy 0 < n < dim")
        nil = t.restrict(n)
        rights, lefts = [], []
        for a in range(n + 1, t.dim + 1):
            r, l = right_op(t, a), left_op(t, a)
            for m, what in ((r, "R"), (l, "L")):
                if any(m[row, col] for row in range(n, t.dim) for col in range(n)):
                    raise ValueError(f"{what}_(e{a}) does not preserve span(e1..e{n})")
            rights.append(restrict_operator(r, n))
            lefts.append(restrict_operator(l, n))
        top = {}
        for a in range(n + 1, t.dim + 1):
            for b in range(n + 1, t.dim + 1):
                row = t.basis_bracket(a, b)
                if row:
                    top[(a, b)] = dict(row)
        return cls(nil, tuple(rights), tuple(lefts), top)

    def to_dict(self) -> dict:
        gens = [{"right_op": matrix_to_json(r), "left_op": matrix_to_json(l)}
                for r, l in zip(self.right_ops, self.left_ops)]
        top = [{"left": a, "right": b, "out": {str(k): format_rational(c) for k, c in row.items()}}
               for (a, b), row in self.top_brackets.items()]
        return {"nilradical": table_to_dict(self.nilradical), "generators": gens, "top_brackets": top}

    @classmethod
    def from_dict(cls, doc) -> "ExtensionData":
        if not isinstance(doc, dict) or "nilradical" not in doc or "generators" not in doc:
            raise FormatError("extension document needs 'nilradical' and 'generators'")
        nil = table_from_dict(doc["nilradical"])
        rights, lefts = [], []
        for g in doc["generators"]:
            rights.append(matrix_from_json(g["right_op"]))
            lefts.append(matrix_from_json(g["left_op"]))
        top = {}
        for entry in doc.get("top_brackets", []):
            key = (entry["left"], entry["right"])
            if key in top:
                raise FormatError(f"duplicate top bracket {key}")
            top[key] = {int(k): parse_rational(v) for k, v in entry["out"].items()}
        return cls(nil, tuple(rights), tuple(lefts), top)


def _column(m: Matrix, i: int) -> dict:
    return {r + 1: m[r, i - 1] for r in range(m.rows) if m[r, i - 1]}


def assemble(ext: ExtensionData) -> AlgebraTable:
    """The p-dimensional table realizing the extension data."""
    constants = dict(ext.nilradical.constants)
    for key, row in ext.cross_brackets().items():
        if row:
            constants[key] = row
    for key, row in ext.top_brackets.items():
        constants[key] = row
    return AlgebraTable(ext.dim, constants)


# --------------------------------------------------------------------------
# Literal condition systems
# --------------------------------------------------------------------------

class _Coefficients:
    """Sparse accessors C(i,j), Aai(a,i), Aia(i,a), B(a,b) over an extension."""

    def __init__(self, ext: ExtensionData):
        self.n = ext.n
        self.nil = ext.nilradical
        self.gens = list(ext.generators)
        self._aai = {}
        self._aia = {}
        for a, r, l in zip(ext.generators, ext.right_ops, ext.left_ops):
            for i in range(1, self.n + 1):
                self._aai[(a, i)] = _column(l, i)
                self._aia[(i, a)] = _column(r, i)
        self._b = ext.top_brackets

    def C(self, i, j):
        return self.nil.basis_bracket(i, j)

    def Aai(self, a, i):
        return self._aai[(a, i)]

    def Aia(self, i, a):
        return self._aia[(i, a)]

    def B(self, a, b):
        return self._b.get((a, b), {})


def _contract(x: Mapping[int, Fraction], f) -> dict:
    """sum_k x^k f(k)^m as a sparse dict over m."""
    out: dict = {}
    for k, c in x.items():
        for m, v in f(k).items():
            s = out.get(m, 0) + c * v
            if s:
                out[m] = s
            else:
                out.pop(m, None)
    return out


def _combine(*terms) -> dict:
    """Signed sum of sparse dicts given as (sign, dict) pairs."""
    out: dict = {}
    for sign, d in terms:
        for m, v in d.items():
            s = out.get(m, 0) + sign * v
            if s:
                out[m] = s
            else:
                out.pop(m, None)
    return out


def _run(label_defects: Iterable, n: int, name: str) -> IdentityReport:
    failures = []
    for label, idx, d in label_defects:
        if d:
            dense = tuple(d.get(m, Fraction(0)) for m in range(1, n + 1))
            failures.append(((label,) + idx, dense))
    return IdentityReport(not failures, failures, name)


def check_right_conditions(ext: ExtensionData) -> IdentityReport:
    """Right Leibniz identity as index equations on C, A and B.

    The six displayed families cover every triple with one or two adjoined
    generators; the triple (a, b, c) of three generators and the
    nilradical's own triples complete the system.
    """
    X = _Coefficients(ext)
    N = range(1, X.n + 1)
    G = X.gens
    C, Aai, Aia, B = X.C, X.Aai, X.Aia, X.B

    def defects():
        for a in G:
            for i in N:
                for j in N:
                    # A_ai^k C_kj^m = A_aj^k C_ki^m + C_ij^k A_ak^m
                    yield "R1", (a, i, j), _combine(
                        (1, _contract(Aai(a, i), lambda k: C(k, j))),
                        (-1, _contract(Aai(a, j), lambda k: C(k, i))),
                        (-1, _contract(C(i, j), lambda k: Aai(a, k))))
                    # A_ia^k C_kj^m = C_ij^k A_ka^m + A_aj^k C_ik^m
                    yield "R2", (i, a, j), _combine(
                        (1, _contract(Aia(i, a), lambda k: C(k, j))),
                        (-1, _contract(C(i, j), lambda k: Aia(k, a))),
                        (-1, _contract(Aai(a, j), lambda k: C(i, k))))
                    # C_ij^k A_ka^m = A_ia^k C_kj^m + A_ja^k C_ik^m
                    yield "R3", (i, j, a), _combine(
                        (1, _contract(C(i, j), lambda k: Aia(k, a))),
                        (-1, _contract(Aia(i, a), lambda k: C(k, j))),
                        (-1, _contract(Aia(j, a), lambda k: C(i, k))))
        for a in G:
            for b in G:
                for i in N:
                    # B_ab^k C_ki^m = A_ai^k A_kb^m + A_bi^k A_ak^m
                    yield "RR1", (a, b, i), _combine(
                        (1, _contract(B(a, b), lambda k: C(k, i))),
                        (-1, _contract(Aai(a, i), lambda k: Aia(k, b))),
                        (-1, _contract(Aai(b, i), lambda k: Aai(a, k))))
                    # A_ai^k A_kb^m = B_ab^k C_ki^m + A_ib^k A_ak^m
                    yield "RR2", (a, i, b), _combine(
                        (1, _contract(Aai(a, i), lambda k: Aia(k, b))),
                        (-1, _contract(B(a, b), lambda k: C(k, i))),
                        (-1, _contract(Aia(i, b), lambda k: Aai(a, k))))
                    # B_ab^k C_ik^m = A_kb^m A_ia^k - A_ka^m A_ib^k
                    yield "RR3", (i, a, b), _combine(
                        (1, _contract(B(a, b), lambda k: C(i, k))),
                        (-1, _contract(Aia(i, a), lambda k: Aia(k, b))),
                        (1, _contract(Aia(i, b), lambda k: Aia(k, a))))
                for c in G:
                    # [[a,b],c] = [[a,c],b] + [a,[b,c]]
                    yield "RRR", (a, b, c), _combine(
                        (1, _contract(B(a, b), lambda k: Aia(k, c))),
                        (-1, _contract(B(a, c), lambda k: Aia(k, b))),
                        (-1, _contract(B(b, c), lambda k: Aai(a, k))))
        for i in N:
            for j in N:
                for k in N:
                    yield "N", (i, j, k), right_leibniz_defect(X.nil, i, j, k)

    return _run(defects(), X.n, "right conditions")


def check_left_conditions(ext: ExtensionData) -> IdentityReport:
    """Left Leibniz identity as index equations on C, A and B."""
    X = _Coefficients(ext)
    N = range(1, X.n + 1)
    G = X.gens
    C, Aai, Aia, B = X.C, X.Aai, X.Aia, X.B

    def defects():
        for a in G:
            for i in N:
                for j in N:
                    # A_ai^k C_jk^m = A_ja^k C_ki^m + C_ji^k A_ak^m
                    yield "L1", (j, a, i), _combine(
                        (1, _contract(Aai(a, i), lambda k: C(j, k))),
                        (-1, _contract(Aia(j, a), lambda k: C(k, i))),
                        (-1, _contract(C(j, i), lambda k: Aai(a, k))))
                    # A_ia^k C_jk^m = C_ji^k A_ka^m + A_ja^k C_ik^m
                    yield "L2", (j, i, a), _combine(
                        (1, _contract(Aia(i, a), lambda k: C(j, k))),
                        (-1, _contract(C(j, i), lambda k: Aia(k, a))),
                        (-1, _contract(Aia(j, a), lambda k: C(i, k))))
                    # C_ij^k A_ak^m = A_ai^k C_kj^m + A_aj^k C_ik^m
                    yield "L3", (a, i, j), _combine(
                        (1, _contract(C(i, j), lambda k: Aai(a, k))),
                        (-1, _contract(Aai(a, i), lambda k: C(k, j))),
                        (-1, _contract(Aai(a, j), lambda k: C(i, k))))
        for a in G:
            for b in G:
                for i in N:
                    # B_ab^k C_ik^m = A_ia^k A_kb^m + A_ib^k A_ak^m
                    yield "LL1", (i, a, b), _combine(
                        (1, _contract(B(a, b), lambda k: C(i, k))),
                        (-1, _contract(Aia(i, a), lambda k: Aia(k, b))),
                        (-1, _contract(Aia(i, b), lambda k: Aai(a, k))))
                    # A_ib^k A_ak^m = B_ab^k C_ik^m + A_ai^k A_kb^m
                    yield "LL2", (a, i, b), _combine(
                        (1, _contract(Aia(i, b), lambda k: Aai(a, k))),
                        (-1, _contract(B(a, b), lambda k: C(i, k))),
                        (-1, _contract(Aai(a, i), lambda k: Aia(k, b))))
                    # B_ab^k C_ki^m = A_ak^m A_bi^k - A_bk^m A_ai^k
                    yield "LL3", (a, b, i), _combine(
                        (1, _contract(B(a, b), lambda k: C(k, i))),
                        (-1, _contract(Aai(b, i), lambda k: Aai(a, k))),
                        (1, _contract(Aai(a, i), lambda k: Aai(b, k))))
                for c in G:
                    # [a,[b,c]] = [[a,b],c] + [b,[a,c]]
                    yield "LLL", (a, b, c), _combine(
                        (1, _contract(B(b, c), lambda k: Aai(a, k))),
                        (-1, _contract(B(a, b), lambda k: Aia(k, c))),
                        (-1, _contract(B(a, c), lambda k: Aai(b, k))))
        for i in N:
            for j in N:
                for k in N:
                    yield "N", (i, j, k), left_leibniz_defect(X.nil, i, j, k)

    return _run(defects(), X.n, "left conditions")


def perturb(ext: ExtensionData, rng: random.Random) -> ExtensionData:
    """Change one extension coefficient (operator entry or top bracket) by a nonzero rational."""
    n, q = ext.n, ext.codim
    delta = Fraction(rng.choice([1, -1, 2, -3])) / rng.choice([1, 2, 3])
    slots = 2 * q * n * n + q * q * n
    pick = rng.randrange(slots)
    rights, lefts = list(ext.right_ops), list(ext.left_ops)
    top = {key: dict(row) for key, row in ext.top_brackets.items()}
    if pick < 2 * q * n * n:
        which, rest = divmod(pick, q * n * n)
        g, cell = divmod(rest, n * n)
        r, c = divmod(cell, n)
        target = rights if which == 0 else lefts
        rows = target[g].tolist()
        rows[r][c] += delta
        target[g] = Matrix(rows, n)
    else:
        rest = pick - 2 * q * n * n
        pair, k = divmod(rest, n)
        a = n + 1 + pair // q
        b = n + 1 + pair % q
        row = top.setdefault((a, b), {})
        row[k + 1] = row.get(k + 1, Fraction(0)) + delta
    return ExtensionData(ext.nilradical, tuple(rights), tuple(lefts), top)


# --------------------------------------------------------------------------
# Nilradical evidence
# --------------------------------------------------------------------------

@dataclass
class EvidenceItem:
    number: int
    claim: str
    passed: Optional[bool]  # None when the item does not apply
    detail: str = ""


@dataclass
class NilradicalReport:
    n: int
    dim: int
    side: str
    items: list

    @property
    def passed(self) -> bool:
        return all(item.passed is not False for item in self.items)

    def item(self, number: int) -> EvidenceItem:
        return next(it for it in self.items if it.number == number)

    def __bool__(self) -> bool:
        return self.passed


def _ideal_check(t: AlgebraTable, n: int) -> tuple[bool, str]:
    for (i, j), row in t.pairs():
        if (i <= n or j <= n) and any(k > n for k in row):
            return False, f"[e{i},e{j}] = {format_combination(row)} leaves span(e1..e{n})"
    return True, ""


def verify_nilradical(t: AlgebraTable, n: int, side: Optional[str] = None) -> NilradicalReport:
    """Evidence that span(e_1..e_n) is the nilradical of t.

    Items: (1) two-sided ideal; (2) nilpotent; (3) [L,L] inside it;
    (4) n >= dim/2; (5) every adjoined generator acts on it by a
    non-nilpotent derivation; (6) with two generators, the pair is
    nil-independent.
    """
    p = t.dim
    if not 0 < n < p:
        raise ValueError("need 0 < n < dim")
    if side is None:
        if check_right_leibniz(t, stop_at_first=True).holds:
            side = "right"
        elif check_left_leibniz(t, stop_at_first=True).holds:
            side = "left"
        else:
            side = "right"
    items = []
    ideal_ok, why = _ideal_check(t, n)
    items.append(EvidenceItem(1, "span(e1..en) is a two-sided ideal", ideal_ok, why))
    restricted = t.restrict(n) if ideal_ok else None
    if restricted is not None:
        nil_ok, idx = is_nilpotent(restricted)
        items.append(EvidenceItem(2, "the ideal is nilpotent", nil_ok, f"index {idx}" if nil_ok else "LS stabilizes"))
    else:
        items.append(EvidenceItem(2, "the ideal is nilpotent", False, "not an ideal"))
    whole = Subspace.whole(p)
    square = subspace_product(t, whole, whole)
    ideal_space = Subspace.span_of_basis(p, range(1, n + 1))
    items.append(EvidenceItem(3, "[L,L] lies in the ideal", ideal_space.contains_subspace(square),
                              f"dim [L,L] = {square.dim}"))
    items.append(EvidenceItem(4, "n >= dim/2", 2 * n >= p, f"n={n}, dim={p}"))

    op = right_op if side == "right" else left_op
    ops = [restrict_operator(op(t, a), n) for a in range(n + 1, p + 1)]
    details, ok5 = [], True
    for a, d in zip(range(n + 1, p + 1), ops):
        is_der = restricted is not None and is_derivation(restricted, d)
        nilp = is_nilpotent_matrix(d)
        if not is_der or nilp:
            ok5 = False
        details.append(f"e{a}: derivation={is_der}, nilpotent={nilp}")
    items.append(EvidenceItem(5, "generator operators are non-nilpotent derivations", ok5, "; ".join(details)))
    if len(ops) == 2:
        verdict = pair_nil_independent(ops[0], ops[1])
        items.append(EvidenceItem(6, "generator operators are nil-independent",
                                  verdict.kind is NilKind.NONE_NILPOTENT, verdict.kind.value))
    else:
        items.append(EvidenceItem(6, "generator operators are nil-independent", None,
                                  "applies to two generators only"))
    return NilradicalReport(n, p, side, items)


# --------------------------------------------------------------------------
# Basis changes
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class BasisChange:
    """Row a of ``matrix`` holds the old-basis coordinates of the new e'_a."""

    matrix: Matrix

    def __post_init__(self):
        if not self.matrix.is_square:
            raise ValueError("basis change must be square")
        if det(self.matrix) == 0:
            raise ValueError("basis change matrix is singular")

    @property
    def dim(self) -> int:
        return self.matrix.rows

    @classmethod
    def identity(cls, n: int) -> "BasisChange":
        return cls(Matrix.identity(n))

    @classmethod
    def substitution(cls, n: int, rules: Mapping[int, Mapping[int, object]]) -> "BasisChange":
        """e'_a = sum_b rules[a][b] e_b for the listed a; other e'_a = e_a."""
        rows = [list(basis_vector(n, a)) for a in range(1, n + 1)]
        for a, combo in rules.items():
            rows[a - 1] = [Fraction(0)] * n
            for b, c in combo.items():
                rows[a - 1][b - 1] = as_rational(c)
        return cls(Matrix(rows, n))

    def coordinate_map(self) -> Matrix:
        """S with new coordinates = S @ old coordinates (S = M^{-T})."""
        return inverse(self.matrix).transpose()

    def compose(self, then: "BasisChange") -> "BasisChange":
        """The single change equivalent to applying self, then ``then``."""
        return BasisChange(then.matrix @ self.matrix)

    def to_dict(self) -> dict:
        return {"matrix": matrix_to_json(self.matrix)}

    @classmethod
    def from_dict(cls, doc) -> "BasisChange":
        if not isinstance(doc, dict) or "matrix" not in doc:
            raise FormatError("basis change document needs 'matrix'")
        return cls(matrix_from_json(doc["matrix"]))


def load_basis_change(path) -> BasisChange:
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON: {exc}") from None
    return BasisChange.from_dict(doc)


def apply_basis_change(t: AlgebraTable, P: BasisChange) -> AlgebraTable:
    """Structure constants of t in the basis e'_a = sum_b M[a,b] e_b."""
    n = t.dim
    if P.dim != n:
        raise ValueError(f"basis change of size {P.dim} does not fit a {n}-dimensional algebra")
    M = P.matrix
    S = P.coordinate_map()
    rows = [M.row(a) for a in range(n)]
    constants = {}
    for a in range(n):
        for b in range(n):
            old = bracket(t, rows[a], rows[b])
            if any(old):
                new = S @ old
                out = {k + 1: c for k, c in enumerate(new) if c}
                if out:
                    constants[(a + 1, b + 1)] = out
    return AlgebraTable(n, constants)


def table_diff(a: AlgebraTable, b: AlgebraTable) -> list[str]:
    """Human-readable list of brackets on which two tables differ."""
    if a.dim != b.dim:
        return [f"dimensions differ: {a.dim} vs {b.dim}"]
    keys = sorted(set(dict(a.pairs())) | set(dict(b.pairs())))
    out = []
    for i, j in keys:
        x, y = a.basis_bracket(i, j), b.basis_bracket(i, j)
        if x != y:
            out.append(f"[e{i},e{j}]: got {format_combination(x)}, expected {format_combination(y)}")
    return out


def verify_transformation(source: AlgebraTable, P: BasisChange, target: AlgebraTable) -> bool:
    if source.dim != target.dim or P.dim != source.dim:
        raise ValueError("source, target and basis change must have equal dimension")
    return apply_basis_change(source, P) == target
