"""Decision procedures for the defining identities and related structure.

Every check enumerates basis pairs or triples exhaustively; by
multilinearity that is equivalent to the identity on all vectors.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .algebra import (
    AlgebraTable,
    Subspace,
    Vector,
    basis_vector,
    bracket,
    left_op,
    right_op,
    vec_add,
)
from .ratmat import Matrix, commutator, nullspace


@dataclass
class IdentityReport:
    """Outcome of an identity check; ``failures`` holds (triple, defect)."""

    holds: bool
    failures: list = field(default_factory=list)
    identity: str = ""

    def __bool__(self) -> bool:
        return self.holds

    def summary(self, limit: int = 5) -> str:
        if self.holds:
            return f"{self.identity}: holds"
        shown = ", ".join(str(f[0]) for f in self.failures[:limit])
        more = "" if len(self.failures) <= limit else f" (+{len(self.failures) - limit} more)"
        return f"{self.identity}: fails at {shown}{more}"


# sparse helpers on {index: coeff} dicts -------------------------------------

def _acc(target: dict, row: Mapping[int, Fraction], scale) -> None:
    for k, c in row.items():
        v = target.get(k, 0) + scale * c
        if v:
            target[k] = v
        else:
            target.pop(k, None)


def _bracket_left(t: AlgebraTable, x: Mapping[int, Fraction], j: int) -> dict:
    """[x, e_j] for a sparse vector x."""
    out: dict = {}
    for m, c in x.items():
        row = t.basis_bracket(m, j)
        if row:
            _acc(out, row, c)
    return out


def _bracket_right(t: AlgebraTable, i: int, y: Mapping[int, Fraction]) -> dict:
    """[e_i, y] for a sparse vector y."""
    out: dict = {}
    for m, c in y.items():
        row = t.basis_bracket(i, m)
        if row:
            _acc(out, row, c)
    return out


def _dense(n: int, sparse: Mapping[int, Fraction]) -> Vector:
    out = [Fraction(0)] * n
    for k, c in sparse.items():
        out[k - 1] = c
    return tuple(out)


def _scan(t: AlgebraTable, defect, name: str, stop_at_first: bool = False) -> IdentityReport:
    n = t.dim
    failures = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                d = defect(i, j, k)
                if d:
                    failures.append(((i, j, k), _dense(n, d)))
                    if stop_at_first:
                        return IdentityReport(False, failures, name)
    return IdentityReport(not failures, failures, name)


def right_leibniz_defect(t: AlgebraTable, i: int, j: int, k: int) -> dict:
    """[[e_i,e_j],e_k] - [[e_i,e_k],e_j] - [e_i,[e_j,e_k]] as a sparse dict."""
    d = _bracket_left(t, t.basis_bracket(i, j), k)
    _acc(d, _bracket_left(t, t.basis_bracket(i, k), j), -1)
    _acc(d, _bracket_right(t, i, t.basis_bracket(j, k)), -1)
    return d


def left_leibniz_defect(t: AlgebraTable, i: int, j: int, k: int) -> dict:
    """[[e_i,e_j],e_k] - [e_i,[e_j,e_k]] + [e_j,[e_i,e_k]] as a sparse dict."""
    d = _bracket_left(t, t.basis_bracket(i, j), k)
    _acc(d, _bracket_right(t, i, t.basis_bracket(j, k)), -1)
    _acc(d, _bracket_right(t, j, t.basis_bracket(i, k)), 1)
    return d


def check_right_leibniz(t: AlgebraTable, stop_at_first: bool = False) -> IdentityReport:
    return _scan(t, lambda i, j, k: right_leibniz_defect(t, i, j, k), "right Leibniz", stop_at_first)


def check_left_leibniz(t: AlgebraTable, stop_at_first: bool = False) -> IdentityReport:
    return _scan(t, lambda i, j, k: left_leibniz_defect(t, i, j, k), "left Leibniz", stop_at_first)


def check_associativity(t: AlgebraTable, stop_at_first: bool = False) -> IdentityReport:
    def defect(i, j, k):
        d = _bracket_left(t, t.basis_bracket(i, j), k)
        _acc(d, _bracket_right(t, i, t.basis_bracket(j, k)), -1)
        return d
    return _scan(t, defect, "associativity", stop_at_first)


def check_jacobi(t: AlgebraTable, stop_at_first: bool = False) -> IdentityReport:
    def defect(i, j, k):
        d = _bracket_left(t, t.basis_bracket(i, j), k)
        _acc(d, _bracket_left(t, t.basis_bracket(j, k), i), 1)
        _acc(d, _bracket_left(t, t.basis_bracket(k, i), j), 1)
        return d
    return _scan(t, defect, "Jacobi", stop_at_first)


def is_anticommutative(t: AlgebraTable) -> bool:
    """[x,x] = 0 for all x: diagonal brackets vanish and [e_i,e_j] = -[e_j,e_i]."""
    for i in range(1, t.dim + 1):
        if t.basis_bracket(i, i):
            return False
        for j in range(i + 1, t.dim + 1):
            s = dict(t.basis_bracket(i, j))
            _acc(s, t.basis_bracket(j, i), 1)
            if s:
                return False
    return True


def is_lie(t: AlgebraTable) -> bool:
    return is_anticommutative(t) and check_jacobi(t, stop_at_first=True).holds


def is_associative(t: AlgebraTable) -> bool:
    return check_associativity(t, stop_at_first=True).holds


def center(t: AlgebraTable) -> Subspace:
    """C(L) = {x : [x, y] = [y, x] = 0 for all y}."""
    n = t.dim
    rows = []
    for j in range(1, n + 1):
        # x is central iff R_{e_j} x = 0 and L_{e_j} x = 0 for every j
        for m in (right_op(t, j), left_op(t, j)):
            rows.extend(m.row(r) for r in range(n))
    if not rows:
        return Subspace.whole(n)
    kernel = nullspace(Matrix(rows, n))
    return Subspace(n, [kernel.row(r) for r in range(kernel.rows)])


def is_derivation(t: AlgebraTable, d: Matrix) -> bool:
    """d([x,y]) = [d x, y] + [x, d y] on all basis pairs."""
    n = t.dim
    if d.shape != (n, n):
        raise ValueError(f"derivation must be {n}x{n}, got {d.rows}x{d.cols}")
    images = [{r + 1: d[r, c] for r in range(n) if d[r, c]} for c in range(n)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            lhs: dict = {}
            for k, c in t.basis_bracket(i, j).items():
                _acc(lhs, images[k - 1], c)
            _acc(lhs, _bracket_left(t, images[i - 1], j), -1)
            _acc(lhs, _bracket_right(t, i, images[j - 1]), -1)
            if lhs:
                return False
    return True


@dataclass
class HomomorphismReport:
    """Outcome of the operator commutator check for one side."""

    side: str
    relation: str
    holds: bool
    failures: list = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.holds


def check_mult_homomorphisms(t: AlgebraTable, side: str) -> HomomorphismReport:
    """Right: [R_x, R_y] = R_[y,x].  Left: [L_x, L_y] = L_[x,y]."""
    n = t.dim
    if side == "right":
        ops = [right_op(t, i) for i in range(1, n + 1)]
        relation = "[R_x,R_y] = R_[y,x]"
    elif side == "left":
        ops = [left_op(t, i) for i in range(1, n + 1)]
        relation = "[L_x,L_y] = L_[x,y]"
    else:
        raise ValueError(f"side must be 'right' or 'left', got {side!r}")
    failures = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if side == "right":
                target_vec = t.basis_bracket(j, i)
            else:
                target_vec = t.basis_bracket(i, j)
            target = Matrix.zeros(n)
            for k, c in target_vec.items():
                target = target + ops[k - 1] * c
            if commutator(ops[i - 1], ops[j - 1]) != target:
                failures.append((i, j))
    return HomomorphismReport(side, relation, not failures, failures)


# --------------------------------------------------------------------------
# Squares ideal and the Lie quotient
# --------------------------------------------------------------------------

def squares_ideal(t: AlgebraTable) -> Subspace:
    """Two-sided ideal generated by the squares [x, x].

    The squares span is generated by [e_i,e_i] and the polarized squares
    [e_i+e_j, e_i+e_j]; the ideal is then closed under bracketing with L on
    both sides until it stabilizes.
    """
    n = t.dim
    gens = []
    for i in range(1, n + 1):
        ei = basis_vector(n, i)
        gens.append(bracket(t, ei, ei))
        for j in range(i + 1, n + 1):
            x = vec_add(ei, basis_vector(n, j))
            gens.append(bracket(t, x, x))
    ideal = Subspace(n, gens)
    while True:
        grown = list(ideal.vectors())
        for v in ideal.vectors():
            for j in range(1, n + 1):
                ej = basis_vector(n, j)
                grown.append(bracket(t, v, ej))
                grown.append(bracket(t, ej, v))
        bigger = Subspace(n, grown)
        if bigger.dim == ideal.dim:
            return ideal
        ideal = bigger


def quotient_table(t: AlgebraTable, ideal: Subspace) -> AlgebraTable:
    """Induced table on L/I, using the non-pivot basis vectors as a complement."""
    n = t.dim
    reduced = [ideal.basis.row(r) for r in range(ideal.dim)]
    pivots = [next(c for c, x in enumerate(row) if x) for row in reduced]
    free = [c for c in range(n) if c not in pivots]
    position = {c: q + 1 for q, c in enumerate(free)}

    def reduce(v):
        v = list(v)
        for row, p in zip(reduced, pivots):
            f = v[p]
            if f:
                v = [a - f * b for a, b in zip(v, row)]
        return v

    constants = {}
    for qa, ca in enumerate(free, start=1):
        for qb, cb in enumerate(free, start=1):
            image = reduce(t.bracket_vector(ca + 1, cb + 1))
            out = {position[c]: image[c] for c in free if image[c]}
            if out:
                constants[(qa, qb)] = out
    return AlgebraTable(len(free), constants)


def quotient_is_lie(t: AlgebraTable) -> bool:
    return is_lie(quotient_table(t, squares_ideal(t)))
