"""Derivation spaces, inner derivations and nil-independence certificates.

Nilpotency of a combination is certified through traces of powers: over a
field of characteristic zero an n x n matrix M is nilpotent iff
tr(M^k) = 0 for k = 1..n.  With symbolic coefficients the traces become
polynomials, and common roots of those polynomials are exactly the
nilpotent combinations.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence

from .algebra import AlgebraTable, Subspace, left_op, right_op
from .identity import is_derivation
from .ratmat import Matrix, UniPoly, is_nilpotent_matrix, nullspace_sparse, poly_gcd


@dataclass(frozen=True)
class DerivationBasis:
    algebra_dim: int
    basis: tuple  # of Matrix

    @property
    def dim(self) -> int:
        return len(self.basis)

    def span(self) -> Subspace:
        n2 = self.algebra_dim ** 2
        return Subspace(n2, (m.flatten() for m in self.basis))

    def contains(self, m: Matrix) -> bool:
        return self.span().contains(m.flatten())


def derivation_system(t: AlgebraTable) -> list[dict[int, Fraction]]:
    """Sparse rows of d([e_i,e_j]) - [d e_i, e_j] - [e_i, d e_j] = 0.

    The unknown d is flattened row-major: entry (r, c) is variable r*n + c,
    and column c of d is the image of e_{c+1}.
    """
    n = t.dim
    rows = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            eqs: dict[int, dict[int, Fraction]] = {}

            def add(m, var, coeff):
                row = eqs.setdefault(m, {})
                v = row.get(var, 0) + coeff
                if v:
                    row[var] = v
                else:
                    row.pop(var, None)

            # d([e_i, e_j]) component m: sum_k C_ij^k d[m][k]
            for k, c in t.basis_bracket(i, j).items():
                for m in range(n):
                    add(m, m * n + (k - 1), c)
            # -[d e_i, e_j]: d e_i = sum_r d[r][i] e_r
            for r in range(1, n + 1):
                for m, c in t.basis_bracket(r, j).items():
                    add(m - 1, (r - 1) * n + (i - 1), -c)
            # -[e_i, d e_j]
            for r in range(1, n + 1):
                for m, c in t.basis_bracket(i, r).items():
                    add(m - 1, (r - 1) * n + (j - 1), -c)
            rows.extend(row for row in eqs.values() if row)
    return rows


def derivation_space(t: AlgebraTable) -> DerivationBasis:
    n = t.dim
    kernel = nullspace_sparse(derivation_system(t), n * n)
    return DerivationBasis(n, tuple(Matrix.from_flat(v, n, n) for v in kernel))


def inner_derivations(t: AlgebraTable, side: str) -> Subspace:
    """Span of the flattened R_{e_i} (right) or L_{e_i} (left)."""
    if side not in ("right", "left"):
        raise ValueError(f"side must be 'right' or 'left', got {side!r}")
    op = right_op if side == "right" else left_op
    n = t.dim
    return Subspace(n * n, (op(t, i).flatten() for i in range(1, n + 1)))


def restrict_operator(m: Matrix, n: int) -> Matrix:
    """Top-left n x n block: the action on span(e_1..e_n) when it is invariant."""
    return Matrix((m.row(r)[:n] for r in range(n)), n)


# --------------------------------------------------------------------------
# Trace-power certificates
# --------------------------------------------------------------------------

def trace_power_polys(d1: Matrix, d2: Matrix) -> list[UniPoly]:
    """p_k(t) = tr((t*d1 + d2)^k) for k = 1..n."""
    if d1.shape != d2.shape or not d1.is_square:
        raise ValueError(f"need two square matrices of equal size, got {d1.shape} and {d2.shape}")
    n = d1.rows
    # coeffs[j] is the t^j coefficient of (t*d1 + d2)^k
    coeffs = [Matrix.identity(n)]
    polys = []
    for _ in range(n):
        nxt = []
        for j in range(len(coeffs) + 1):
            acc = None
            if j >= 1:
                acc = coeffs[j - 1] @ d1
            if j < len(coeffs):
                term = coeffs[j] @ d2
                acc = term if acc is None else acc + term
            nxt.append(acc)
        coeffs = nxt
        polys.append(UniPoly(c.trace() for c in coeffs))
    return polys


class NilKind(str, Enum):
    ALL_NILPOTENT = "AllCombinationsNilpotent"
    SOME_NILPOTENT = "SomeCombinationNilpotent"
    NONE_NILPOTENT = "NoNontrivialNilpotentCombination"
    UNDECIDED = "Undecided"


@dataclass(frozen=True)
class NilDependenceVerdict:
    kind: NilKind
    witness: Optional[tuple] = None  # coefficients (alpha_1, alpha_2)
    evidence: str = ""

    @property
    def nil_independent(self) -> bool:
        return self.kind is NilKind.NONE_NILPOTENT


def _combine(coeffs: Sequence, mats: Sequence[Matrix]) -> Matrix:
    acc = Matrix.zeros(mats[0].rows)
    for c, m in zip(coeffs, mats):
        if c:
            acc = acc + m * c
    return acc


def pair_nil_independent(d1: Matrix, d2: Matrix) -> NilDependenceVerdict:
    """Decide whether some nontrivial alpha*d1 + beta*d2 is nilpotent.

    Chart beta != 0: scale to t*d1 + d2, nilpotent iff t is a common root of
    the trace polynomials, i.e. a root of their gcd.  A gcd of positive
    degree always has a complex root even when it has no rational one.
    Chart beta = 0: d1 alone.
    """
    polys = trace_power_polys(d1, d2)
    nonzero = [p for p in polys if not p.is_zero()]
    if not nonzero:
        return NilDependenceVerdict(NilKind.ALL_NILPOTENT, (Fraction(0), Fraction(1)),
                                    "every trace polynomial vanishes identically")
    g = nonzero[0].monic()
    for p in nonzero[1:]:
        g = poly_gcd(g, p)
        if g.degree == 0:
            break
    if g.degree >= 1:
        roots = g.rational_roots()
        if roots:
            w = (roots[0], Fraction(1))
            assert is_nilpotent_matrix(_combine(w, (d1, d2)))
            return NilDependenceVerdict(NilKind.SOME_NILPOTENT, w,
                                        f"common root t={roots[0]} of gcd {g}")
        return NilDependenceVerdict(NilKind.SOME_NILPOTENT, None,
                                    f"gcd {g} has only irrational roots")
    if is_nilpotent_matrix(d1):
        return NilDependenceVerdict(NilKind.SOME_NILPOTENT, (Fraction(1), Fraction(0)),
                                    "first matrix is nilpotent")
    return NilDependenceVerdict(NilKind.NONE_NILPOTENT, None,
                                "trace polynomials are coprime and the first matrix is not nilpotent")


def all_combinations_nilpotent(ds: Sequence[Matrix]) -> bool:
    """True iff every combination of the given (at most 3) matrices is nilpotent.

    Expands (sum_i t_i d_i)^k by multidegree and requires every trace
    coefficient to vanish for k = 1..n.
    """
    ds = list(ds)
    if not ds:
        return True
    if len(ds) > 3:
        raise ValueError("all_combinations_nilpotent supports at most 3 matrices")
    n = ds[0].rows
    for d in ds:
        if d.shape != (n, n):
            raise ValueError("matrices must be square and of equal size")
    r = len(ds)
    powers = {(0,) * r: Matrix.identity(n)}
    for _ in range(n):
        nxt: dict = {}
        for md, m in powers.items():
            for i, d in enumerate(ds):
                key = md[:i] + (md[i] + 1,) + md[i + 1:]
                prod = m @ d
                nxt[key] = nxt[key] + prod if key in nxt else prod
        powers = nxt
        if any(m.trace() != 0 for m in powers.values()):
            return False
    return True


def check_derivation_basis(t: AlgebraTable, basis: DerivationBasis) -> bool:
    return all(is_derivation(t, d) for d in basis.basis)
