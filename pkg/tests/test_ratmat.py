from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given, strategies as st

from leibniz.ratmat import (
    Matrix,
    UniPoly,
    charpoly,
    det,
    format_rational,
    inverse,
    is_nilpotent_matrix,
    nullspace,
    parse_rational,
    poly_gcd,
    rank,
    rref,
)

from conftest import matrices, rationals, small_rationals


def to_sympy(m: Matrix):
    return sympy.Matrix(m.rows, m.cols, [sympy.Rational(x.numerator, x.denominator) for x in m.flatten()])


# rationals ----------------------------------------------------------------

@pytest.mark.parametrize("q,text", [(F(0), "0"), (F(3), "3"), (F(-1, 2), "-1/2"), (F(6, 4), "3/2")])
def test_format_rational_canonical(q, text):
    assert format_rational(q) == text
    assert parse_rational(text) == q


@pytest.mark.parametrize("bad", ["2/4", "1/1", "-0", "01", "1/-2", "0/5", "1.5", "", "x", "3/0"])
def test_parse_rational_rejects_non_canonical(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


@given(rationals)
def test_rational_text_round_trip(q):
    assert parse_rational(format_rational(q)) == q


# rref, rank, nullspace ----------------------------------------------------

def test_rref_identity():
    r = rref(Matrix.identity(3))
    assert r.reduced == Matrix.identity(3)
    assert list(r.pivot_columns) == [0, 1, 2]
    assert r.rank == 3


def test_rref_proportional_rows():
    r = rref(Matrix([[1, 2], [2, 4]]))
    assert r.reduced == Matrix([[1, 2], [0, 0]])
    assert r.rank == 1


@given(matrices())
def test_rref_idempotent(m):
    once = rref(m).reduced
    assert rref(once).reduced == once


@given(matrices())
def test_rref_matches_sympy(m):
    ours = rref(m)
    theirs, pivots = to_sympy(m).rref()
    assert to_sympy(ours.reduced) == theirs
    assert tuple(ours.pivot_columns) == tuple(pivots)


@given(matrices(max_size=6))
def test_rank_nullity(m):
    ker = nullspace(m)
    assert rank(m) + ker.rows == m.cols
    for r in range(ker.rows):
        assert all(x == 0 for x in m @ ker.row(r))
    assert rank(ker) == ker.rows if ker.rows else True


def test_nullspace_examples():
    assert nullspace(Matrix.identity(3)).rows == 0
    assert nullspace(Matrix.zeros(2, 3)).rows == 3
    ker = nullspace(Matrix([[1, 1, 0], [0, 0, 1]]))
    assert ker.rows == 1
    v = ker.row(0)
    assert v[0] == -v[1] and v[0] != 0 and v[2] == 0


def test_rank_of_random_4x4_matches_cofactor_oracle():
    m = Matrix([[1, 2, 3, 4], [2, 4, 6, 8], [0, 1, F(1, 2), 3], [1, 3, F(7, 2), 7]])
    # rows 2 and 4 are combinations of 1 and 3
    assert rank(m) == 2 == to_sympy(m).rank()
    assert det(m) == 0


# determinant and inverse --------------------------------------------------

@given(matrices(square=True))
def test_det_matches_sympy(m):
    assert det(m) == F(str(to_sympy(m).det()))


@given(matrices(square=True))
def test_inverse_round_trip(m):
    if det(m) == 0:
        with pytest.raises(ValueError):
            inverse(m)
    else:
        assert m @ inverse(m) == Matrix.identity(m.rows)


# polynomials ----------------------------------------------------------------

def test_charpoly_examples():
    assert charpoly(Matrix.identity(2)) == UniPoly([1, -2, 1])
    assert charpoly(Matrix([[1, 2], [3, 4]])) == UniPoly([-2, -5, 1])
    upper = Matrix([[0, 1, 5, 2], [0, 0, 3, 1], [0, 0, 0, 7], [0, 0, 0, 0]])
    assert charpoly(upper) == UniPoly.monomial(4)


def test_charpoly_rejects_non_square():
    with pytest.raises(ValueError):
        charpoly(Matrix([[1, 2, 3]]))


@given(matrices(square=True, max_size=8, entries=small_rationals))
def test_cayley_hamilton(m):
    p = charpoly(m)
    assert p.degree == m.rows and p.leading == 1
    assert p.eval_matrix(m).is_zero()


@given(matrices(square=True, max_size=5))
def test_charpoly_matches_sympy(m):
    lam = sympy.Symbol("t")
    theirs = sympy.Poly(to_sympy(m).charpoly(lam).as_expr(), lam).all_coeffs()[::-1]
    assert UniPoly([F(str(c)) for c in theirs]) == charpoly(m)


def test_is_nilpotent_examples():
    assert is_nilpotent_matrix(Matrix.unit(2, 2, 1))
    assert not is_nilpotent_matrix(Matrix.identity(3))


@st.composite
def conjugated_nilpotents(draw):
    n = draw(st.integers(1, 5))
    upper = Matrix([[draw(small_rationals) if c > r else 0 for c in range(n)] for r in range(n)])
    # unit lower triangular, so always invertible
    p = Matrix([[1 if c == r else (draw(small_rationals) if c < r else 0) for c in range(n)] for r in range(n)])
    return p @ upper @ inverse(p)


@given(st.one_of(conjugated_nilpotents(), matrices(square=True, max_size=5, entries=small_rationals)))
def test_nilpotent_agrees_with_power(m):
    assert is_nilpotent_matrix(m) == (m ** m.rows).is_zero()


def test_poly_arithmetic():
    a = UniPoly([-1, 0, 1])   # t^2 - 1
    b = UniPoly([1, 1])       # t + 1
    q, r = a.divmod(b)
    assert q == UniPoly([-1, 1]) and r.is_zero()
    assert poly_gcd(a, UniPoly([1, -2, 1])) == UniPoly([-1, 1])
    assert poly_gcd(UniPoly([1, 1]), UniPoly([2, 1])) == UniPoly([1])
    assert sorted(UniPoly([-6, 1, 1]).rational_roots()) == [-3, 2]
    assert UniPoly([3, 0, 2]).rational_roots() == []
    assert UniPoly([0, 0]).degree == -1


@given(st.lists(rationals, min_size=1, max_size=5), st.lists(rationals, min_size=1, max_size=4))
def test_divmod_reconstructs(ac, bc):
    a, b = UniPoly(ac), UniPoly(bc)
    if b.is_zero():
        return
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.degree < b.degree


@given(st.lists(st.builds(F, st.integers(-4, 4)), min_size=1, max_size=4))
def test_rational_roots_found(roots):
    p = UniPoly([1])
    for r in roots:
        p = p * UniPoly([-r, 1])
    assert set(p.rational_roots()) == set(roots)
