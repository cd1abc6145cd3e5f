from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from leibniz.algebra import AlgebraTable, basis_vector, bracket, left_op, right_op, vec_add, vec_sub
from leibniz.catalog import build, build_L4
from leibniz.identity import (
    center,
    check_left_leibniz,
    check_mult_homomorphisms,
    check_right_leibniz,
    is_associative,
    is_derivation,
    is_lie,
    quotient_is_lie,
    quotient_table,
    squares_ideal,
)
from leibniz.ratmat import Matrix

from conftest import tables, vectors

# sl2 in the basis h, e, f
SL2 = AlgebraTable.from_brackets(3, [
    (1, 2, {2: 2}), (2, 1, {2: -2}), (1, 3, {3: -2}), (3, 1, {3: 2}), (2, 3, {1: 1}), (3, 2, {1: -1})])
IDEMPOTENT = AlgebraTable.from_brackets(1, [(1, 1, {1: 1})])


def test_right_leibniz_examples():
    assert check_right_leibniz(build_L4(5)).holds
    assert check_right_leibniz(AlgebraTable.abelian(4)).holds
    rep = check_right_leibniz(IDEMPOTENT)
    assert not rep.holds
    assert rep.failures == [((1, 1, 1), (F(-1),))]


def test_left_leibniz_examples():
    assert check_left_leibniz(build_L4(4)).holds
    assert check_left_leibniz(AlgebraTable.abelian(3)).holds
    assert not check_left_leibniz(build("g_6_2", 4, {"b": 0})).holds


def test_report_holds_iff_no_failures():
    for t in (build_L4(4), IDEMPOTENT, build("g_6_2", 4, {"b": 0})):
        for rep in (check_right_leibniz(t), check_left_leibniz(t)):
            assert rep.holds == (not rep.failures)
            assert all(any(d) for _, d in rep.failures)


def test_lie_and_associative():
    assert is_associative(build_L4(4))
    assert not is_associative(build_L4(5))
    for n in range(4, 9):
        assert not is_lie(build_L4(n))
    assert is_lie(SL2)
    assert check_right_leibniz(SL2).holds and check_left_leibniz(SL2).holds


def _right_identity_defect(t, x, y, z):
    lhs = bracket(t, bracket(t, x, y), z)
    rhs = vec_add(bracket(t, bracket(t, x, z), y), bracket(t, x, bracket(t, y, z)))
    return vec_sub(lhs, rhs)


@given(tables(max_dim=3), st.data())
def test_basis_check_matches_random_vectors(t, data):
    n = t.dim
    triples = [tuple(data.draw(vectors(n)) for _ in range(3)) for _ in range(5)]
    if check_right_leibniz(t).holds:
        assert all(not any(_right_identity_defect(t, *xyz)) for xyz in triples)


@pytest.mark.parametrize("name,n,params", [("g_n1_1", 5, {"a": 2}), ("g_5_8", 4, {"c": 1, "d": 0, "eps": 0})])
def test_right_identity_on_random_vectors(name, n, params):
    import random
    t = build(name, n, params)
    rng = random.Random(3)
    for _ in range(50):
        xyz = [tuple(F(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(t.dim)) for _ in range(3)]
        assert not any(_right_identity_defect(t, *xyz))


def test_center_examples():
    for n in range(4, 9):
        c = center(build_L4(n))
        assert c.dim == 2
        assert c.contains(basis_vector(n, 2)) and c.contains(basis_vector(n, n))
    assert center(AlgebraTable.abelian(3)).dim == 3
    assert center(build("g_5_5", 4, {"a": 2, "b": 1})).dim == 0


@given(tables())
def test_center_is_annihilated(t):
    c = center(t)
    for v in c.vectors():
        for j in range(1, t.dim + 1):
            assert not any(right_op(t, j) @ v)
            assert not any(left_op(t, j) @ v)


def test_is_derivation_examples():
    t = build_L4(4)
    assert is_derivation(t, Matrix.zeros(4))
    assert not is_derivation(t, Matrix.identity(4))
    g = build("g_n1_2", 5, {})
    for i in range(1, g.dim + 1):
        assert is_derivation(g, right_op(g, i))
    with pytest.raises(ValueError):
        is_derivation(t, Matrix.zeros(3))


def test_homomorphism_examples():
    assert check_mult_homomorphisms(build_L4(5), "right").holds
    assert check_mult_homomorphisms(AlgebraTable.abelian(3), "left").holds
    assert check_mult_homomorphisms(AlgebraTable.abelian(3), "right").holds
    assert check_mult_homomorphisms(build("l_6_3", 4, {"c": 0}), "left").holds
    bad = check_mult_homomorphisms(IDEMPOTENT, "right")
    assert not bad.holds and bad.failures == [(1, 1)] and "R_" in bad.relation
    with pytest.raises(ValueError):
        check_mult_homomorphisms(SL2, "up")


def test_squares_ideal_examples():
    t = build_L4(4)
    ideal = squares_ideal(t)
    assert ideal.contains(basis_vector(4, 2))
    assert quotient_is_lie(t)
    assert squares_ideal(SL2).is_zero() and quotient_is_lie(SL2)
    assert quotient_is_lie(build("g_5_8", 4, {"c": 1, "d": 0, "eps": 0}))


def test_squares_ideal_contains_squares_and_is_two_sided():
    t = build("g_n1_3", 7, {"eps": 1, "b": (2, -1)})
    ideal = squares_ideal(t)
    x = (F(1), F(-2), F(1, 3), F(0), F(5), F(1, 2), F(3), F(-1))
    assert ideal.contains(bracket(t, x, x))
    for v in ideal.vectors():
        for j in range(1, t.dim + 1):
            ej = basis_vector(t.dim, j)
            assert ideal.contains(bracket(t, v, ej)) and ideal.contains(bracket(t, ej, v))


def test_quotient_table_dimension():
    t = build_L4(5)
    ideal = squares_ideal(t)
    q = quotient_table(t, ideal)
    assert q.dim == t.dim - ideal.dim
