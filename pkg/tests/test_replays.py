from fractions import Fraction as F

from hypothesis import given, strategies as st

from leibniz.catalog import build_L4
from leibniz.derivations import all_combinations_nilpotent
from leibniz.identity import is_derivation
from leibniz.ratmat import Matrix, det, is_nilpotent_matrix, nullspace
from leibniz.replays import codim3_operator, codim3_samples

from conftest import small_rationals


def test_codim3_samples_satisfy_constraint():
    samples = codim3_samples(10)
    assert len(samples) == 10
    for s in samples:
        for (ai, bi, ci) in s.coeffs:
            for (aj, bj, cj) in s.coeffs:
                assert (ai - bi) * cj == (aj - bj) * ci
        assert det(Matrix(s.coeffs)) == 0


def test_codim3_samples_deterministic():
    assert [s.coeffs for s in codim3_samples(3)] == [s.coeffs for s in codim3_samples(3)]


nonzero = small_rationals.filter(bool)


@given(nonzero, small_rationals, small_rationals, small_rationals, small_rationals)
def test_codim3_operator_is_derivation(a, b, c, x, y):
    assert is_derivation(build_L4(4), codim3_operator(a, b, c, x, y))


def test_codim3_dependent_combination_is_nilpotent():
    s = codim3_samples(1)[0]
    # with b = a - t c every operator's diagonal is an affine function of (a, c) only
    (a1, b1, c1), (a2, b2, c2), (a3, b3, c3) = s.coeffs
    ops = s.operators
    assert not all_combinations_nilpotent(list(ops))
    # any two of three vectors in a plane through the origin determine the third
    m = Matrix([[a1, a2, a3], [c1, c2, c3]])
    lam = nullspace(m).row(0)
    combo = ops[0] * lam[0] + ops[1] * lam[1] + ops[2] * lam[2]
    assert is_nilpotent_matrix(combo)
