import pytest
from hypothesis import given

from leibniz.algebra import AlgebraTable
from leibniz.catalog import build, build_L4
from leibniz.series import (
    derived_series,
    format_signatures,
    is_nilpotent,
    is_quasi_filiform,
    is_solvable,
    lower_central_series,
)

from conftest import tables

CHAIN5 = AlgebraTable.from_brackets(5, [(i, 1, {i + 1: 1}) for i in range(1, 5)])


def expected_ls(n):
    return [n, n - 2] + list(range(n - 4, -1, -1)) if n > 4 else [4, 2, 0]


@pytest.mark.parametrize("n", range(4, 9))
def test_L4_signatures(n):
    t = build_L4(n)
    assert list(derived_series(t).dims) == [n, n - 2, 0]
    assert list(lower_central_series(t).dims) == expected_ls(n)
    assert is_quasi_filiform(t)


def test_expected_ls_literal():
    assert expected_ls(5) == [5, 3, 1, 0]
    assert expected_ls(6) == [6, 4, 2, 1, 0]
    assert expected_ls(8) == [8, 6, 4, 3, 2, 1, 0]


def test_abelian_series():
    t = AlgebraTable.abelian(3)
    assert list(lower_central_series(t).dims) == [3, 0]
    assert list(derived_series(t).dims) == [3, 0]


def test_non_nilpotent_stabilizes():
    res = lower_central_series(build("g_6_2", 4, {"b": 1}))
    assert res.stabilized and res.dims[-1] > 0 and res.index is None


def test_codim2_solvable():
    res = derived_series(build("g_n2_1", 5, {}))
    assert res.dims[-1] == 0


def test_indices():
    assert is_nilpotent(build_L4(4)) == (True, 2)
    g = build("g_5_6", 4, {"a": 0})
    assert is_solvable(g)[0] and not is_nilpotent(g)[0]
    assert is_nilpotent(AlgebraTable.abelian(0)) == (True, 1)


def test_quasi_filiform():
    assert not is_quasi_filiform(AlgebraTable.abelian(5))
    assert not is_quasi_filiform(CHAIN5)
    with pytest.raises(ValueError):
        is_quasi_filiform(AlgebraTable.abelian(3))


def test_format_signatures():
    assert format_signatures(build_L4(6)) == "DS=[6,4,0] LS=[6,4,2,1,0]"


@given(tables())
def test_series_monotone_and_nested(t):
    for res in (lower_central_series(t), derived_series(t)):
        assert all(a > b for a, b in zip(res.dims, res.dims[1:]))
        assert all(a.contains_subspace(b) for a, b in zip(res.terms, res.terms[1:]))
        assert [s.dim for s in res.terms] == list(res.dims)


@given(tables())
def test_derived_inside_lower_central(t):
    ls, ds = lower_central_series(t).terms, derived_series(t).terms
    for k in range(min(len(ls), len(ds))):
        assert ls[k].contains_subspace(ds[k])
