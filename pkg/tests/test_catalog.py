from fractions import Fraction as F

import pytest

from leibniz import catalog
from leibniz.algebra import AlgebraTable, right_op
from leibniz.catalog import (
    CODIM3_NOTE,
    InadmissibleParameters,
    all_entries,
    build,
    build_L4,
    enumerate_families,
    fingerprint,
    get_entry,
    is_admissible,
    sample_params,
    special_points,
)
from leibniz.derivations import restrict_operator
from leibniz.extensions import verify_nilradical
from leibniz.identity import check_left_leibniz, check_right_leibniz
from leibniz.ratmat import is_nilpotent_matrix
from leibniz.replays import codim2_coincidence
from leibniz.series import is_nilpotent, is_solvable


def test_L4_brackets():
    t = build_L4(4)
    assert t.nonzero_pair_count() == 4
    assert t.basis_bracket(1, 3) == {2: 2, 4: -1}
    t7 = build_L4(7)
    assert t7.basis_bracket(5, 1) == {6: 1}
    assert t7.basis_bracket(1, 6) == {7: -1}
    assert t7.basis_bracket(1, 7) == {}
    with pytest.raises(ValueError):
        build_L4(3)


def test_enumeration_counts():
    assert len(enumerate_families("right", 1)) == 8
    assert len(enumerate_families("left", 1)) == 8
    assert len(enumerate_families("right", 2)) == 4
    assert [e.cli_id for e in enumerate_families("left", 2, 4)] == ["l_6_2", "l_6_3", "l_6_4"]
    assert enumerate_families("right", 3) == [] and CODIM3_NOTE
    with pytest.raises(ValueError):
        enumerate_families("middle", 1)
    with pytest.raises(ValueError):
        enumerate_families("right", 4)


def test_shared_families_are_single_objects():
    right = {e.cli_id: e for e in enumerate_families("right", 1)}
    left = {e.cli_id: e for e in enumerate_families("left", 1)}
    shared = set(right) & set(left)
    assert shared == {"g_n1_4", "g_5_7", "g_5_8"}
    assert all(right[k] is left[k] for k in shared)
    assert len(all_entries()) == 21


def test_build_examples():
    assert check_right_leibniz(build("g_5_5", 4, {"a": 2, "b": 1})).holds
    with pytest.raises(InadmissibleParameters, match="if b=-1, then a != 1"):
        build("g_5_5", 4, {"a": 1, "b": -1})
    t = build("g_n1_4", 6, {"d": 1, "f": 0, "eps": 1})
    assert check_right_leibniz(t).holds and check_left_leibniz(t).holds


@pytest.mark.parametrize("name,n,params", [
    ("g_n1_3", 4, {"eps": 1, "b": ()}),
    ("g_n1_4", 5, {"d": 0, "f": 0, "eps": 0}),
    ("g_5_6", 4, {"a": 1}),
    ("g_5_8", 4, {"c": 0, "d": 1, "eps": 0}),
    ("g_6_2", 4, {"b": -1}),
    ("g_6_3", 4, {"c": -2}),
    ("g_6_4", 4, {"b": 0}),
    ("g_5_5", 4, {"a": 2}),
    ("g_5_5", 4, {"a": 2, "b": 1, "z": 3}),
    ("g_n1_4", 5, {"d": 1, "f": 0, "eps": 2}),
    ("g_n1_3", 6, {"eps": 0, "b": (1, 2)}),
])
def test_inadmissible_parameters(name, n, params):
    assert not is_admissible(get_entry(name), n, params)
    with pytest.raises(InadmissibleParameters):
        build(name, n, params)


def test_bad_n_and_unknown_id():
    with pytest.raises(ValueError):
        build("g_n2_1", 4, {})
    with pytest.raises(ValueError):
        build("g_5_5", 5, {"a": 2, "b": 1})
    with pytest.raises(KeyError):
        build("g_9_9", 4, {})
    assert get_entry("g_{5,5}") is get_entry("g_5_5")


def test_epsilon_aliases_and_tail_padding():
    a = build("g_n1_3", 7, {"epsilon": 1, "b": (2,)})
    b = build("g_n1_3", 7, {"eps": 1, "b": (2, 0)})
    assert a == b


def sweep(side, codim):
    for entry in enumerate_families(side, codim):
        ns = entry.n_values((4, 5, 7) if codim == 1 else (5, 6))
        for n in ns:
            for p in sample_params(entry, n) + special_points(entry, n):
                yield entry, n, p, build(entry.cli_id, n, p)


@pytest.mark.parametrize("side", ["right", "left"])
def test_codim1_families(side):
    count = 0
    for entry, n, p, t in sweep(side, 1):
        count += 1
        own = check_right_leibniz if side == "right" else check_left_leibniz
        assert own(t).holds, (entry.id, n, p)
        assert is_solvable(t)[0] and not is_nilpotent(t)[0]
        assert t.restrict(n) == build_L4(n)
        expected = entry.expected_identities(p)
        assert check_right_leibniz(t).holds == expected["right"], (entry.id, p)
        assert check_left_leibniz(t).holds == expected["left"], (entry.id, p)
        assert verify_nilradical(t, n, side=side).passed
    assert count >= 8 * 3


def test_documented_cross_side_facts():
    assert check_left_leibniz(build("g_n1_1", 5, {"a": 0})).holds
    assert not check_left_leibniz(build("g_n1_1", 5, {"a": 2})).holds
    assert check_left_leibniz(build("g_5_5", 4, {"a": 2, "b": -1})).holds
    assert not check_left_leibniz(build("g_5_5", 4, {"a": 2, "b": 1})).holds
    assert check_right_leibniz(build("l_n1_1", 5, {"a": 0})).holds
    assert not check_right_leibniz(build("l_n1_1", 5, {"a": 3})).holds
    assert check_right_leibniz(build("l_5_5", 4, {"a": 2, "b": -1})).holds
    assert not check_right_leibniz(build("l_n1_2", 5, {})).holds


@pytest.mark.parametrize("side", ["right", "left"])
def test_codim2_families_fail_other_side(side):
    other = check_left_leibniz if side == "right" else check_right_leibniz
    own = check_right_leibniz if side == "right" else check_left_leibniz
    for entry, n, p, t in sweep(side, 2):
        assert own(t).holds and not other(t).holds, (entry.id, n, p)
        assert t.restrict(n) == build_L4(n)


def test_right_codim1_outer_operator():
    for entry, n, p, t in sweep("right", 1):
        d = restrict_operator(right_op(t, n + 1), n)
        assert not is_nilpotent_matrix(d), (entry.id, n, p)


def test_default_samples_filtered_by_admissibility():
    samples = sample_params(get_entry("g_6_3"), 4)
    assert [s["c"] for s in samples] == [F(-1, 2), F(1, 3), F(2)]
    samples = sample_params(get_entry("g_5_6"), 4)
    assert all(s["a"] != 1 for s in samples) and len(samples) == 3


def test_seeded_samples(monkeypatch):
    monkeypatch.setenv("LEIBNIZ_SAMPLE_SEED", "42")
    a = sample_params(get_entry("g_n1_1"), 5)
    b = sample_params(get_entry("g_n1_1"), 5)
    assert a == b
    monkeypatch.delenv("LEIBNIZ_SAMPLE_SEED")
    assert sample_params(get_entry("g_n1_1"), 5) == [{"a": F(-2)}, {"a": F(-1, 2)}, {"a": F(1, 3)}]


def test_fingerprints():
    fp = fingerprint(build_L4(5))
    assert (list(fp.ds), list(fp.ls), fp.center_dim, fp.side_flags) == ([5, 3, 0], [5, 3, 1, 0], 2, (True, True))
    fp = fingerprint(AlgebraTable.abelian(4))
    assert fp.center_dim == 4 and fp.derivation_dim == 16


def test_fingerprint_of_coinciding_members():
    # these two listed members are isomorphic, so every invariant agrees
    a = fingerprint(build("g_6_2", 4, {"b": 1}))
    b = fingerprint(build("g_6_3", 4, {"c": 0}))
    assert a == b
    rp = codim2_coincidence("right")
    assert rp.source == build("g_6_2", 4, {"b": 1})


def test_fingerprints_separate_other_members():
    a = fingerprint(build("g_6_2", 4, {"b": 1}))
    c = fingerprint(build("g_n2_1", 5, {}))
    d = fingerprint(build("g_n1_1", 4, {"a": 2}))
    assert a != c and a != d


def test_catalog_alias():
    assert catalog.enumerate is enumerate_families
