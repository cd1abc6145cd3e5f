import json

import pytest

from leibniz.algebra import AlgebraTable, save_table
from leibniz.catalog import build, build_L4
from leibniz.cli import main
from leibniz.extensions import BasisChange
from leibniz.replays import replay_right_absorption


@pytest.fixture
def files(tmp_path):
    def put(name, table):
        path = tmp_path / name
        save_table(table, path)
        return str(path)

    def put_matrix(name, change):
        path = tmp_path / name
        path.write_text(json.dumps(change.to_dict()))
        return str(path)

    return put, put_matrix, tmp_path


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *args):
    code, out, _ = run(capsys, *args, "--json")
    return code, json.loads(out)


def test_check_L4_both(capsys, files):
    put, _, _ = files
    code, out, _ = run(capsys, "check", put("L4_5.json", build_L4(5)), "both")
    assert code == 0 and "PASS  right Leibniz identity" in out and "PASS  left Leibniz identity" in out


def test_check_abelian_lie(capsys, files):
    put, _, _ = files
    assert run(capsys, "check", put("abelian.json", AlgebraTable.abelian(3)), "lie")[0] == 0


def test_check_failure_lists_triples(capsys, files):
    put, _, _ = files
    code, out, _ = run(capsys, "check", put("g6_2_b1.json", build("g_6_2", 4, {"b": 1})), "left")
    assert code == 1 and "FAIL  left Leibniz identity" in out and "defect" in out


def test_check_parse_error(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"dim": 2, "field": "Q", "brackets": [{"left": 1, "right": 1, "out": {"3": "1"}}]}')
    code, _, err = run(capsys, "check", str(bad))
    assert code == 2 and "error" in err
    assert run(capsys, "check", str(tmp_path / "missing.json"))[0] == 2


def test_catalog_build_and_check(capsys, files):
    _, _, tmp = files
    out = str(tmp / "g55.json")
    assert run(capsys, "catalog", "build", "g_5_5", "--param", "a=2", "b=1", "--out", out)[0] == 0
    assert run(capsys, "check", out, "right")[0] == 0


def test_catalog_build_rejected(capsys):
    code, out, _ = run(capsys, "catalog", "build", "g_5_5", "--param", "a=1", "b=-1")
    assert code == 1 and "if b=-1, then a != 1" in out


def test_catalog_build_input_errors(capsys):
    assert run(capsys, "catalog", "build", "nope")[0] == 2
    assert run(capsys, "catalog", "build", "g_n1_1", "--param", "a=2")[0] == 2
    assert run(capsys, "catalog", "build", "g_n1_1", "--n", "5", "--param", "a=x")[0] == 2
    assert run(capsys, "catalog", "build", "L4")[0] == 2


def test_catalog_build_tail_parameter(capsys):
    code, doc = run_json(capsys, "catalog", "build", "g_n1_3", "--n", "7", "--param", "eps=1", "b=1/2,3")
    assert code == 0 and doc["data"]["algebra"]["dim"] == 8


def test_catalog_list(capsys):
    code, doc = run_json(capsys, "catalog", "list", "--side", "right", "--codim", "1")
    assert code == 0 and len(doc["data"]["families"]) == 8
    code, out, _ = run(capsys, "catalog", "list", "--side", "left", "--codim", "3")
    assert code == 0 and "codim 3" in out


def test_analyze(capsys, files):
    put, _, _ = files
    code, out, _ = run(capsys, "analyze", put("L4_6.json", build_L4(6)), "series")
    assert code == 0 and "DS=[6,4,0] LS=[6,4,2,1,0]" in out
    code, doc = run_json(capsys, "analyze", put("zero3.json", AlgebraTable.abelian(3)), "center")
    assert doc["data"]["center_dim"] == 3
    g57 = put("g5_7.json", build("g_5_7", 4, {"a": 2, "d": 1, "f": 0, "eps": 0}))
    code, doc = run_json(capsys, "analyze", g57, "nilradical", "--n", "4")
    assert code == 0 and all(c["passed"] for c in doc["checks"])
    code, doc = run_json(capsys, "analyze", put("L4_4.json", build_L4(4)), "derive")
    assert doc["data"]["derivation_dim"] == 7
    code, doc = run_json(capsys, "analyze", put("L4_5.json", build_L4(5)), "fingerprint")
    assert doc["data"]["fingerprint"]["center_dim"] == 2
    assert run(capsys, "analyze", g57, "nilradical")[0] == 2


def test_analyze_nilradical_failure(capsys, files):
    put, _, _ = files
    code, out, _ = run(capsys, "analyze", put("L4_5.json", build_L4(5)), "nilradical", "--n", "4")
    assert code == 1 and "FAIL  (5)" in out


def test_transform(capsys, files):
    put, put_matrix, _ = files
    src = put("src.json", build_L4(4))
    ident = put_matrix("id.json", BasisChange.identity(4))
    assert run(capsys, "transform", src, "--matrix", ident, "--expect", src)[0] == 0
    rp = replay_right_absorption()
    code, _, _ = run(capsys, "transform", put("case7.json", rp.source), "--matrix", put_matrix("p.json", rp.change),
                     "--expect", put("case7_abs.json", rp.target))
    assert code == 0
    code, out, _ = run(capsys, "transform", put("case7.json", rp.source), "--matrix", ident,
                       "--expect", put("case7_abs.json", rp.target))
    assert code == 2  # 4x4 matrix against a 5-dimensional algebra
    wrong = BasisChange.substitution(5, {5: {5: 1, 1: 1}})
    code, out, _ = run(capsys, "transform", put("case7.json", rp.source), "--matrix", put_matrix("w.json", wrong),
                       "--expect", put("case7_abs.json", rp.target))
    assert code == 1 and "got" in out and "expected" in out


def test_transform_singular(capsys, files, tmp_path):
    put, _, _ = files
    sing = tmp_path / "sing.json"
    sing.write_text(json.dumps({"matrix": [["1", "0"], ["2", "0"]]}))
    abelian = put("ab.json", AlgebraTable.abelian(2))
    assert run(capsys, "transform", abelian, "--matrix", str(sing))[0] == 1


def test_verify_paper_suites(capsys):
    code, doc = run_json(capsys, "verify-paper", "--suite", "l4")
    assert code == 0
    suite = doc["data"]["suites"][0]
    assert suite["suite"] == "l4" and suite["checked"] == len(suite["claims"]) >= 25
    code, _, _ = run(capsys, "verify-paper", "--suite", "codim3")
    assert code == 0


def test_verify_paper_failure_names_claim(capsys):
    code, out, _ = run(capsys, "verify-paper", "--suite", "right-codim2")
    assert code == 1 and "FAIL  [right-codim2] generator operators are nil-independent" in out


@pytest.mark.parametrize("args", [
    ("verify-paper", "--suite", "transforms"),
    ("verify-paper", "--suite", "left-codim2"),
    ("catalog", "build", "g_5_5", "--param", "a=1", "b=-1"),
])
def test_json_and_text_agree(capsys, args):
    text_code, text, _ = run(capsys, *args)
    json_code, doc = run_json(capsys, *args)
    assert text_code == json_code == doc["exit"]
    for c in doc["checks"]:
        tag = "PASS" if c["passed"] else ("NOTE" if c["informational"] else "FAIL")
        assert f"{tag}  {c['check']}" in text


def test_usage_error_exit_code(capsys):
    assert main(["frobnicate"]) == 2
    assert main(["check"]) == 2
