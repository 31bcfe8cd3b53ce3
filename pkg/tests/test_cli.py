import json
from pathlib import Path

import pytest

from oscitab.cli import main, parse_partition

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"

GOLDEN_CASES = [
    ("qyot_21_5_3.json.txt", ["enumerate-qyot", "2,1", "5", "3", "--json"]),
    ("qyot_21_5_3.txt", ["enumerate-qyot", "2,1", "5", "3"]),
    ("expand_f_21_5_3.txt", ["expand-f", "2,1", "5", "3"]),
    ("expand_f_21_5_3.json.txt", ["expand-f", "2,1", "5", "3", "--json"]),
    ("expand_schur_21_5.json.txt", ["expand-schur", "2,1", "5", "--json"]),
    ("burge_example.json.txt", ["burge", "4,2", "4,3", "7,2", "--json"]),
    ("burge_example.txt", ["burge", "4,2", "4,3", "7,2"]),
    (
        "sundaram_trace.txt",
        ["sundaram", str(DATA / "sundaram_example.json"), "--trace"],
    ),
    ("vset_21_7.txt", ["vset", "2,1", "7"]),
    ("inner_3_111_5.json.txt", ["inner-product", "3", "1,1,1", "5", "--json"]),
    ("n0_3_111.txt", ["n0", "3", "1,1,1"]),
    ("independence_3_5.json.txt", ["independence", "3", "5", "--json"]),
    ("snp_21_5_3.json.txt", ["snp", "2,1", "5", "3", "--json"]),
    ("ssot_poly_21_5_2.txt", ["ssot-poly", "2,1", "5", "2"]),
]


@pytest.mark.parametrize("name,argv", GOLDEN_CASES, ids=[c[0] for c in GOLDEN_CASES])
def test_golden_output(name, argv, capsys):
    assert main(argv) == 0
    out = capsys.readouterr().out
    assert out == (GOLDEN / name).read_text()


def test_golden_values_spot_checks():
    qyot = json.loads((GOLDEN / "qyot_21_5_3.json.txt").read_text())
    assert qyot["count"] == 14 and len(qyot["tableaux"]) == 14
    inner = json.loads((GOLDEN / "inner_3_111_5.json.txt").read_text())
    assert inner["value"] == 0
    assert (GOLDEN / "n0_3_111.txt").read_text() == "7\n"
    schur = json.loads((GOLDEN / "expand_schur_21_5.json.txt").read_text())
    assert {tuple(t["partition"]) for t in schur["terms"]} == {
        (3, 2), (3, 1, 1), (2, 2, 1), (2, 1, 1, 1),
    }
    burge = json.loads((GOLDEN / "burge_example.json.txt").read_text())
    assert burge["tableau"] == [[2, 2], [3, 4], [4], [7]]


def test_parse_partition():
    assert parse_partition("2,1") == (2, 1)
    assert parse_partition("-") == ()
    with pytest.raises(ValueError):
        parse_partition("1,2")
    with pytest.raises(ValueError):
        parse_partition("a,b")
    with pytest.raises(ValueError):
        parse_partition("0")


def test_domain_error_exit_code(capsys):
    assert main(["expand-schur", "2,1", "4"]) == 1
    err = capsys.readouterr().err
    assert "n >= |lam| and n == |lam| (mod 2)" in err
    assert main(["burge", "2,3"]) == 1
    assert main(["vset", "2,3", "5"]) == 1
    assert main(["sundaram", str(DATA / "missing.json")]) == 1


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["enumerate-qyot", "2,1"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["not-a-command"])
    assert exc.value.code == 2


def test_limit_flag(capsys):
    assert main(["enumerate-qyot", "2,1", "5", "3", "--limit", "2"]) == 0
    out = capsys.readouterr().out
    assert len(out.strip().splitlines()) == 3  # header + 2 rows
    assert "14 quasi-Yamanouchi" in out


def test_threads_hint_accepted(capsys):
    assert main(["--threads", "4", "n0", "3", "1,1,1"]) == 0
    assert capsys.readouterr().out == "7\n"


def test_sundaram_without_trace(capsys):
    assert main(["sundaram", str(DATA / "sundaram_example.json")]) == 0
    out = capsys.readouterr().out
    assert out == "burge:   4,2 4,3 7,2\ntableau: 1 4 / 5 / 6\n"


def test_outputs_are_reproducible(capsys):
    for _, argv in GOLDEN_CASES[:4]:
        main(argv)
        first = capsys.readouterr().out
        main(argv)
        assert capsys.readouterr().out == first
