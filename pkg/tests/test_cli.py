import json

import pytest

from chromind.cli import main, parse_n_range, UsageError


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_gen_json(capsys):
    code, out, _ = run(capsys, "gen", "--family", "flower", "--n", "4", "--emit", "json")
    assert code == 0
    assert json.loads(out)["vertex_count"] == 9


def test_gen_dot(capsys):
    code, out, _ = run(capsys, "gen", "--family", "cycle", "--n", "3", "--emit", "dot")
    assert code == 0 and out.count("--") == 3


@pytest.mark.parametrize("argv", [
    ("gen", "--family", "flower", "--n", "2"),
    ("gen", "--family", "tulip", "--n", "4"),
    ("verify", "--theorems", "9.9", "--n", "4"),
    ("verify", "--n", "x..y"),
    ("verify",),
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


@pytest.mark.parametrize("family,variant,m1", [
    ("flower", "minus", 29), ("sunflower", "plus", 55), ("cycle", "minus", 10)])
def test_indices(capsys, family, variant, m1):
    code, out, _ = run(capsys, "indices", "--family", family, "--n", "4", "--variant", variant)
    assert code == 0
    assert json.loads(out)["indices"]["m1"] == m1


def test_indices_witness(capsys):
    code, out, _ = run(capsys, "indices", "--family", "blossom", "--n", "4", "--witness", "m2")
    assert code == 0 and json.loads(out)["indices"]["m2"] == 190


def test_indices_improper(capsys):
    code, _, err = run(capsys, "indices", "--family", "cycle", "--n", "4", "--coloring", "[1,1,2,2]")
    assert code == 1 and "edge 0-1" in err


@pytest.mark.parametrize("argv,value", [
    (("--family", "flower", "--n", "4", "--index", "m1", "--goal", "min"), 29),
    (("--family", "blossom", "--n", "4", "--index", "m1", "--goal", "min"), 85),
    (("--family", "cycle", "--n", "4", "--index", "m3", "--goal", "min", "--k", "2"), 4),
])
def test_oracle(capsys, argv, value):
    code, out, _ = run(capsys, "oracle", *argv)
    assert code == 0 and json.loads(out)["value"] == {"num": value, "den": 1}


def test_budget_exit(capsys, monkeypatch):
    monkeypatch.setenv("CHROMIND_BUDGET_VERTICES", "5")
    assert run(capsys, "oracle", "--family", "flower", "--n", "4", "--index", "m1", "--goal", "min")[0] == 3


def test_verify_rows(capsys):
    code, out, _ = run(capsys, "verify", "--theorems", "2.1", "--n", "4..8", "--json")
    assert code == 0
    assert len(json.loads(out)["rows"]) == 20


def test_verify_nonint(capsys):
    code, out, _ = run(capsys, "verify", "--theorems", "5.1", "--n", "4")
    assert code == 0 and "NONINTEGER" in out


def test_verify_witness_semantics_covers_all(capsys):
    code, out, _ = run(capsys, "verify", "--theorems", "all", "--n", "4..6", "--semantics", "witness", "--json")
    doc = json.loads(out)
    assert code == 0
    assert {r["theorem"] for r in doc["rows"]} == {"2.1", "2.2", "3.1", "3.2", "4.1", "4.2", "5.1", "5.2"}


def test_verify_out_dir(capsys, tmp_path):
    code, _, _ = run(capsys, "verify", "--theorems", "2.1", "--n", "4", "--out", str(tmp_path / "r"))
    assert code == 0
    assert (tmp_path / "r" / "report.json").exists() and (tmp_path / "r" / "report.txt").exists()


def test_verify_unwritable(capsys, tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    assert run(capsys, "verify", "--theorems", "2.1", "--n", "4", "--out", str(blocker / "sub"))[0] == 1


def test_help_lists_families_and_theorems(capsys):
    code, out, _ = run(capsys, "--help")
    assert code == 0
    for name in ("cycle", "wheel", "helm", "flower", "sunflower", "closed_sunflower", "blossom",
                 "2.1", "2.2", "3.1", "3.2", "4.1", "4.2", "5.1", "5.2"):
        assert name in out


def test_deterministic(capsys):
    argv = ("verify", "--theorems", "3.2", "--n", "4,5", "--json")
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_parse_n_range():
    assert parse_n_range("4..6,9") == [4, 5, 6, 9]
    with pytest.raises(UsageError):
        parse_n_range("6..4")


def test_golden_report_reproduced(capsys, tmp_path):
    from pathlib import Path
    golden = Path(__file__).parent / "golden"
    code, _, _ = run(capsys, "verify", "--preset", "desk", "--out", str(tmp_path))
    assert code == 0
    for name in ("report.json", "report.txt"):
        assert (tmp_path / name).read_bytes() == (golden / name).read_bytes()
