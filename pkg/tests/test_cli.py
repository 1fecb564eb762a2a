"""Tests for the command line interface."""

import argparse
import json
import pytest
from ordconflict.cli import main, parse_range
from ordconflict.constants import TABLE_ROW


def write_json(directory, name, document):
    path = directory / name
    path.write_text(json.dumps(document))

    return str(path)


@pytest.fixture
def k3_file(tmp_path):
    return write_json(
        tmp_path,
        "k3.json",
        {"vertices": [1, 2, 3], "edges": [[1, 2], [1, 3], [2, 3]]},
    )


@pytest.fixture
def k4_file(tmp_path):
    edges = [[u, v] for u in range(1, 5) for v in range(u + 1, 5)]

    return write_json(
        tmp_path, "k4.json", {"vertices": [1, 2, 3, 4], "edges": edges}
    )


@pytest.fixture
def row3_file(tmp_path):
    return write_json(
        tmp_path, "row3.json", {"matrix": [[1, 0, -1, 0]], "p": 1}
    )


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()

    return code, captured.out, captured.err


def test_version(capsys):
    code, out, _ = run(capsys, "--version")

    assert code == 0
    assert out.startswith("ordconflict ")


def test_missing_subcommand(capsys):
    code, _, _ = run(capsys)

    assert code == 2


def test_parse_range():
    assert parse_range("-4..4") == (-4, 4)

    with pytest.raises(argparse.ArgumentTypeError):
        parse_range("4..-4")


def test_conflict(capsys, k3_file, row3_file):
    code, out, _ = run(
        capsys, "conflict", "--graph", k3_file, "--spec", row3_file
    )

    assert code == 0
    assert json.loads(out) == {
        "nodes": [[1, 2], [1, 3], [2, 3]],
        "conflicts": [[0, 2], [1, 2]],
    }


def test_conflict_as_text(capsys, k3_file, row3_file):
    code, out, _ = run(
        capsys,
        "--output",
        "text",
        "conflict",
        "--graph",
        k3_file,
        "--spec",
        row3_file,
    )

    assert code == 0
    assert "3 nodes, 2 conflicts" in out


def test_solve(capsys, k3_file, row3_file):
    code, out, _ = run(
        capsys,
        "solve",
        "--graph",
        k3_file,
        "--spec",
        row3_file,
        "--what",
        "alpha",
    )

    assert code == 0
    assert json.loads(out) == {"what": "alpha", "value": 2}


def test_solve_underlying_needs_no_spec(capsys, k3_file):
    code, out, _ = run(
        capsys, "solve", "--graph", k3_file, "--what", "chi-underlying"
    )

    assert code == 0
    assert json.loads(out)["value"] == 3


def test_solve_requires_spec(capsys, k3_file):
    code, _, err = run(
        capsys, "solve", "--graph", k3_file, "--what", "omega"
    )

    assert code == 2
    assert err.startswith("error:")


def test_formula(capsys, tmp_path):
    spec = write_json(tmp_path, "s.json", {"matrix": [[1, 0, -1, 0]], "p": 2})
    code, out, _ = run(
        capsys, "formula", "--spec", spec, "--what", "W", "--k", "5"
    )

    assert code == 0
    assert json.loads(out) == {
        "kind": "exact",
        "provenance": "table1.row3",
        "value": 2,
    }

    code, out, _ = run(
        capsys, "formula", "--spec", spec, "--what", "Xcli", "--w", "2"
    )

    assert code == 0
    assert json.loads(out)["value"] == 5


def test_formula_with_wrong_bound(capsys, row3_file):
    code, _, err = run(
        capsys, "formula", "--spec", row3_file, "--what", "Xcli", "--k", "5"
    )

    assert code == 2
    assert "--w" in err


def test_classify(capsys, row3_file):
    code, out, _ = run(capsys, "classify", "--spec", row3_file)
    document = json.loads(out)

    assert code == 0
    assert (document["tag"], document["row"]) == (TABLE_ROW, 3)


def test_construct(capsys, tmp_path):
    spec = write_json(tmp_path, "s.json", {"matrix": [[1, 0, -1, 0]], "p": 2})
    out_file = tmp_path / "a.json"
    code, out, _ = run(
        capsys,
        "construct",
        "--spec",
        spec,
        "--k",
        "4",
        "--side",
        "A",
        "--out",
        str(out_file),
    )

    assert code == 0
    assert json.loads(out)["vertices"] == [2, 4, 6, 8]
    assert json.loads(out_file.read_text()) == json.loads(out)


def test_param(capsys, k4_file):
    code, out, _ = run(
        capsys, "param", "--graph", k4_file, "--what", "queue-number"
    )

    assert code == 0
    assert json.loads(out) == {"what": "queue-number", "value": 2}

    code, out, _ = run(
        capsys,
        "param",
        "--graph",
        k4_file,
        "--what",
        "queue-number",
        "--with-ordering",
    )

    assert code == 0
    assert sorted(json.loads(out)["ordering"]) == [1, 2, 3, 4]


def test_verify_writes_reports(capsys, tmp_path):
    out_file = tmp_path / "reports.jsonl"
    code, out, _ = run(
        capsys,
        "verify",
        "--suite",
        "table2",
        "--p-range",
        "1..1",
        "--out",
        str(out_file),
    )
    lines = out_file.read_text().splitlines()

    assert code == 0
    assert len(lines) == 24
    assert all("runtime_ms" not in json.loads(line) for line in lines)
    assert json.loads(out)["counts"]["fail"] == 0
    assert "reports" not in json.loads(out)


def test_verify_unknown_suite(capsys):
    code, _, _ = run(capsys, "verify", "--suite", "bogus")

    assert code == 2


def test_invalid_graph(capsys, tmp_path, row3_file):
    graph = write_json(
        tmp_path, "bad.json", {"vertices": [1], "edges": [[1, 2]]}
    )
    code, _, err = run(
        capsys, "conflict", "--graph", graph, "--spec", row3_file
    )

    assert code == 2
    assert err.startswith("error:")


def test_missing_file(capsys, row3_file):
    code, _, err = run(
        capsys, "conflict", "--graph", "/nonexistent.json", "--spec", row3_file
    )

    assert code == 2
    assert err.startswith("error:")


def test_budget_exceeded(capsys, k4_file, tmp_path):
    spec = write_json(tmp_path, "z.json", {"matrix": [[0, 0, 0, 0]], "p": 0})
    code, out, _ = run(
        capsys,
        "--budget-nodes",
        "1",
        "solve",
        "--graph",
        k4_file,
        "--spec",
        spec,
        "--what",
        "omega",
    )
    document = json.loads(out)

    assert code == 1
    assert document["lower"] >= 1
    assert "error" in document
