"""Command-line interface: output formats and exit-code contract."""

import json

import numpy as np
import pytest

from hyperlat.catalog import get_module
from hyperlat.cli import main
from hyperlat.ribbon import RootSystem
from hyperlat.theta import theta_coefficients


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_default_is_list(capsys):
    code, out, _ = run(capsys, )
    assert code == 0
    assert "A 1" in out and "E21 21" in out


def test_list_subcommand(capsys):
    code, out, _ = run(capsys, "list")
    assert code == 0
    assert len(out.strip().splitlines()) == 12  # A0..A6 + D3, D6, E5, E9, E21


def test_gram_text(capsys):
    code, out, _ = run(capsys, "gram", "--module", "A", "--level", "1")
    assert code == 0
    assert "determinant: 4096" in out
    assert "modular level: 16" in out
    assert "(2, 4, 4, 4, 4, 8)" in out


def test_gram_json_round_trip(capsys):
    code, out, _ = run(capsys, "gram", "--module", "A", "--level", "1", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    rs = RootSystem(get_module("A", 1))
    assert payload["gram"] == [[int(x) for x in row] for row in rs.gram()]
    assert payload["determinant"] == "4096"
    assert payload["snf"] == ["2", "4", "4", "4", "4", "8"]


def test_gram_csv(capsys):
    code, out, _ = run(capsys, "gram", "--module", "D", "--level", "3", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    G = np.array([[int(x) for x in line.split(",")] for line in lines[:12]])
    rs = RootSystem(get_module("D", 3))
    assert np.array_equal(G, rs.gram())
    assert lines[12] == f"determinant,{3**12}"


def test_gram_alternative_basis(capsys):
    code1, out1, _ = run(capsys, "gram", "--module", "A", "--level", "2", "--basis", "B2",
                         "--format", "json")
    assert code1 == 0
    rs = RootSystem(get_module("A", 2))
    assert json.loads(out1)["gram"] == [
        [int(x) for x in row] for row in rs.gram(rs.basis("B2"))
    ]


def test_theta_text_and_json(capsys):
    code, out, _ = run(capsys, "theta", "--module", "A", "--level", "2", "--max-coeff", "4")
    assert code == 0
    expected = theta_coefficients(RootSystem(get_module("A", 2)).gram(), 4).coefficients
    assert out.strip() == ",".join(str(c) for c in expected)
    code, out, _ = run(capsys, "theta", "--module", "A", "--level", "2", "--max-coeff", "4",
                       "--format", "json")
    assert json.loads(out)["coefficients"] == [str(c) for c in expected]


def test_theta_csv(capsys):
    code, out, _ = run(capsys, "theta", "--module", "A", "--level", "1", "--max-coeff", "3",
                       "--format", "csv")
    assert code == 0
    assert out.strip().splitlines() == ["0,1", "1,0", "2,0", "3,32"]


def test_theta_zero_max_coeff(capsys):
    code, out, _ = run(capsys, "theta", "--module", "A", "--level", "1", "--max-coeff", "0")
    assert code == 0
    assert out.strip() == "1"


def test_theta_negative_max_coeff_is_usage_error(capsys):
    code, _, err = run(capsys, "theta", "--module", "A", "--level", "1", "--max-coeff", "-1")
    assert code == 2
    assert "error" in err


def test_unknown_module_is_usage_error(capsys):
    code, _, err = run(capsys, "gram", "--module", "D", "--level", "4")
    assert code == 2
    assert "error" in err
    code, _, err = run(capsys, "theta", "--module", "F", "--level", "4", "--max-coeff", "2")
    assert code == 2


def test_verify_fast_filtered(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "fast", "--module", "A", "--level", "1")
    assert code == 0
    lines = out.strip().splitlines()
    assert all(line.startswith("PASS") for line in lines[:-1])
    assert lines[-1].endswith("checks passed")


def test_verify_unknown_module(capsys):
    code, _, err = run(capsys, "verify", "--module", "A", "--level", "9")
    assert code == 2


def test_verify_module_without_level(capsys):
    code, _, err = run(capsys, "verify", "--module", "A")
    assert code == 2


def test_validate_module_ok(capsys, tmp_path):
    src = RootSystem(get_module("D", 3)).module
    path = tmp_path / "ok.txt"
    lines = [
        "name: D3copy",
        "level: 3",
        "rank: 6",
        "triality: " + " ".join(str(t) for t in src.trialities),
        "adjacency:",
    ] + [" ".join(str(int(v)) for v in row) for row in src.adjacency]
    path.write_text("\n".join(lines) + "\n")
    code, out, _ = run(capsys, "validate-module", str(path))
    assert code == 0
    assert "PASS" in out


def test_validate_module_truncated_is_usage_error(capsys, tmp_path):
    path = tmp_path / "trunc.txt"
    path.write_text("name: X\nlevel: 3\n")
    code, _, err = run(capsys, "validate-module", str(path))
    assert code == 2
    assert "error" in err


def test_validate_module_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "validate-module", str(tmp_path / "nope.txt"))
    assert code == 2


def test_validate_module_invariant_failure(capsys, tmp_path):
    # well-formed file whose adjacency breaks the triality grading
    path = tmp_path / "bad.txt"
    path.write_text(
        "name: bad\nlevel: 1\nrank: 2\ntriality: 0 0\nadjacency:\n0 1\n1 0\n"
    )
    code, out, _ = run(capsys, "validate-module", str(path))
    assert code == 1
    assert "FAIL" in out
