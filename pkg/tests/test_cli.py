import json

import pytest

from typeec.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_curve_j_zero(capsys):
    code, out, _ = run(capsys, "curve", "--lambda", "0")
    assert code == 0
    assert "j_invariant: 0" in out


def test_curve_json(capsys):
    code, out, _ = run(capsys, "curve", "--lambda", "1+sqrt3", "--json")
    data = json.loads(out)
    assert code == 0 and data["j_invariant"] == "1728" and data["automorphism"] == "tau3"


def test_torsion(capsys):
    code, out, _ = run(capsys, "--json", "torsion", "--lambda", "5/3", "--n", "2")
    data = json.loads(out)
    assert code == 0 and data["count"] == 4 and ["1", "1", "2"] in data["points"]


def test_loci(capsys):
    code, out, _ = run(capsys, "--json", "loci", "--lambda", "0", "--i", "2")
    data = json.loads(out)
    assert len(data["U_tau^i"]) == 27 and data["E_tau^i"] == data["U^tau^i"]


def test_pair(capsys):
    code, out, _ = run(capsys, "--json", "pair", "--lambda", "0", "--p", "eta^8:eta^4:1", "--i", "2")
    data = json.loads(out)
    assert code == 0 and data["type"] == "E" and data["regular"]
    assert data["hilbert"] == [1, 3, 6, 10, 15] and len(data["relations"]) == 3


def test_potential(capsys):
    code, out, _ = run(capsys, "--json", "potential", "--lambda", "0", "--p", "eta^8:eta^4:1", "--i", "0")
    data = json.loads(out)
    assert data["superpotential"] and data["witness"][0] == ["1", "0", "0"]


def test_classify_counts(capsys):
    code, out, _ = run(capsys, "--json", "classify", "--lambda", "0")
    data = json.loads(out)
    assert code == 0 and data["counts"] == {"E": 2, "B": 1}


def test_classify_text(capsys):
    code, out, _ = run(capsys, "classify", "--lambda", "5/3")
    assert code == 0 and "counts: B=3" in out


@pytest.mark.parametrize("argv", [
    ["curve", "--lambda", "1"],
    ["curve", "--lambda", "1+"],
    ["curve", "--lambda", "foo"],
    ["torsion", "--lambda", "0", "--n", "5"],
    ["loci", "--lambda", "0", "--i", "7"],
    ["pair", "--lambda", "0", "--p", "1:2:3", "--i", "0"],
    ["classify", "--lambda", "-2"],
])
def test_input_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_verify_tables_deterministic_and_strict(capsys):
    code1, out1, _ = run(capsys, "--json", "verify-tables")
    code2, out2, _ = run(capsys, "--json", "verify-tables")
    assert code1 == code2 == 0 and out1 == out2
    code, out, _ = run(capsys, "verify-tables", "--strict")
    assert code == 1
    assert out.splitlines()[-1].endswith("erratum")
