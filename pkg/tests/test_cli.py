import io
import json
import subprocess
import sys

import pytest

from qspecdim.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_dump_roots_exact_strings():
    code, text = run("dump-roots", "--type", "E6")
    doc = json.loads(text)
    assert code == 0
    assert doc["rank"] == 6 and len(doc["positive_roots"]) == 36
    assert "1/2" in doc["rho"] or any("/" in c for c in doc["simple_roots"][0])


def test_weights_command():
    code, text = run("weights", "--type", "A", "--rank", "2", "--labels", "1,1")
    doc = json.loads(text)
    assert code == 0 and doc["dim"] == 8


def test_qdim_command():
    _, text = run("qdim", "--type", "A1", "--labels", "2", "--q", "0.5")
    doc = json.loads(text)
    assert doc["qdim"].startswith("5.25")
    assert doc["exponent"] == "2"


def test_chi_command_and_zero_mode():
    _, text = run("chi", "--type", "A1", "--lambda0", "fundamental", "--t", "1", "--labels", "1")
    assert json.loads(text)["chi"].startswith("13.125")
    _, text = run("chi", "--type", "A1", "--lambda0", "fundamental", "--t", "1", "--labels", "0")
    assert json.loads(text)["zero_mode"] is True


def test_chi_explicit_lambda0_labels():
    code, text = run("chi", "--type", "A2", "--lambda0", "labels=1,1", "--t", "1/4", "--labels", "2,0")
    doc = json.loads(text)
    assert code == 0 and doc["lambda0"] == [1, 1] and doc["t"] == "1/4"


@pytest.mark.parametrize(
    "argv",
    [
        ("tables", "--type", "E6"),
        ("tables", "--type", "A", "--rank", "1"),
        ("tables", "--space", "EVII", "--lambda0", "adjoint"),
        ("tables", "--all"),
    ],
)
def test_tables_exit_zero_on_match(argv):
    code, text = run(*argv)
    assert code == 0
    assert json.loads(text)["status"] == "MATCH"


def test_tables_values():
    _, text = run("tables", "--type", "E6")
    row = json.loads(text)["reports"][0]["rows"][0]
    assert row["computed"] == ["16", "30", "42", "30", "16", "22"]
    _, text = run("tables", "--type", "A", "--rank", "1")
    rows = json.loads(text)["reports"][0]["rows"]
    assert [r["computed"] for r in rows] == [["1"], ["1/2"], ["1"]]


def test_tables_exit_nonzero_on_mismatch(monkeypatch):
    from qspecdim import closed_forms

    monkeypatch.setattr(closed_forms, "scal_g", lambda key, r: [0] * r)
    code, text = run("tables", "--type", "A", "--rank", "2")
    assert code == 1 and json.loads(text)["status"] == "MISMATCH"


def test_spaces_list_and_coeffs():
    _, text = run("spaces", "list", "--format", "csv")
    lines = text.split("\n")
    assert lines[0] == "space,group,n,d"
    assert any(line.startswith("EVII,E7,3,54") for line in lines)
    _, text = run("spaces", "coeffs", "--space", "EIII", "--lambda0", "adjoint")
    doc = json.loads(text)
    assert doc["a_S"] == ["32", "22"] and doc["b_S"] == ["2", "2"] and doc["d"] == 32


def test_specdim_reports_zero_mode_exclusion():
    _, text = run("specdim", "--product", "A1,A1", "--lambda0", "fundamental")
    doc = json.loads(text)
    assert doc["p"] == "4"
    assert "excluded" in doc["zero_modes"]


def test_zeta_csv_schema():
    _, text = run("zeta", "--type", "A1", "--lambda0", "fundamental", "--sweep", "3:4:1/2", "--N", "10", "--format", "csv")
    assert "\r" not in text
    lines = text.rstrip("\n").split("\n")
    assert lines[0] == "s,zeta_N,tail_bound"
    assert [line.split(",")[0] for line in lines[1:]] == ["3", "7/2", "4"]


def test_abscissa_command():
    code, text = run("abscissa", "--space", "AIII(2,1)", "--t", "1/4", "--bracket", "1,8")
    doc = json.loads(text)
    assert code == 0 and doc["exact"] == "4" and doc["status"] == "MATCH"


def test_weyl_law_default_t_quarter():
    code, text = run("weyl-law")
    doc = json.loads(text)
    assert code == 0 and doc["t"] == "1/4"
    assert all(entry["p"] == str(entry["d"]) for entry in doc["spaces"])


def test_weyl_law_half():
    _, text = run("weyl-law", "--t", "1/2")
    for entry in json.loads(text)["spaces"]:
        assert entry["p"] == (str(entry["d"] // 2) if entry["d"] % 2 == 0 else f"{entry['d']}/2")


def test_weyl_law_numeric():
    code, text = run("weyl-law", "--space", "AIII(2,1)", "--numeric")
    entry = json.loads(text)["spaces"][0]
    assert code == 0 and abs(float(entry["numeric"]) - 4) < 1e-3


@pytest.mark.parametrize(
    "argv",
    [
        ("chi", "--type", "A1", "--t", "0", "--labels", "1"),
        ("chi", "--type", "A1", "--t", "abc", "--labels", "1"),
        ("qdim", "--type", "A1", "--labels", "1", "--q", "1.2"),
        ("qdim", "--type", "A2", "--labels", "1"),
        ("specdim", "--space", "AIII(1,2)"),
        ("chi", "--type", "A1", "--lambda0", "sideways", "--labels", "1"),
    ],
)
def test_bad_input_exit_two(argv):
    code, _ = run(*argv)
    assert code == 2


def test_output_is_byte_identical_across_processes():
    argv = [sys.executable, "-m", "qspecdim", "zeta", "--space", "CI(2)", "--t", "1/4", "--s", "7", "--N", "8"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and b"zeta_N" in a
