"""CLI surface: commands, formats, exit codes, determinism."""

import io
import json
import subprocess
import sys

from spinsym.cli import main


def run_cli(*argv):
    out = io.StringIO()
    err = io.StringIO()
    stdout, stderr = sys.stdout, sys.stderr
    sys.stdout, sys.stderr = out, err
    try:
        code = main(list(argv))
    finally:
        sys.stdout, sys.stderr = stdout, stderr
    return code, out.getvalue(), err.getvalue()


def test_list_text():
    code, out, _ = run_cli("list")
    assert code == 0
    assert "sphere-even(2)" in out
    assert len(out.strip().splitlines()) >= 10


def test_list_json():
    code, out, _ = run_cli("--format", "json", "list")
    assert code == 0
    rows = json.loads(out)
    names = {r["name"] for r in rows}
    assert "sphere-even(2)" in names
    assert all(r["spin"] for r in rows)


def test_eigenvalue_text():
    code, out, _ = run_cli("eigenvalue", "sphere-even(2)")
    assert code == 0
    assert "2/3" in out
    assert "lemma1       : ok" in out


def test_eigenvalue_json_exact():
    code, out, _ = run_cli("--format", "json", "eigenvalue", "sphere-even(1)")
    assert code == 0
    doc = json.loads(out)
    assert doc["lambda1_squared"] == {"num": 1, "den": 2}
    assert doc["eq2_value"] == {"num": 1, "den": 2}
    assert doc["n"] == 2
    assert doc["lemma1_ok"] is True
    assert len(doc["components"]) == 2


def test_eigenvalue_unknown_space():
    code, _, err = run_cli("eigenvalue", "no-such-space")
    assert code == 2
    assert "no-such-space" in err


def test_pair_file_not_spin(tmp_path):
    doc = {"g": {"family": "A", "rank": 2}, "k_simple_roots": [[1, -1, 0]]}
    path = tmp_path / "cp2.json"
    path.write_text(json.dumps(doc))
    code, _, err = run_cli("eigenvalue", "--pair-file", str(path))
    assert code == 2
    assert "NOT_SPIN" in err
    assert "3/2" in err  # the failing coroot pairing is named


def test_pair_file_invalid(tmp_path):
    doc = {"g": {"family": "B", "rank": 2}, "k_simple_roots": [[1, 0], [0, 1]]}
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, _, err = run_cli("eigenvalue", "--pair-file", str(path))
    assert code == 2
    assert "NOT_CLOSED" in err


def test_pair_file_matches_catalog(tmp_path):
    doc = {"g": {"family": "B", "rank": 2}, "k_simple_roots": [[1, -1], [1, 1]]}
    path = tmp_path / "s4.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run_cli("--format", "json", "eigenvalue", "--pair-file", str(path))
    assert code == 0
    assert json.loads(out)["lambda1_squared"] == {"num": 2, "den": 3}


def test_spectrum_command():
    code, out, _ = run_cli("--format", "json", "spectrum", "sphere-even(1)", "--cutoff", "3")
    assert code == 0
    doc = json.loads(out)
    eigs = [(l["eigenvalue"]["num"], l["eigenvalue"]["den"]) for l in doc["spectrum"]]
    assert eigs == [(1, 2), (2, 1)]
    mults = [l["multiplicity"] for l in doc["spectrum"]]
    assert mults == [4, 8]


def test_spectrum_rational_cutoff():
    code, out, _ = run_cli("--format", "json", "spectrum", "sphere-even(1)", "--cutoff", "1/2")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["spectrum"]) == 1


def test_verify_single():
    code, out, _ = run_cli("verify", "sphere-even(2)")
    assert code == 0
    assert "[PASS]" in out and "[FAIL]" not in out


def test_verify_with_spectrum():
    code, out, _ = run_cli("verify", "sphere-even(1)", "--spectrum-cutoff", "3")
    assert code == 0
    assert "spectrum-minimality" in out


def test_verify_json():
    code, out, _ = run_cli("--format", "json", "verify", "sphere-even(1)")
    assert code == 0
    doc = json.loads(out)
    assert doc[0]["space"] == "sphere-even(1)"
    assert all(c["status"] in ("pass", "skip") for c in doc[0]["checks"])


def test_output_deterministic():
    one = run_cli("--format", "json", "eigenvalue", "AIII(2,2)")
    two = run_cli("--format", "json", "eigenvalue", "AIII(2,2)")
    assert one == two
    l1 = run_cli("list")
    l2 = run_cli("list")
    assert l1 == l2


def test_malformed_pair_file_shapes(tmp_path):
    for doc in (
        {"g": {"family": "B", "rank": 2}, "k_simple_roots": 7},
        {"g": {"family": "B"}, "k_simple_roots": []},
        {"g": {"family": "B", "rank": 2}, "k_simple_roots": [7]},
        [1, 2, 3],
    ):
        path = tmp_path / "doc.json"
        path.write_text(json.dumps(doc))
        code, _, err = run_cli("eigenvalue", "--pair-file", str(path))
        assert code == 2, doc
        assert err


def test_verify_corrupted_pair_file(tmp_path):
    doc = {"g": {"family": "B", "rank": 2}, "k_simple_roots": [[1, 0], [0, 1]]}
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, _, err = run_cli("verify", "--pair-file", str(path))
    assert code == 2
    assert "NOT_CLOSED" in err


def test_cap_exceeded_maps_to_exit_3(monkeypatch):
    from spinsym import CapExceededError
    from spinsym import cli as cli_mod

    def boom(*args, **kwargs):
        raise CapExceededError("candidate too large")

    monkeypatch.setattr(cli_mod, "spectrum_below", boom)
    code, _, err = run_cli("spectrum", "sphere-even(1)", "--cutoff", "3")
    assert code == 3
    assert "CAP_EXCEEDED" in err


def test_console_script_entrypoint():
    proc = subprocess.run(
        [sys.executable, "-m", "spinsym.cli", "eigenvalue", "sphere-even(1)"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "1/2" in proc.stdout
