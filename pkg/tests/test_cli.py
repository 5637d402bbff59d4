import json
import subprocess
import sys

import pytest

from lensknots.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_alexander_trefoil(capsys):
    code, out, _ = run(capsys, "alexander", "--braid", "1 1 1")
    assert code == 0
    assert out.splitlines() == ["Δ = t^-1 - 1 + t", "∇ = z^2 + 1"]


def test_alexander_json(capsys):
    code, out, _ = run(capsys, "alexander", "--braid", "1 1", "--json")
    data = json.loads(out)
    assert data["alexander"] == "t^-1/2 - t^1/2"
    assert data["alexander_coeffs"] == {"-1": 1, "1": -1}
    assert data["conway"] == "z"
    assert data["components"] == 2


def test_alexander_batch(tmp_path, capsys):
    f = tmp_path / "words.txt"
    f.write_text("1 1 1\n# comment\n\nn=3: 1 -2 1 -2\nn=3:\n")
    code, out, _ = run(capsys, "alexander", "--input", str(f))
    assert code == 0
    assert out.splitlines() == [
        "[n=2: 1 1 1]", "Δ = t^-1 - 1 + t", "∇ = z^2 + 1",
        "[n=3: 1 -2 1 -2]", "Δ = -t^-1 + 3 - t", "∇ = -z^2 + 1",
        "[n=3: ]", "Δ = 0", "∇ = 0",
    ]
    code, out, _ = run(capsys, "alexander", "--input", str(f), "--json")
    assert [r["alexander"] for r in json.loads(out)] == ["t^-1 - 1 + t", "-t^-1 + 3 - t", "0"]


def test_cache_file(tmp_path, capsys, monkeypatch):
    cache = tmp_path / "cache.json"
    code, _, _ = run(capsys, "alexander", "--braid", "1 2 1 2 1", "--cache", str(cache))
    assert code == 0
    assert "n=3: 1 2 1 2 1" in json.loads(cache.read_text())
    cache2 = tmp_path / "env.json"
    monkeypatch.setenv("LENSKNOTS_CACHE", str(cache2))
    run(capsys, "torus", "2", "3")
    assert cache2.exists()


def test_lens_compare(capsys):
    code, out, _ = run(capsys, "lens", "compare", "7", "1", "7", "2")
    assert code == 0
    assert "homeomorphic: no" in out
    assert "homotopy-equivalent: yes" in out
    code, out, _ = run(capsys, "lens", "compare", "7", "2", "7", "4", "--json")
    data = json.loads(out)
    assert data["homeomorphic"] and data["normal_forms"] == [[7, 2], [7, 2]]


def test_torus_lift_linking_obstruct(capsys):
    code, out, _ = run(capsys, "torus", "3", "5")
    assert code == 0 and "cross-check: ok" in out
    code, out, _ = run(capsys, "lift", "8", "1", "3", "--json")
    assert json.loads(out)["torus"] == [3, 5]
    code, out, _ = run(capsys, "linking", "7", "2", "3")
    assert out.strip().endswith("= 4/7")
    code, out, _ = run(capsys, "linking", "5", "1", "1", "2", "--json")
    assert json.loads(out)["linking"] == "2/5"
    code, out, _ = run(capsys, "obstruct", "5", "1", "2", "--json")
    data = json.loads(out)
    assert data["global_conclusion"] == "EXCLUDED" and data["linking"] == "4/5"


def test_lemma4(capsys):
    code, out, _ = run(capsys, "lemma4", "--pattern", "1", "--r", "3", "--q", "1")
    assert code == 0 and "congruent: yes" in out
    code, out, _ = run(capsys, "lemma4", "--pattern", "1 2", "--r", "2", "--pos", "0", "--json", "--twist-sign", "1")
    assert json.loads(out)["congruent"] is True


@pytest.mark.parametrize("argv", [
    ["torus", "2", "4"],
    ["lift", "6", "1", "2"],
    ["lens", "compare", "6", "2", "6", "1"],
    ["alexander", "--braid", "1 x"],
    ["alexander"],
    ["lemma4", "--pattern", "1", "--r", "4"],
    ["lemma4", "--pattern", "1", "--r", "3", "--pos", "3"],
    ["obstruct", "5", "1", "0"],
])
def test_invalid_input_exit_1(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1
    assert "error" in err


@pytest.mark.parametrize("argv", [["nonsense"], ["torus", "2"], ["linking", "7", "x", "1"]])
def test_usage_errors_exit_1(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 1


def test_cross_check_failure_exit_2(capsys, monkeypatch):
    from lensknots import cli

    monkeypatch.setattr(cli, "torus_alexander_closed", lambda tp: cli.br.ONE)
    code, _, err = run(capsys, "torus", "2", "3")
    assert code == 2 and "cross-check" in err


def test_verify_small(capsys):
    argv = ["verify", "--pmax", "12", "--specs", "5", "--words", "20", "--max-ab", "15"]
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out.splitlines()[-1] == "0 violations"
    code, out2, _ = run(capsys, *argv)
    assert out == out2
    code, out, _ = run(capsys, *argv, "--json")
    assert json.loads(out)["violations"] == 0


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "lensknots", "lens", "compare", "7", "1", "7", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "homeomorphic: no" in proc.stdout
    proc = subprocess.run([sys.executable, "-m", "lensknots", "torus", "2"], capture_output=True, text=True)
    assert proc.returncode == 1
