import json
import subprocess
import sys

import pytest

from tiercert.cli import run

CUSP = """ring R = F5[x,y]/(y^2 - x^3);
ideal P = (x - 1, y - 1);
ideal Q = (x, y);
module M1 = R/P;
module K = R/Q;
"""


@pytest.fixture
def files(tmp_path):
    (tmp_path / "cusp.tf").write_text(CUSP)
    (tmp_path / "regular.tf").write_text("ring R = F5[x,y];\nmodule K = R/(x, y);\n")
    (tmp_path / "a1.tf").write_text(
        "ring A = F5[x,y,z]/(x^2 + y^2 + z^2);\nmodule M = coker [[z, x+2*y],[x-2*y, -z]];\nmodule K = A/(x, y, z);\n"
    )
    (tmp_path / "broken.tf").write_text("ring R = F5[x,y]\n")
    return tmp_path


def test_sing_regular(files, capsys):
    assert run(["sing", str(files / "regular.tf")]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "Sing R = ∅, c = 2"


def test_sing_cusp_json(files, capsys):
    assert run(["sing", str(files / "cusp.tf"), "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["codim_sing"] == 1 and data["isolated"] is True


def test_certify_and_verify(files, capsys):
    out = files / "cert.json"
    assert run(["certify", str(files / "cusp.tf"), "--module", "M1", "--out", str(out)]) == 0
    assert capsys.readouterr().out.strip() == "tier 1"
    assert run(["verify", str(out)]) == 0
    assert "accepted, tier 1" in capsys.readouterr().out


def test_verify_tampered(files, capsys):
    out = files / "cert.json"
    run(["certify", str(files / "cusp.tf"), "--module", "M1", "--out", str(out)])
    obj = json.loads(out.read_text())
    obj["claimed_tier"] = 0
    bad = files / "tampered.json"
    bad.write_text(json.dumps(obj))
    capsys.readouterr()
    assert run(["verify", str(bad)]) == 1
    assert "$: claimed tier 0" in capsys.readouterr().out


def test_verify_unparseable(files, capsys):
    bad = files / "junk.json"
    bad.write_text("{")
    assert run(["verify", str(bad)]) == 1


def test_queries(files, capsys):
    f = str(files / "cusp.tf")
    assert run(["dim", f, "--ideal", "P"]) == 0
    assert run(["height", f, "--ideal", "Q"]) == 0
    assert run(["prime", f, "--ideal", "Q"]) == 0
    assert run(["pd", f, "--module", "M1", "--prime", "P"]) == 0
    assert run(["depth", f, "--module", "K"]) == 0
    assert run(["koszul", f]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert "dim R/P = 0" in lines and "height Q = 1" in lines and "pd_P M1 = 1" in lines
    assert "depth K = 0" in lines and "ranks: 1 2 1" in lines


def test_decompose(files, capsys):
    assert run(["decompose", str(files / "a1.tf"), "--module", "K", "--n", "0"]) == 0
    out = capsys.readouterr().out
    assert "exact: True" in out and "finite_length: True" in out


def test_usage_errors(files, capsys):
    assert run(["certify", str(files / "cusp.tf"), "--module", "M2"]) == 2
    assert "did you mean 'M1'" in capsys.readouterr().err
    assert run(["sing", str(files / "broken.tf")]) == 2
    assert "line 1, column 17" in capsys.readouterr().err
    assert run(["sing", str(files / "missing.tf")]) == 2
    assert run(["frobnicate"]) == 2
    assert run(["decompose", str(files / "a1.tf"), "--module", "M", "--n", "0"]) == 2


def test_search_exhausted_exit_code(files, capsys):
    assert run(["certify", str(files / "cusp.tf"), "--module", "M1", "--max-attempts", "0"]) == 3
    assert "no regular system" in capsys.readouterr().err


def test_primality_undecided_exit_code(files, capsys):
    f = files / "hard.tf"
    f.write_text("ring R = F5[x,y,z]/(x^2+y^2+z^2);\nideal P = (x^3*y*z + y^5 + z^7 + x*y*z^3);\n")
    assert run(["prime", str(f), "--ideal", "P"]) == 3
    assert "undecided" in capsys.readouterr().out


def test_entry_point_module(files):
    r = subprocess.run([sys.executable, "-m", "tiercert", "sing", str(files / "regular.tf")], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.startswith("Sing R = ∅, c = 2")
