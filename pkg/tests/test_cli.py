import io
import json
import shutil
import subprocess
import sys

import pytest

from liecocycle.cli import run
from liecocycle.serialization import shipped_path

ALG = {k: str(shipped_path(k)) for k in ("abelian_r2", "so3", "sl2", "galilei_1d")}
HEIS = str(shipped_path("heisenberg_cocycle"))
MASS = str(shipped_path("galilei_mass_cocycle"))
TORUS = str(shipped_path("torus_rep"))
LOOP = str(shipped_path("torus_loop_word"))
TRANS = str(shipped_path("translations_fixture"))
TRANS0 = str(shipped_path("translations_c0_fixture"))


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    text = out.getvalue()
    return code, json.loads(text), text


def test_h2_abelian_and_galilei():
    code, rep, _ = call("h2", "--algebra", ALG["abelian_r2"])
    assert code == 0 and rep["result"]["dim_H2"] == 1
    code, rep, _ = call("h2", "--algebra", ALG["galilei_1d"])
    assert code == 0 and rep["result"]["dim_H2"] == 2


def test_report_envelope():
    code, rep, _ = call("h2", "--algebra", ALG["so3"], "--tol-verify", "1e-7", "--seed", "5")
    assert {"command", "inputs", "seed", "tolerances", "result"} <= set(rep)
    assert rep["command"] == "h2" and rep["seed"] == 5
    assert rep["tolerances"] == {"tol_alg": 1e-10, "tol_verify": 1e-7, "tol_rank": 1e-9, "tol_fd": 1e-5}
    assert rep["inputs"]["algebra"] == ALG["so3"]


def test_neeb_on_translations():
    code, rep, _ = call("neeb", "--fixture", TRANS)
    assert code == 0 and rep["result"]["pass"] and rep["result"]["samples"] == 200
    code, rep, _ = call("neeb", "--algebra", ALG["abelian_r2"], "--cocycle", HEIS, "--samples", "20", "--step", "1e-3")
    assert code == 0 and rep["inputs"]["step"] == 1e-3


def test_verification_failure_exit_code():
    # a tolerance far below the finite-difference error forces a failed certificate
    code, rep, _ = call("neeb", "--algebra", ALG["so3"], "--cocycle", HEIS, "--samples", "20", "--step", "0.5")
    assert code == 2 and rep["pass"] is False


def test_holonomy():
    code, rep, _ = call("holonomy", "--algebra", ALG["abelian_r2"], "--cocycle", HEIS, "--rep", TORUS, "--word", LOOP)
    assert code == 0
    assert rep["result"]["norm"] == pytest.approx(6.283185307179586, abs=1e-6)
    assert rep["result"]["descends"] is False


def test_other_commands():
    assert call("check", "--algebra", ALG["sl2"])[0] == 0
    code, rep, _ = call("extend", "--algebra", ALG["galilei_1d"], "--cocycle", MASS)
    assert code == 0 and rep["result"]["basis"] == ["H", "P", "B", "Z"]
    code, rep, _ = call("orbit", "--algebra", ALG["so3"], "--alpha", "0,0,1")
    assert code == 0 and rep["result"]["orbit_dim"] == 2
    code, rep, _ = call("affine-orbit", "--algebra", ALG["galilei_1d"], "--cocycle", MASS)
    assert code == 0 and rep["result"]["stabilizer_basis"] == [[1.0, 0.0, 0.0]]
    code, rep, _ = call("theta", "--algebra", ALG["abelian_r2"], "--cocycle", HEIS, "--word", LOOP)
    assert code == 0 and rep["result"]["theta"][1] == pytest.approx(6.283185307179586)
    code, rep, _ = call("correspond", "--algebra", ALG["galilei_1d"], "--cocycle", MASS, "--alpha", "0.1,-0.2,0.3")
    assert code == 0 and rep["result"]["pass"]
    for fx in (TRANS, TRANS0):
        code, rep, _ = call("fixture", "--fixture", fx, "--samples", "30")
        assert code == 0 and rep["result"]["hamiltonian"]["consistent"]


def test_input_errors_exit_1(tmp_path):
    code, rep, _ = call("h2", "--algebra", str(tmp_path / "missing.json"))
    assert code == 1 and rep["error"]["type"] == "InputError"
    code, rep, _ = call("neeb")
    assert code == 1 and "--algebra" in rep["error"]["message"]
    code, rep, _ = call("orbit", "--algebra", ALG["so3"], "--alpha", "1,2")
    assert code == 1
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"entries": [{"i": 0, "j": 3, "value": 1.0}]}))
    code, rep, _ = call("extend", "--algebra", ALG["so3"], "--cocycle", str(bad))
    assert code == 1 and "entries[0]" in rep["error"]["message"]


def test_non_cocycle_reports_residual(tmp_path):
    alg = tmp_path / "so3r.json"
    alg.write_text(json.dumps({
        "dim": 4,
        "brackets": [
            {"i": 0, "j": 1, "coeffs": {"2": 1}},
            {"i": 1, "j": 2, "coeffs": {"0": 1}},
            {"i": 0, "j": 2, "coeffs": {"1": -1}},
        ],
    }))
    coc = tmp_path / "c.json"
    coc.write_text(json.dumps({"entries": [{"i": 0, "j": 3, "value": 1.0}]}))
    code, rep, _ = call("extend", "--algebra", str(alg), "--cocycle", str(coc))
    assert code == 1 and rep["error"]["residual"] == 1.0
    code, rep, _ = call("check", "--algebra", str(alg), "--cocycle", str(coc))
    assert code == 2 and rep["result"]["cocycle"]["is_cocycle"] is False


def test_usage_errors_exit_1():
    with pytest.raises(SystemExit) as info:
        run(["bogus"], io.StringIO())
    assert info.value.code == 1
    with pytest.raises(SystemExit) as info:
        run(["h2", "--samples", "0"], io.StringIO())
    assert info.value.code == 1


def test_byte_identical_reruns():
    argv = ["fixture", "--fixture", TRANS, "--samples", "20", "--seed", "7"]
    assert call(*argv)[2] == call(*argv)[2]
    assert call(*argv)[2] != call(*argv[:-1], "8")[2]


def test_console_entry_point():
    exe = shutil.which("liecocycle")
    cmd = [exe] if exe else [sys.executable, "-m", "liecocycle"]
    proc = subprocess.run(cmd + ["h2", "--algebra", ALG["galilei_1d"]], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["dim_H2"] == 2
