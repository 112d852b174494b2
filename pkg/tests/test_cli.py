import json
import subprocess
import sys

import numpy as np
import pytest

from octolin import cli
from octolin.catalog import ISO2_SWAP, ISO3, UNITARY_NON_ISOMETRY
from octolin.frames import Frame
from octolin.omodule import OVector
from octolin.paralinear import OMatrix


def write(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return str(path)


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_identity(tmp_path, capsys):
    path = write(tmp_path, "id.json", OMatrix.identity(2).to_json())
    code, out, _ = run(capsys, "check", "--matrix", path, "--format", "json")
    assert code == 0
    assert json.loads(out)["is_isometry"] is True


def test_check_counterexample(tmp_path, capsys):
    path = write(tmp_path, "b.json", UNITARY_NON_ISOMETRY.to_json())
    code, out, _ = run(capsys, "check", "--matrix", path, "--format", "json")
    report = json.loads(out)
    assert code == 0 and report["is_isometry"] is False
    assert report["gram_TTstar_residual"] <= 1e-9 and report["gram_TstarT_residual"] <= 1e-9


def test_check_text_output(tmp_path, capsys):
    path = write(tmp_path, "b.json", UNITARY_NON_ISOMETRY.to_json())
    code, out, _ = run(capsys, "check", "--matrix", path)
    assert code == 0
    assert "is_isometry                false" in out


def test_malformed_json_exits_2(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("[[[1, 0")
    code, _, err = run(capsys, "check", "--matrix", str(path))
    assert code == 2 and "invalid JSON" in err
    code, _, err = run(capsys, "check", "--matrix", str(tmp_path / "missing.json"))
    assert code == 2 and "cannot read" in err
    code, _, _ = run(capsys, "check", "--matrix", write(tmp_path, "s.json", [[1, 2, 3]]))
    assert code == 2


def test_dimension_error_exits_3(tmp_path, capsys):
    rect = OMatrix(np.zeros((2, 3, 8)))
    code, _, err = run(capsys, "check", "--matrix", write(tmp_path, "r.json", rect.to_json()))
    assert code == 3 and "error" in err
    code, _, _ = run(capsys, "stiefel", "--vector", write(tmp_path, "y.json", [[1] + [0] * 7] * 2))
    assert code == 3


def test_basis_standard(tmp_path, capsys):
    path = write(tmp_path, "f.json", Frame.standard(3).to_json())
    code, out, _ = run(capsys, "basis", "--frame", path, "--format", "json")
    r = json.loads(out)
    assert code == 0 and r["orthonormal"] and r["associative"] and r["weak_associative"]


def test_stiefel_real_unit(tmp_path, capsys):
    path = write(tmp_path, "y.json", OVector.from_real([0.6, 0.8, 0]).to_json())
    code, out, _ = run(capsys, "stiefel", "--vector", path, "--format", "json")
    r = json.loads(out)
    assert code == 0 and r["dim_OOy"] == 8 and r["fiber_dim"] == 16


def test_decompose(tmp_path, capsys):
    code, out, _ = run(capsys, "decompose", "--matrix", write(tmp_path, "s.json", ISO2_SWAP.to_json()))
    assert code == 0 and out.startswith("p") and "e1" in out
    code, out, _ = run(
        capsys, "decompose", "--matrix", write(tmp_path, "s.json", ISO2_SWAP.to_json()), "--format", "json"
    )
    d = json.loads(out)
    assert set(d) == {"p", "J", "U", "residual"} and d["residual"] <= 1e-9
    code, _, _ = run(capsys, "decompose", "--matrix", write(tmp_path, "b.json", UNITARY_NON_ISOMETRY.to_json()))
    assert code == 4
    code, _, _ = run(capsys, "decompose", "--matrix", write(tmp_path, "i3.json", ISO3.to_json()))
    assert code == 4


def test_mult_table(capsys):
    code, out, _ = run(capsys, "mult-table")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 9
    row = lines[2].split()
    assert row[0] == "e1" and row[3] == "+e3"
    code, out, _ = run(capsys, "mult-table", "--format", "json")
    assert json.loads(out)[1][2] == [1, 3]


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--trials", "0")
    assert code == 0 and out.strip().endswith("properties passed")
    code, out, _ = run(capsys, "verify", "--trials", "0", "--inject-fault")
    assert code != 0 and "FAIL" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--trials", "1", "--format", "json", "--seed", "5")
    d = json.loads(out)
    assert code == 0 and d["seed"] == 5 and d["passed"]
    assert all("max_residual" in p for p in d["properties"])


def test_seed_from_environment(monkeypatch):
    monkeypatch.setenv("OCTOLIN_SEED", "7")
    assert cli.config_from_args(cli.build_parser().parse_args(["mult-table"])).seed == 7
    cfg = cli.config_from_args(cli.build_parser().parse_args(["mult-table", "--seed", "3"]))
    assert cfg.seed == 3
    monkeypatch.delenv("OCTOLIN_SEED")
    assert cli.config_from_args(cli.build_parser().parse_args(["mult-table"])).seed == 42


def test_tolerance_flags():
    ns = cli.build_parser().parse_args(["check", "--matrix", "m", "--tol-eq", "1e-6", "--tol-rank", "1e-4"])
    cfg = cli.config_from_args(ns)
    assert cfg.tol.eq == 1e-6 and cfg.tol.rank == 1e-4 and cfg.tol.gram == 1e-8


def test_output_is_byte_identical(tmp_path):
    path = write(tmp_path, "iso3.json", ISO3.to_json())
    cmd = [sys.executable, "-m", "octolin", "check", "--matrix", path, "--seed", "11"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and b"is_isometry" in first


def test_missing_subcommand_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main([])
    assert exc.value.code == 2
