"""The batch tool: determinism, manifests, error JSON, every subcommand."""

import hashlib
import json
import os
import subprocess
import sys

import pytest

from simra.cli import main

SQRT2_XMAX30_ROWS = ["0,0,1,1", "1,1,1,2", "2,2,3,13", "3,5,7,74", "4,12,17,433"]


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def read(path):
    with open(path, "r", encoding="utf-8") as f:
        return f.read()


@pytest.fixture()
def sqrt2_run(tmp_path):
    run = tmp_path / "run30"
    code = main(["enumerate", "--preset", "sqrt2", "--xmax", "30",
                 "--out", str(run)])
    assert code == 0
    return run


@pytest.fixture()
def cubic_run(tmp_path):
    run = tmp_path / "cubic"
    code = main(["enumerate", "--preset", "cbrt2", "--xmax", "2000",
                 "--out", str(run)])
    assert code == 0
    return run


def test_enumerate_writes_expected_rows(sqrt2_run):
    lines = read(sqrt2_run / "minimal_points.csv").splitlines()
    assert lines[0].startswith("i,x_0,x_1,normSq")
    assert len(lines) == 6
    for line, head in zip(lines[1:], SQRT2_XMAX30_ROWS):
        assert line.startswith(head)


def test_enumerate_deterministic(tmp_path):
    outs = []
    for name in ("a", "b"):
        run = tmp_path / name
        assert main(["enumerate", "--preset", "sqrt2", "--xmax", "1000",
                     "--out", str(run), "--threads", "2"]) == 0
        outs.append((read(run / "minimal_points.csv"),
                     read(run / "manifest.json")))
    assert outs[0] == outs[1]


def test_manifest_hashes_verify(sqrt2_run):
    manifest = json.loads(read(sqrt2_run / "manifest.json"))
    assert manifest["tool"] == "simra" and manifest["entries"] == 5
    for name, digest in manifest["files"].items():
        data = read(sqrt2_run / name).encode("utf-8")
        assert digest == "sha256:" + hashlib.sha256(data).hexdigest()


def test_tampered_run_detected(sqrt2_run, capsys):
    csv_path = sqrt2_run / "minimal_points.csv"
    body = read(csv_path)
    with open(csv_path, "w", encoding="utf-8") as f:
        f.write(body.replace("12,17", "12,18"))
    code, out = run_cli(capsys, "exponents", "--run", str(sqrt2_run))
    assert code == 1
    err = json.loads(out)
    assert "edited" in err["error"]["message"]


def test_bad_run_dir_error_json(tmp_path, capsys):
    code, out = run_cli(capsys, "exponents", "--run", str(tmp_path / "nope"))
    assert code == 1
    err = json.loads(out)
    assert err["error"]["type"] == "DomainError"


def test_bad_xmax_error_json(tmp_path, capsys):
    code, out = run_cli(capsys, "enumerate", "--preset", "sqrt2",
                        "--xmax", "1/2", "--out", str(tmp_path / "r"))
    assert code == 1
    assert json.loads(out)["error"]["type"] == "DomainError"


def test_exponents_subcommand(tmp_path, capsys):
    run = tmp_path / "big"
    assert main(["enumerate", "--preset", "sqrt2", "--xmax", "100000",
                 "--out", str(run)]) == 0
    code, _ = run_cli(capsys, "exponents", "--run", str(run))
    assert code == 0
    rep = json.loads(read(run / "exponents.json"))
    assert float(rep["lambdaEst"]) == pytest.approx(1.1615, abs=0.01)
    assert float(rep["lambdaHatEst"]) == pytest.approx(0.9002, abs=0.01)
    manifest = json.loads(read(run / "manifest.json"))
    assert "exponents.json" in manifest["files"]


def test_exponents_too_few_entries(sqrt2_run, capsys):
    code, out = run_cli(capsys, "exponents", "--run", str(sqrt2_run))
    assert code == 1
    assert json.loads(out)["error"]["type"] == "TooFewPoints"


def test_construct_subcommand(cubic_run, capsys):
    code, _ = run_cli(capsys, "construct", "--run", str(cubic_run),
                      "--i0", "0")
    assert code == 0
    rep = json.loads(read(cubic_run / "family_i0_0.json"))
    assert rep["identities"]["allPass"] is True
    assert rep["i0"] == 0


def test_transfer_subcommand(cubic_run, capsys):
    code, _ = run_cli(capsys, "transfer", "--run", str(cubic_run),
                      "--alpha", "2/5", "--beta", "3/5")
    assert code == 0
    rep = json.loads(read(cubic_run / "transfer.json"))
    assert rep["constantsFitted"] == {"a": True, "b": True}
    assert rep["epsNonnegative"] is True
    assert len(rep["grid"]) >= 2


def test_extremal_subcommand(sqrt2_run, capsys):
    code, _ = run_cli(capsys, "extremal", "--run", str(sqrt2_run),
                      "--alpha", "1", "--beta", "1", "--eps", "0", "--C", "1")
    assert code == 0
    rep = json.loads(read(sqrt2_run / "extremal.json"))
    assert rep["allPass"] is True


def test_lambda_n_prints_value(capsys):
    code, out = run_cli(capsys, "lambda-n", "--n", "2")
    assert code == 0
    assert out.strip().startswith("0.618033988749")


def test_lambda_n_csv(tmp_path, capsys):
    path = tmp_path / "corners.csv"
    code, _ = run_cli(capsys, "lambda-n", "--n", "6", "--out", str(path))
    assert code == 0
    lines = read(path).splitlines()
    assert lines[0] == "n,lambda_n" and len(lines) == 6


def test_frontier_csv(tmp_path, capsys):
    path = tmp_path / "frontier.csv"
    code, _ = run_cli(capsys, "frontier", "--n", "3", "--grid", "11",
                      "--out", str(path))
    assert code == 0
    lines = read(path).splitlines()
    assert lines[0] == "lambda_hat,lambda" and len(lines) == 12


def test_schmidt_fuzz_deterministic_output(tmp_path, capsys):
    texts = []
    for name in ("f1.json", "f2.json"):
        path = tmp_path / name
        code, _ = run_cli(capsys, "schmidt-fuzz", "--dim", "4",
                          "--count", "50", "--seed", "1", "--out", str(path))
        assert code == 0
        texts.append(read(path))
    assert texts[0] == texts[1]
    rep = json.loads(texts[0])
    assert rep["dualityExact"] is True


def test_liouville_subcommand(tmp_path, capsys):
    path = tmp_path / "liou.json"
    code, _ = run_cli(capsys, "liouville", "--minpoly=-2,0,1",
                      "--interval", "1,2", "--extra", "1.7320508075688772935",
                      "--xmax", "500", "--out", str(path))
    assert code == 0
    rep = json.loads(read(path))
    assert rep["thetaDegree"] == 2
    assert rep["entries"] >= 5


def test_plot_envelope(cubic_run, capsys):
    code, _ = run_cli(capsys, "plot", "--run", str(cubic_run),
                      "--what", "envelope")
    assert code == 0
    svg = read(cubic_run / "envelope.svg")
    assert svg.startswith("<svg") and "polyline" in svg
    manifest = json.loads(read(cubic_run / "manifest.json"))
    assert "envelope.svg" in manifest["files"]


def test_plot_frontier(cubic_run, capsys):
    code, _ = run_cli(capsys, "plot", "--run", str(cubic_run),
                      "--what", "frontier")
    assert code == 0
    assert (cubic_run / "frontier.svg").exists()


def test_config_file_round_trip(tmp_path, capsys):
    cfg = tmp_path / "target.json"
    cfg.write_text(json.dumps({
        "n": 1,
        "coords": [{"type": "rational", "value": "1"},
                   {"type": "algebraic", "minpoly": [-2, 0, 1],
                    "interval": ["1", "2"]}],
        "S": {"type": "congruence", "modulus": 2, "residues": {"0": [0]}},
    }))
    run = tmp_path / "run"
    code, _ = run_cli(capsys, "enumerate", "--config", str(cfg),
                      "--xmax", "30", "--out", str(run))
    assert code == 0
    lines = read(run / "minimal_points.csv").splitlines()
    assert len(lines) == 6  # (0,1),(2,2),(2,3),(10,14),(12,17)
    assert lines[2].startswith("1,2,2,8")


def test_entry_point_subprocess():
    out = subprocess.run(
        [sys.executable, "-m", "simra.cli", "lambda-n", "--n", "3"],
        capture_output=True, text=True, timeout=120)
    assert out.returncode == 0
    assert out.stdout.strip().startswith("0.405267856")
