"""CLI: subcommand plumbing, exit codes, serialized IO round-trips."""

import json

import numpy as np
import pytest

from gaborlab.cli import run_cli
from gaborlab.serialize import (
    dump_json,
    load_json,
    signal_from_dict,
    signal_to_dict,
)
from gaborlab.signals import periodized_gaussian, random_signal


@pytest.fixture
def files(tmp_path):
    rng = np.random.default_rng(0)
    w = tmp_path / "w.json"
    f = tmp_path / "f.json"
    dump_json(signal_to_dict(periodized_gaussian(16)), w)
    dump_json(signal_to_dict(random_signal(16, 1, rng)), f)
    return tmp_path, str(w), str(f)


def test_help_exits_zero(capsys):
    assert run_cli(["--help"]) == 0
    assert "gaborlab" in capsys.readouterr().out


def test_unknown_subcommand(capsys):
    assert run_cli(["frobnicate"]) == 1


def test_dgt_roundtrip(files):
    tmp, w, f = files
    out = str(tmp / "v.json")
    assert run_cli(["dgt", "--input", f, "--window", w, "--out", out]) == 0
    payload = load_json(out)
    assert payload["n"] == 16 and payload["shape"] == [16, 16]


def test_malformed_json_exits_one(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run_cli(["schatten", "--matrix", str(bad), "--p", "1.5"]) == 1
    assert "error" in capsys.readouterr().err


def test_framebounds_and_duals(files, capsys):
    tmp, w, f = files
    assert run_cli(["framebounds", "--window", w, "--a", "2", "--b", "2",
                    "--n", "16"]) == 0
    bounds = json.loads(capsys.readouterr().out)
    assert 0 < bounds["A"] <= bounds["B"]

    dual = str(tmp / "dual.json")
    assert run_cli(["dualwindow", "--window", w, "--a", "2", "--b", "2",
                    "--out", dual]) == 0
    assert signal_from_dict(load_json(dual)).n == 16

    tight = str(tmp / "tight.json")
    assert run_cli(["tightwindow", "--window", w, "--a", "2", "--b", "2",
                    "--out", tight]) == 0


def test_framebounds_size_mismatch(files, capsys):
    _, w, _ = files
    assert run_cli(["framebounds", "--window", w, "--a", "2", "--b", "2",
                    "--n", "8"]) == 1


def test_mixednorm_subcommand(tmp_path, capsys):
    rng = np.random.default_rng(1)
    v = rng.standard_normal((4, 4, 4, 4))
    path = tmp_path / "arr.json"
    dump_json({"shape": [4, 4, 4, 4], "re": v.ravel().tolist()}, path)
    assert run_cli(["mixednorm", "--array", str(path), "--perm", "1,3,2,4",
                    "--exps", "2,2,1,inf"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["mixed_norm"] > 0


def test_schatten_subcommand(tmp_path, capsys):
    rng = np.random.default_rng(2)
    m = rng.standard_normal((6, 6))
    path = tmp_path / "A.json"
    dump_json({"n": 6, "re": m.tolist()}, path)
    assert run_cli(["schatten", "--matrix", str(path), "--p", "1.5",
                    "--spectrum"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert len(out["singular_values"]) == 6


def test_verify_row_count_and_determinism(tmp_path, capsys):
    out1, out2 = str(tmp_path / "r1.csv"), str(tmp_path / "r2.csv")
    args = ["verify", "--theorem", "T3.1", "--n", "8,12", "--p", "1.5",
            "--trials", "4", "--seed", "42"]
    assert run_cli(args + ["--out", out1]) == 0
    assert run_cli(args + ["--out", out2]) == 0
    body1 = open(out1).read()
    assert body1 == open(out2).read()
    assert len(body1.strip().split("\n")) == 1 + 4 * 2  # header + trials * |n|
    capsys.readouterr()


def test_verify_bad_perm_exits_one(capsys):
    assert run_cli(["verify", "--theorem", "T3.1", "--n", "8",
                    "--perm", "1,2,3,4"]) == 1


def test_verify_config_file(tmp_path, capsys):
    cfg = tmp_path / "exp.json"
    dump_json({"theorem_id": "T3.1", "n_values": [8], "trials": 2,
               "seed": 9, "p": 1.5}, cfg)
    assert run_cli(["verify", "--config", str(cfg)]) == 0
    out = capsys.readouterr().out
    assert out.count("T3.1,8,") == 2


def test_sharpness_subcommand(tmp_path, capsys):
    assert run_cli(["sharpness", "--theorem", "SHARP-T4.3", "--n", "8,16",
                    "--p", "2", "--trials", "1", "--seed", "1"]) == 0
    summary = json.loads(capsys.readouterr().out.strip().split("\n")[-1])
    assert summary["growth_factor"] == pytest.approx(2.0, rel=1e-10)


def test_sharpness_control_arm(capsys):
    assert run_cli(["sharpness", "--theorem", "SHARP-T4.3", "--n", "8,16",
                    "--p", "2", "--trials", "1", "--seed", "1",
                    "--control"]) == 0
    summary = json.loads(capsys.readouterr().out.strip().split("\n")[-1])
    assert summary["growth_factor"] <= 1.5


def test_multbound_subcommand(capsys):
    assert run_cli(["multbound", "--n", "8", "--trials", "2", "--seed", "3"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("theorem,n,trial")
