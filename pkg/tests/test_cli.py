"""Command-line interface: subcommands, formats, exit codes."""

import json
import subprocess
import sys

import pytest

from biregular import complete_bipartite, even_cycle, parse_bbg, write_bbg


def run_cli(*args, **kwargs):
    return subprocess.run(
        [sys.executable, "-m", "biregular", *args],
        capture_output=True,
        text=True,
        **kwargs,
    )


@pytest.fixture
def c6_file(tmp_path):
    path = tmp_path / "c6.bbg"
    path.write_text(write_bbg(even_cycle(6)))
    return str(path)


def test_gen_complete(tmp_path):
    out = tmp_path / "k33.bbg"
    res = run_cli("gen", "complete", "--m", "3", "--n", "3", "--out", str(out))
    assert res.returncode == 0
    assert parse_bbg(out.read_text()) == complete_bipartite(3, 3)


def test_gen_random_deterministic(tmp_path):
    a, b = tmp_path / "a.bbg", tmp_path / "b.bbg"
    args = ("gen", "random", "--x", "6", "--y", "4", "--a", "2", "--b", "3", "--seed", "12")
    assert run_cli(*args, "--out", str(a)).returncode == 0
    assert run_cli(*args, "--out", str(b)).returncode == 0
    assert a.read_bytes() == b.read_bytes()


def test_gen_cycle_and_heawood(tmp_path):
    from biregular import even_cycle, heawood

    out = tmp_path / "g.bbg"
    assert run_cli("gen", "cycle", "--length", "8", "--out", str(out)).returncode == 0
    assert parse_bbg(out.read_text()) == even_cycle(8)
    assert run_cli("gen", "heawood", "--out", str(out)).returncode == 0
    assert parse_bbg(out.read_text()) == heawood()


def test_gen_random_requires_params():
    res = run_cli("gen", "random", "--x", "4")
    assert res.returncode == 1


def test_gen_random_retries_exhausted_exit_3():
    res = run_cli(
        "gen", "random", "--x", "3", "--y", "3", "--a", "3", "--b", "3",
        "--seed", "0", "--max-retries", "1",
    )
    assert res.returncode == 3


def test_spectrum_json(c6_file):
    res = run_cli("spectrum", "--input", c6_file)
    assert res.returncode == 0
    payload = json.loads(res.stdout)
    assert payload["a"] == 2 and payload["b"] == 2
    assert payload["sigma"] == pytest.approx([2.0, 1.0, 1.0], abs=1e-9)
    assert payload["lambda2"] == pytest.approx(1.0, abs=1e-9)
    assert payload["gap"] == pytest.approx(1.0, abs=1e-9)


def test_certify_json(c6_file):
    res = run_cli(
        "certify", "--property", "edge-conn", "--k", "2",
        "--input", c6_file, "--json",
    )
    assert res.returncode == 0
    payload = json.loads(res.stdout)
    assert payload["verdict"] == "certified"
    assert payload["threshold"] == pytest.approx(1.5)


def test_certify_plain_text(c6_file):
    res = run_cli("certify", "--property", "ramanujan", "--input", c6_file)
    assert res.returncode == 0
    assert "certified" in res.stdout


def test_verify_json(c6_file):
    res = run_cli(
        "verify", "--property", "edge-conn", "--input", c6_file, "--json"
    )
    assert res.returncode == 0
    payload = json.loads(res.stdout)
    assert payload["value"] == 2
    assert payload["exact"] is True
    assert len(payload["witness"]["edges"]) == 2


def test_verify_other_properties(tmp_path, c6_file):
    k66 = tmp_path / "k66.bbg"
    k66.write_text(write_bbg(complete_bipartite(6, 6)))
    res = run_cli("verify", "--property", "vertex-conn", "--input", c6_file, "--json")
    assert json.loads(res.stdout)["value"] == 2
    res = run_cli("verify", "--property", "stp", "--k", "3", "--input", str(k66), "--json")
    assert json.loads(res.stdout)["value"] == 3
    res = run_cli("verify", "--property", "global-rigidity", "--input", str(k66), "--json")
    assert json.loads(res.stdout)["value"] == 1
    res = run_cli("verify", "--property", "rigid-packing", "--k", "1", "--input", str(k66), "--json")
    payload = json.loads(res.stdout)
    assert payload["value"] == 1
    assert len(payload["witness"]["subgraphs"][0]) == 21


def test_verify_ramanujan_has_no_oracle(c6_file):
    res = run_cli("verify", "--property", "ramanujan", "--input", c6_file)
    assert res.returncode == 1


def test_audit_byte_identical(tmp_path):
    out1, out2 = tmp_path / "r1.csv", tmp_path / "r2.csv"
    args = (
        "audit", "--seed", "7", "--trials", "2",
        "--grid", "6,4,2,3;8,8,4,4", "--k", "2", "--k", "3",
        "--properties", "edge-conn,stp",
    )
    assert run_cli(*args, "--out", str(out1)).returncode == 0
    assert run_cli(*args, "--out", str(out2)).returncode == 0
    assert out1.read_bytes() == out2.read_bytes()
    header = out1.read_text().splitlines()[0]
    assert header == "graph_id,a,b,x,y,lambda2,property,k,threshold,verdict,oracle,sound"


def test_audit_json_format(tmp_path):
    out = tmp_path / "r.json"
    res = run_cli(
        "audit", "--seed", "7", "--trials", "1", "--grid", "6,4,2,3",
        "--k", "2", "--properties", "edge-conn", "--format", "json",
        "--out", str(out),
    )
    assert res.returncode == 0
    records = json.loads(out.read_text())
    assert records and records[0]["property"] == "edge-conn"


def test_audit_bad_grid_exit_1():
    res = run_cli("audit", "--grid", "4,5,2,2", "--trials", "1")
    assert res.returncode == 1


def test_mixing_audit_cli(c6_file):
    res = run_cli("mixing-audit", "--input", c6_file, "--pairs", "200", "--seed", "3")
    assert res.returncode == 0
    payload = json.loads(res.stdout)
    assert payload["violations"] == 0


def test_usage_errors_exit_1(tmp_path, c6_file):
    assert run_cli("certify", "--property", "nope", "--input", c6_file).returncode == 1
    assert run_cli("spectrum", "--input", str(tmp_path / "missing.bbg")).returncode == 1
    bad = tmp_path / "bad.bbg"
    bad.write_text("bogus\n")
    assert run_cli("spectrum", "--input", str(bad)).returncode == 1
