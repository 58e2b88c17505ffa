import csv
import io
import json
import subprocess
import sys

import pytest
from click.testing import CliRunner

from sl12fusion import cli, verify


@pytest.fixture
def run():
    runner = CliRunner()

    def invoke(*args):
        return runner.invoke(cli.main, list(args), catch_exceptions=False)

    return invoke


def test_kac_table(run):
    res = run("kac", "--lambda1", "7/3", "--lambda2", "2")
    assert res.exit_code == 0
    assert "dim: 8" in res.output
    assert "irreducible: True" in res.output
    assert res.output.rstrip().splitlines()[-1] == "PASS 2/2"


def test_kac_json(run):
    res = run("kac", "--lambda1", "0", "--lambda2", "2", "--format", "json")
    data = json.loads(res.output)
    assert data["dim"] == 8 and data["irreducible"] is False
    assert data["summary"] == "PASS 2/2"
    assert sum(t["mult"] for t in data["character"]) == 8


@pytest.mark.parametrize(
    "args,dim",
    [
        (["weyl", "--lambda1", "1", "--lambda2", "2"], 16),
        (["cv", "--lambda1", "1/2", "--xi", "2,1"], 32),
        (["demazure", "--ell", "2", "--lambda1", "0", "--lambda2", "3"], 32),
        (["truncated", "--N", "2", "--lambda1", "0", "--lambda2", "3"], 32),
        (["truncated", "--N", "3", "--lambda1", "0", "--lambda2", "2"], 16),
        (["weyl", "--lambda1", "2", "--lambda2", "2", "--z", "3,-1", "--kappa", "1/2,3/2"], 16),
    ],
)
def test_fusion_commands(run, args, dim):
    res = run(*args, "--format", "json")
    assert res.exit_code == 0, res.output
    data = json.loads(res.output)
    assert data["dim"] == dim
    assert data["summary"].startswith("PASS")


@pytest.mark.parametrize(
    "args",
    [
        ["weyl", "--lambda1", "1", "--lambda2", "2", "--z", "1,1"],
        ["weyl", "--lambda1", "1", "--lambda2", "2", "--kappa", "1,1"],
        ["cv", "--lambda1", "0", "--xi", "1,2"],
        ["kac", "--lambda1", "x", "--lambda2", "1"],
        ["kac", "--lambda1", "1", "--lambda2", "-1"],
        ["verify", "--suite", "nonsense"],
    ],
)
def test_usage_errors_exit_2(args):
    res = CliRunner().invoke(cli.main, args)
    assert res.exit_code == 2


def test_verify_csv(run):
    res = run("verify", "--suite", "algebra", "--suite", "kac", "--max-lambda2", "2", "--format", "csv")
    assert res.exit_code == 0
    rows = list(csv.DictReader(io.StringIO(res.output)))
    assert list(rows[0]) == ["suite", "case", "params", "expected", "computed", "pass"]
    assert {r["suite"] for r in rows} == {"algebra", "kac"}
    assert all(r["pass"] == "True" for r in rows)


def test_failures_exit_1(run, monkeypatch):
    def fake(names, max_l2, max_n):
        return [verify._case("demo", "broken", "", 1, 2)]

    monkeypatch.setattr(cli._verify, "run", fake)
    res = run("verify")
    assert res.exit_code == 1
    assert res.output.rstrip().endswith("FAIL 0/1")


def test_combinatorics_command(run):
    res = run("combinatorics", "--check", "decomposition", "--max-n", "5", "--format", "json")
    assert res.exit_code == 0
    assert json.loads(res.output)["summary"].startswith("PASS")


def test_output_file(run, tmp_path):
    target = tmp_path / "report.json"
    res = run("verify", "--suite", "algebra", "--format", "json", "--output", str(target))
    assert res.exit_code == 0 and res.output == ""
    assert json.loads(target.read_text())["summary"] == "PASS 2/2"
    assert [p.name for p in tmp_path.iterdir()] == ["report.json"]


def test_installed_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "sl12fusion.cli", "verify", "--suite", "algebra"],
        capture_output=True,
        text=True,
    )
    assert out.returncode == 0, out.stderr
    assert out.stdout.rstrip().endswith("PASS 2/2")
