"""End-to-end checks of the skwlab command line tool.

Run by ctest with SKWLAB pointing at the built binary.
"""
import json
import os
import pathlib
import subprocess
import sys

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]
BIN = os.environ.get("SKWLAB", str(ROOT / "build" / "skwlab"))
sys.path.insert(0, str(ROOT / "tools"))
import validate_report  # noqa: E402


def run(*args, env=None, check=None):
    e = dict(os.environ)
    if env:
        e.update(env)
    p = subprocess.run([BIN, *map(str, args)], capture_output=True, text=True, env=e)
    if check is not None:
        assert p.returncode == check, p.stderr + p.stdout
    return p


def out_json(p):
    return json.loads(p.stdout)


@pytest.fixture
def cache_env(tmp_path):
    return {"SKWLAB_CACHE_DIR": str(tmp_path / "cache")}


def test_build_describes_the_algebra():
    d = out_json(run("build", "--family", "ptilde", "--n", "2", "--p", "3", check=0))
    assert (d["family"], d["n"], d["p"], d["k"]) == ("ptilde", 2, 3, 1)
    assert d["superdimension"] == {"even": 4, "odd": 4}
    labels = [b["label"] for b in d["basis"]]
    assert labels[:2] == ["H1", "H2"]
    assert any(r["root"] == "e1-e2" for r in d["roots"])


def test_axioms_pass():
    d = out_json(run("axioms", "--family", "q", "--n", "3", "--p", "5", check=0))
    assert d["pass"]
    assert {c["name"] for c in d["checks"]} >= {"super_jacobi", "restrictedness"}


def test_usage_errors_exit_2(tmp_path):
    assert run("build", "--family", "nope").returncode == 2
    assert run().returncode == 2
    assert run("build", "--p", "4").returncode == 2
    assert run("verify", "--suite", "AC99").returncode == 2
    bad = tmp_path / "bad.conf"
    bad.write_text("colour = blue\n")
    assert run("--config", bad, "build").returncode == 2
    assert run("verma", "--lambda", "999").returncode == 2


def test_config_sets_defaults_and_flags_override(tmp_path):
    conf = tmp_path / "skw.conf"
    conf.write_text("# defaults\np = 5\nk = 2\nseed = 7\n")
    d = out_json(run("--config", conf, "build", check=0))
    assert (d["p"], d["k"]) == (5, 2)
    d = out_json(run("--config", conf, "build", "--p", "3", check=0))
    assert (d["p"], d["k"]) == (3, 2)
    d = out_json(run("--config", conf, "bvals", "--mode", "sample", "--count", "5", check=0))
    assert d["seed"] == 7


def test_bvals_modes():
    d = out_json(run("bvals", "--family", "ptilde", "--n", "2", "--p", "3", "--mode", "exhaustive", check=0))
    assert d["count"] == 81
    assert d["max_skw"] == 6
    assert d["min_centralizer_odd"] == 2
    d = out_json(run("bvals", "--family", "q", "--n", "2", "--p", "3", "--k", "3", "--mode", "named",
                     "--chi", "strong-regss", check=0))
    assert d["bvals"]["skw_term"] == 12
    assert run("bvals", "--mode", "bogus").returncode == 2


def test_verma_checks_and_cached_replay(tmp_path):
    mats = tmp_path / "z.skw"
    d = out_json(run("verma", "--family", "ptilde", "--n", "2", "--p", "3", "--k", "2", "--chi", "regss",
                     "--check", "rep-axioms,simplicity,omega", "--emit-matrices", mats, check=0))
    assert d["dim"] == 6 and d["pass"]
    cold = d["checks"]["simplicity"]["certificate"]
    r = out_json(run("irreducible", "--cache", mats, "--seed", "42", check=0))
    assert r["replay"]
    assert r["certificate"] == cold


def test_queer_verma_uses_the_quadratic_extension():
    d = out_json(run("verma", "--family", "q", "--n", "2", "--p", "3", "--k", "3", "--chi", "strong-regss",
                     "--check", "simplicity,phi", "--graded", check=0))
    assert d["field"]["k"] == 6 and d["chi_field"]["k"] == 3
    assert d["dim"] == 12 and d["h1_lambda_dim"] == 1


def test_reducible_module_exits_1():
    # chi = 0, lambda = 0: the baby Verma has a proper submodule
    d = run("verma", "--family", "ptilde", "--n", "2", "--p", "3", "--chi", "zero", "--lambda", "0",
            "--check", "simplicity", check=1)
    assert out_json(d)["checks"]["simplicity"]["certificate"]["verdict"] == "reducible"


def test_cache_lifecycle_and_corruption(tmp_path, cache_env):
    run("verma", "--family", "ptilde", "--n", "2", "--p", "3", "--k", "2", "--store", env=cache_env, check=0)
    ls = out_json(run("cache", "ls", env=cache_env, check=0))
    assert ls["cache_dir"] == cache_env["SKWLAB_CACHE_DIR"]
    assert len(ls["entries"]) == 1
    name = ls["entries"][0]["name"]
    assert out_json(run("cache", "verify", env=cache_env, check=0))["pass"]
    path = pathlib.Path(cache_env["SKWLAB_CACHE_DIR"]) / name
    data = path.read_bytes()
    path.write_bytes(b"JUNK" + data[4:])
    assert run("cache", "verify", env=cache_env).returncode == 1
    assert run("irreducible", "--cache", path).returncode == 3
    path.write_bytes(data[: len(data) // 2])
    assert run("irreducible", "--cache", path).returncode == 3
    assert run("irreducible", "--cache", tmp_path / "missing.skw").returncode == 3
    # the flag wins over the environment
    other = tmp_path / "other"
    assert out_json(run("--cache-dir", other, "cache", "ls", env=cache_env, check=0))["cache_dir"] == str(other)
    assert out_json(run("cache", "rm", "--all", env=cache_env, check=0))["removed"] == 1
    assert run("cache", "rm", "nothing.skw", env=cache_env).returncode == 2


def test_report_determinism_modulo_timings(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run("verify", "--suite", "AC3", "--seed", "42", "--out", a, check=0)
    run("verify", "--suite", "AC3", "--seed", "42", "--out", b, check=0)
    ja, jb = json.loads(a.read_text()), json.loads(b.read_text())
    assert ja["timings"]["total_seconds"] > 0
    ja.pop("timings")
    jb.pop("timings")
    assert json.dumps(ja, sort_keys=True) == json.dumps(jb, sort_keys=True)
    assert validate_report.main([str(a)]) == 0


def test_wrong_expectation_table_fails_ac6(tmp_path):
    good = tmp_path / "good.json"
    run("verify", "--suite", "AC6", "--p", "3", "--out", good, check=0)
    rep = json.loads(good.read_text())
    assert rep["pass"] and rep["summary"]["cases"] >= 20
    victim = next(c for c in rep["cases"] if c["expected"]["graded_simple"])
    table = tmp_path / "wrong.json"
    table.write_text(json.dumps({"cases": {victim["id"]: {"graded_simple": False}}}))
    bad = tmp_path / "bad.json"
    run("verify", "--suite", "AC6", "--p", "3", "--expect", table, "--out", bad, check=1)
    rep = json.loads(bad.read_text())
    assert not rep["pass"]
    assert rep["summary"]["failures"] == [
        {"id": victim["id"], "lambda": victim["lambda"], "mismatched": ["graded_simple"]}
    ]
    unknown = tmp_path / "unknown.json"
    unknown.write_text(json.dumps({"cases": {"no-such-case": {"graded_simple": True}}}))
    assert run("verify", "--suite", "AC6", "--p", "3", "--expect", unknown).returncode == 2


def test_reports_validate_against_the_schema(tmp_path):
    for suite in ["AC1", "AC8", "AC9"]:
        out = tmp_path / f"{suite}.json"
        run("verify", "--suite", suite, "--out", out, check=0)
        assert validate_report.main([str(out)]) == 0
    broken = json.loads((tmp_path / "AC1.json").read_text())
    broken["cases"][0]["dim"] = "six"
    (tmp_path / "broken.json").write_text(json.dumps(broken))
    assert validate_report.main([str(tmp_path / "broken.json")]) == 1


def test_grid_filters():
    p = run("verify", "--suite", "AC1", "--family", "q", "--n", "2", check=0)
    assert out_json(p)["summary"]["cases"] == 2
    assert run("verify", "--suite", "AC1", "--n", "7").returncode == 2
