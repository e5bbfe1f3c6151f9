import io
import json
import math
import os
from pathlib import Path

import jsonschema
import pytest

from coxsupport.cli import run

ROOT = Path(__file__).resolve().parents[1]
GOLDEN = Path(__file__).resolve().parent / "golden"
SCHEMA = json.loads((ROOT / "docs" / "schema.json").read_text())

# one command per module
GOLDEN_CASES = {
    "degrees_e8": ["degrees", "E8"],
    "roots_b2": ["roots", "B2"],
    "poincare_b3": ["poincare", "B3", "--two", "--verify"],
    "support_b2": ["support", "B2", "--c", "1/2", "--verify"],
    "finite_dim_h4": ["finite-dim", "H4"],
    "sigma_f4": ["sigma", "F4", "--c1", "1/2", "--c2", "1/2", "--verify"],
    "mm_a1": ["mm", "A1", "--c", "-1/2", "--numeric"],
    "trig_b2": ["trig", "B2", "--c", "1/2"],
    "elliptic_h3": ["elliptic", "H3", "--verify"],
    "oracle_b2": ["oracle", "quotient", "B2", "--c", "1/2", "--dmax", "8"],
}


def call(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def envelope(argv):
    code, out, err = call(argv + ["--json"])
    assert code == 0, err
    env = json.loads(out)
    jsonschema.validate(env, SCHEMA)
    return env


def _close(a, b, path="$"):
    if isinstance(a, float) or isinstance(b, float):
        assert isinstance(a, (int, float)) and isinstance(b, (int, float)), path
        assert math.isclose(a, b, rel_tol=1e-9, abs_tol=1e-9), path
    elif isinstance(a, dict):
        assert isinstance(b, dict) and sorted(a) == sorted(b), path
        for k in a:
            _close(a[k], b[k], f"{path}.{k}")
    elif isinstance(a, list):
        assert isinstance(b, list) and len(a) == len(b), path
        for i, (x, y) in enumerate(zip(a, b)):
            _close(x, y, f"{path}[{i}]")
    else:
        assert a == b, f"{path}: {a!r} != {b!r}"


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_golden(name):
    env = envelope(GOLDEN_CASES[name])
    path = GOLDEN / f"{name}.json"
    if os.environ.get("COXSUPPORT_REGEN_GOLDEN"):
        path.write_text(json.dumps(env, indent=2, sort_keys=True) + "\n")
    _close(env, json.loads(path.read_text()))


def test_support_example():
    env = envelope(["support", "B2", "--c", "1/2"])
    assert env["result"]["finite_dim"] is True
    assert env["result"]["c"] == "1/2"


def test_sigma_example():
    r = envelope(["sigma", "F4", "--c1", "1/2", "--c2", "1/2"])["result"]
    assert r["member"] is True and r["witness"] == "2a"


def test_mm_example():
    r = envelope(["mm", "A1", "--c", "-1/2", "--numeric"])["result"]
    assert r["exact"] == "Γ(2)/Γ(3/2)"
    assert r["numeric"] == pytest.approx(1.128379167, abs=1e-8)
    r = envelope(["mm", "B2", "--c", "1/2"])["result"]
    assert r["value"] == "inf"


def test_mm_monte_carlo():
    r = envelope(["mm", "I2:5", "--c", "-1/4", "--numeric", "--method", "mc"])["result"]
    assert r["numeric"] == pytest.approx(r["value"], rel=1e-3)


def test_trig_example():
    rows = envelope(["trig", "B2", "--c", "1/2"])["result"]["strata"]
    inside = {r["type"]: r["torus"] for r in rows if r["in_support"]}
    assert inside == {"B2[12]": ["1", "1"], "A1[1]xA1[1]": ["-1", "-1"]}
    r = envelope(["trig", "B2", "--c", "1/2", "--point", "1/2,1/2"])["result"]
    assert r["stabilizer"] == "A1[1]xA1[1]" and r["in_support"]


@pytest.mark.parametrize("argv", [
    ["degrees", "A1xA2"],
    ["roots", "H3", "--list"],
    ["poincare", "A1xB2"],
    ["support", "A1xA2", "--c", "1/2"],
    ["support", "G2", "--c1", "1/3", "--c2", "1/2", "--verify"],
    ["finite-dim", "I2:8", "--c", "3/8"],
    ["finite-dim", "B3", "--c1", "1/3", "--c2", "1/6"],
    ["sigma", "B3"],
    ["mm", "G2", "--c1", "-1/2", "--c2", "-1/3", "--numeric"],
    ["elliptic", "F4", "--m", "8"],
    ["oracle", "relations", "A2", "--c", "1/3", "--dmax", "3"],
    ["oracle", "gram", "I2:5", "--c", "1/5", "--dmax", "4"],
])
def test_envelopes_validate(argv):
    env = envelope(argv)
    assert env["argv"] == argv + ["--json"]


def test_human_output():
    code, out, _ = call(["support", "B2", "--c", "1/2"])
    assert code == 0
    assert "finite-dim: true" in out and "B2[12]" in out


def test_plot(tmp_path):
    target = tmp_path / "f4.svg"
    code, _, err = call(["sigma", "F4", "--c1", "1/2", "--c2", "1/2", "--plot", str(target), "--range", "0:2"])
    assert code == 0, err
    svg = target.read_text()
    assert svg.startswith("<?xml") and 'version="1.1"' in svg
    assert svg.count("<line") > 0 and svg.count("<circle") > 1


@pytest.mark.parametrize("argv", [
    ["degrees", "Z9"],
    ["support", "B2", "--c", "0.5"],
    ["support", "B2", "--c", "1/0"],
    ["support", "B2"],
    ["support", "A3", "--c1", "1/2", "--c2", "1/3"],
    ["support", "B2", "--c1", "1/2"],
    ["sigma", "B2", "--range", "3:1", "--plot", "x.svg"],
    ["elliptic", "A2", "--m", "1"],
    ["trig", "B2", "--c", "1/2", "--point", "1/2"],
    ["frobnicate", "A2"],
])
def test_usage_errors(argv):
    code, out, err = call(argv)
    assert code == 2 and out == "" and err.startswith("error:")


@pytest.mark.parametrize("argv", [
    ["elliptic", "E8", "--m", "30", "--verify"],
    ["poincare", "E7", "--verify"],
    ["trig", "H3", "--c", "1/2"],
    ["trig", "B2", "--c", "-1/2"],
    ["oracle", "gram", "A4", "--c", "1/5"],
    ["mm", "A3", "--c", "-1/2", "--numeric"],
])
def test_scope_refusals(argv):
    code, out, err = call(argv)
    assert code == 3 and err.startswith("refused:")


def test_enum_cap_env(monkeypatch):
    monkeypatch.setenv("COXSUPPORT_ENUM_CAP", "100")
    code, _, err = call(["poincare", "H3", "--verify"])
    assert code == 3 and "120" in err
    code, _, _ = call(["poincare", "H3", "--verify", "--cap", "1000"])
    assert code == 0


def test_version_and_help():
    assert call(["--version"])[0] == 0
    assert call(["support", "--help"])[0] == 0
