import json
import subprocess
import sys

import pytest

from sspec import mult_closure, spec_s
from sspec.cli import EXIT_COUNTEREXAMPLE, EXIT_INPUT, EXIT_OK, run
from sspec.spectrum import spectrum_from_json


@pytest.fixture
def rings(tmp_path):
    paths = {}
    for name, obj in {"z12": {"kind": "zn", "n": 12}, "z6": {"kind": "zn", "n": 6},
                      "z4": {"kind": "zn", "n": 4},
                      "bad": {"kind": "zn", "n": 12, "colour": "red"}}.items():
        p = tmp_path / f"{name}.json"
        p.write_text(json.dumps(obj))
        paths[name] = str(p)
    (tmp_path / "broken.json").write_text("{not json")
    paths["broken"] = str(tmp_path / "broken.json")
    return paths


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_spec_json_round_trip(rings, capsys, z12_s3):
    code, out, _ = call(capsys, "spec", "--ring", rings["z12"], "--mults", "3", "--format", "json")
    assert code == EXIT_OK
    space = spectrum_from_json(json.loads(out))
    assert space.points == spec_s(*z12_s3).points


def test_spec_text(rings, capsys):
    code, out, _ = call(capsys, "spec", "--ring", rings["z12"], "--mults", "3")
    assert code == EXIT_OK
    assert "2 points" in out and "[0, 6]" in out and "prime=no" in out


def test_ideals_and_radical(rings, capsys):
    code, out, _ = call(capsys, "ideals", "--ring", rings["z12"], "--format", "json")
    assert code == EXIT_OK and len(json.loads(out)["ideals"]) == 6
    code, out, _ = call(capsys, "radical", "--ring", rings["z12"], "--mults", "3", "--ideal", "0")
    assert code == EXIT_OK and out.strip() == "[0, 2, 4, 6, 8, 10]"


def test_topology_and_dot(rings, capsys, tmp_path):
    dot = tmp_path / "g.dot"
    code, out, _ = call(capsys, "topology", "--ring", rings["z12"], "--mults", "3", "--kind", "flat",
                        "--dot", str(dot), "--format", "json")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["t0"] is False and len(payload["opens"]) == 2
    assert "p0 -> p1;" in dot.read_text()


def test_components(rings, capsys):
    code, out, _ = call(capsys, "components", "--ring", rings["z6"], "--kind", "zariski",
                        "--format", "json")
    assert code == EXIT_OK
    assert json.loads(out)["connected"] == [[[0, 3]], [[0, 2, 4]]]


def test_verify_single_ring(rings, capsys):
    code, out, _ = call(capsys, "verify", "--ring", rings["z12"], "--mults", "3")
    assert code == EXIT_OK
    assert "fail=0" in out.splitlines()[-1]


def test_goingdown_exit_codes(rings, capsys):
    code, out, _ = call(capsys, "goingdown", "--source", rings["z12"], "--target", rings["z6"],
                        "--mults", "3")
    assert code == EXIT_OK and "no counterexample found" in out
    code, out, _ = call(capsys, "goingdown", "--source", rings["z12"], "--target", rings["z4"],
                        "--mults", "3", "--format", "json")
    assert code == EXIT_COUNTEREXAMPLE
    assert json.loads(out)["counterexamples"]


@pytest.mark.parametrize("argv", [
    ["spec", "--ring", "{bad}"],
    ["spec", "--ring", "{broken}"],
    ["spec", "--ring", "/nonexistent/ring.json"],
    ["spec", "--ring", "{z12}", "--mults", "6"],
    ["spec", "--ring", "{z12}", "--mults", "x"],
    ["radical", "--ring", "{z12}", "--ideal", "40"],
    ["verify", "--ring", "{z12}", "--only", "no-such-tag"],
    ["verify"],
    ["spec", "--bogus"],
    ["nonsense"],
])
def test_input_errors(rings, capsys, argv):
    code, _, _ = call(capsys, *[a.format(**rings) for a in argv])
    assert code == EXIT_INPUT


def test_console_script_exit_code(rings):
    proc = subprocess.run([sys.executable, "-m", "sspec", "spec", "--ring", rings["bad"]],
                          capture_output=True, text=True)
    assert proc.returncode == EXIT_INPUT
    assert "error" in proc.stderr
