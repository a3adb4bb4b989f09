import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from devlin_hopf.cli import run

SCHEMA = json.loads(resources.files("devlin_hopf").joinpath("data/output.schema.json").read_text())


def ok(*argv):
    out = run(list(argv))
    assert out.status == 0, out.error
    return out.output


def test_devlin_text():
    assert ok("devlin", "--n", "4") == "6*x1x1x1 + 3*x0x1 + 2*x1x0\n"
    for route in ("closed", "antipode"):
        assert ok("devlin", "--n", "6", "--route", route) == ok("devlin", "--n", "6")


def test_antipode_text():
    assert ok("antipode", "--word", "x0") == "-a[x0] + a[x1]a[e]\n"
    assert ok("antipode", "--word", "x0x1", "--method", "direct") == "-a[x0x1] + a[x1]a[x1] + a[x1x1]a[e]\n"
    assert ok("antipode", "--expr", "a[x1]a[e]") == "a[x1]a[e]\n"


def test_series_commands():
    assert ok("shuffle", "x1", "x0x1") == "2*x0x1x1 + x1x0x1\n"
    assert ok("shuffle", "-x1", "x1") == "-2*x1x1\n"
    assert ok("compose", "x1x1", "x1") == "2*x0x0x1x1 + x0x1x0x1\n"
    assert ok("mod-compose", "x1", "x1", "--max-degree", "4") == "x0x1 + x1\n"
    assert ok("unity-feedback", "x1", "--max-degree", "5") == "x0x1 + x1\n"
    assert ok("feedback", "x1", "x1", "--max-degree", "6") == "x0x0x1 + x1\n"
    assert ok("feedback", "x1", "x1", "--max-degree", "6", "--method", "fixpoint") == "x0x0x1 + x1\n"
    inv = ok("inverse", "-1 - x1 - 2*x1x1 - 6*x1x1x1", "--max-degree", "4")
    assert inv == ok("inverse", "-1 - x1 - 2*x1x1 - 6*x1x1x1", "--max-degree", "4", "--method", "fixpoint")
    assert inv.startswith("6*x1x1x1 + 3*x0x1 + 2*x1x0")


def test_ferfera_keyword():
    assert ok("unity-feedback", "ferfera", "--max-degree", "4") == ok("inverse", "-1 - x1 - 2*x1x1 - 6*x1x1x1", "--max-degree", "4")


def test_return_map():
    assert ok("return-map", "--alpha", "1", "--omega", "1/10", "--n", "5").split("\n")[:5] == [
        "a_1  1", "a_2  0", "a_3  1/10", "a_4  0", "a_5  3/200"
    ]


def test_abel_sim():
    out = ok("abel-sim", "--beta", "1", "--t", "0.2", "--max-degree", "12")
    lines = dict(line.split(None, 1) for line in out.splitlines())
    assert abs(float(lines["z_numeric"]) - 1.25) < 1e-8
    assert abs(float(lines["difference"])) < 1e-8


def test_verify_passes():
    out = run(["verify", "--max-degree", "6"])
    assert out.status == 0
    assert "22/22 suites passed" in out.output


def test_verify_single_suite():
    out = ok("verify", "--suite", "antipode.routes", "--suite", "hopf.counit")
    assert out.count("PASS") == 2


@pytest.mark.parametrize(
    "argv, status, kind",
    [
        (["antipode", "--word", "x2"], 2, "parse"),
        (["shuffle", "x1", "1/0*x0"], 2, "parse"),
        (["bogus"], 2, "usage"),
        (["devlin"], 2, "usage"),
        (["devlin", "--n", "0"], 2, "usage"),
        (["devlin", "--n", "3", "--max-degree", "0"], 2, "usage"),
        (["abel-sim", "--beta", "1", "--t", "2"], 3, "blowup"),
        (["abel-sim", "--beta", "1", "--t", "-1"], 2, "invalid"),
        (["abel-sim", "--alpha", "1 +", "--t", "0.1"], 2, "parse"),
    ],
)
def test_errors(argv, status, kind):
    out = run(argv)
    assert out.status == status
    assert out.error.startswith(f"error: {kind}: ")
    assert out.error.count("\n") == 1


def test_env_default_max_degree(monkeypatch):
    monkeypatch.setenv("DEVLIN_HOPF_MAX_DEGREE", "4")
    assert ok("unity-feedback", "x1") == "x0x1 + x1\n"
    monkeypatch.setenv("DEVLIN_HOPF_MAX_DEGREE", "nope")
    assert run(["unity-feedback", "x1"]).status == 2


JSON_CASES = [
    ["devlin", "--n", "5"],
    ["antipode", "--word", "x0x0"],
    ["inverse", "ferfera", "--max-degree", "5"],
    ["shuffle", "3/2*x1", "-x0"],
    ["verify", "--suite", "words.enumeration"],
    ["abel-sim", "--alpha", "1 - t", "--beta", "1/2", "--t", "0.05"],
    ["return-map", "--beta", "1", "--omega", "1/2", "--n", "4"],
    ["antipode", "--word", "x7"],
    ["abel-sim", "--beta", "1", "--t", "3"],
    ["nope"],
]


@pytest.mark.parametrize("argv", JSON_CASES)
def test_json_matches_schema(argv):
    out = run(argv + ["--format", "json"])
    doc = json.loads(out.output)
    jsonschema.validate(doc, SCHEMA)


def test_json_rationals_are_strings():
    doc = json.loads(ok("shuffle", "3/2*x1", "-x0", "--format", "json"))
    terms = doc["result"]["terms"]
    assert {"word": "x1x0", "num": "-3", "den": "2"} in terms
    doc = json.loads(ok("abel-sim", "--beta", "1", "--t", "0.2", "--format", "json"))
    assert len(doc["result"]["z_numeric"].replace("-", "").replace(".", "").lstrip("0")) <= 17


@pytest.mark.parametrize("argv", JSON_CASES[:7])
def test_output_is_deterministic(argv):
    assert run(argv + ["--format", "json"]).output == run(argv + ["--format", "json"]).output
    assert run(argv).output == run(argv).output


def test_console_script():
    proc = subprocess.run(
        [sys.executable, "-m", "devlin_hopf.cli", "devlin", "--n", "3"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert proc.stdout == "2*x1x1 + x0\n"
    proc = subprocess.run([sys.executable, "-m", "devlin_hopf.cli", "antipode", "--word", "q"], capture_output=True, text=True)
    assert proc.returncode == 2
    assert proc.stderr.startswith("error: parse: offset 0")
