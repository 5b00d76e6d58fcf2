import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from algkernel.cli import run

ROOT = Path(__file__).resolve().parent.parent
SESSIONS = sorted((ROOT / "sessions").glob("*.session"))
GOLDEN = Path(__file__).resolve().parent / "golden"
F0 = "x^40+y^30+z^24+x^10*y^7+x^7*y^7*z^3+x^6*y^12"


def cli(*argv, stdin=None):
    out, err = io.StringIO(), io.StringIO()
    old = sys.stdin
    if stdin is not None:
        sys.stdin = io.StringIO(stdin)
    try:
        code = run(list(argv), stdout=out, stderr=err)
    finally:
        sys.stdin = old
    return code, out.getvalue(), err.getvalue()


def test_pluecker():
    code, out, _ = cli("pluecker", "4", "0", "0")
    assert code == 0
    assert out.strip() == "g=3 dcheck=12 flexes=24 bitangents=28"


def test_usage_errors():
    code, _, _ = cli("pluecker")
    assert code == 2
    code, _, _ = cli("frobnicate")
    assert code == 2
    code, _, _ = cli("gb", "x", "--format", "xml")
    assert code == 2


def test_twisted_cubic_json():
    code, out, _ = cli("run", str(ROOT / "sessions" / "twisted_cubic.session"), "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["format_version"] == 1
    dims = [r["value"] for r in doc["results"] if r["command"].startswith("dim")]
    assert dims == [1]


@pytest.mark.parametrize("path", SESSIONS, ids=lambda p: p.stem)
@pytest.mark.parametrize("fmt", ["text", "json"])
def test_golden_outputs(path, fmt):
    code, out, err = cli("run", str(path), "--format", fmt)
    assert code == 0, err
    suffix = ".txt" if fmt == "text" else ".json"
    assert out == (GOLDEN / (path.stem + suffix)).read_text()


def test_deterministic_with_jobs():
    path = str(ROOT / "sessions" / "curves.session")
    _, serial, _ = cli("run", path)
    _, parallel, _ = cli("run", path, "--jobs", "3")
    assert serial == parallel


def test_one_shot_commands():
    ideal = ["x^2+y^2+2*z^2-8", "x^2-y^2-z^2+1", "x-y+z"]
    code, out, _ = cli("gb", *ideal, "--ordering", "lex")
    assert code == 0
    assert out.splitlines() == ["z^4 - 3*z^2 + 1/6", "y + 3*z^3 - 9*z", "x + 3*z^3 - 8*z"]
    code, out, _ = cli("nf", *ideal, "-f", "x^2+y^2+z^2", "--ordering", "lex")
    assert out.strip() == "-z^2 + 8"
    assert cli("dim", "y-x^2", "z-x^3")[1].strip() == "1"
    assert cli("imult", "y^2-x^3", "2*y^2-x^3")[1].strip() == "6"
    assert cli("milnor", "y^2-x^3")[1].strip() == "mu=2 tau=2"
    assert cli("genus", "5", "3", "1", "1", "1")[1].strip() == "0"
    assert cli("dual", "x^2+y*z")[1].strip() == "u^2 + 4*v*w"


def test_intersect_one_shot_is_ideal():
    code, out, _ = cli("intersect", "--vars", "x0,x1,x2,x3", "x0,x1", "x2,x3")
    assert code == 0
    assert sorted(out.split()) == sorted(["x0*x2", "x1*x2", "x0*x3", "x1*x3"])


def test_stdin_generators():
    code, out, _ = cli("dual", stdin="x^2 + y*z\n")
    assert code == 0 and out.strip() == "u^2 + 4*v*w"
    code, out, _ = cli("run", "-", stdin="ring R = QQ[x,y];\nideal I = x*y;\ndim I;\n")
    assert out.splitlines() == ["> dim I", "1"]


def test_fields_and_json_one_shot():
    code, out, _ = cli("gb", "3*x+1", "--field", "Fp:7", "--format", "json")
    assert code == 0
    value = json.loads(out)["results"][0]["value"]
    assert value["ring"]["field"] == "Fp:7"
    assert value["generators"] == ["x + 5"]


def test_parse_error_reports_position():
    code, _, err = cli("run", "-", stdin="ring R = QQ[x];\nideal I = x+;\n")
    assert code == 2
    assert "line 2, column 13" in err
    assert err.rstrip().endswith("^")


def test_math_domain_error_exit_one():
    code, _, err = cli("bezout", "x*y", "x*z", "--points", "(0:0:1)")
    assert code == 1 and "common component" in err
    code, _, err = cli("quotient", "x", "0")
    assert code == 1


def test_missing_file():
    code, _, err = cli("run", "/nonexistent/file.session")
    assert code == 2 and err


def test_timeout_partial_output(tmp_path):
    session = tmp_path / "slow.session"
    session.write_text("ring R = Fp:32003[x,y,z];\nideal I = x, y;\ndim I;\nmilnor %s;\n" % F0)
    code, out, err = cli("run", str(session), "--timeout", "1")
    assert code == 1
    assert out.splitlines()[:2] == ["> dim I", "1"]
    assert out.splitlines()[-1].startswith("note: timed out")
    assert "timeout" in err
    code, out, _ = cli("run", str(session), "--timeout", "1", "--format", "json")
    doc = json.loads(out)
    assert code == 1 and len(doc["results"]) == 1 and "timed out" in doc["note"]


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "algkernel", "pluecker", "3", "1", "0"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "g=0 dcheck=4 flexes=3 bitangents=0"
