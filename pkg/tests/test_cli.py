import io as _io
import json
import subprocess
import sys

import pytest

from homly import algebras_equal, check_hom_ly, parse_algebra
from homly import catalog
from homly.cli import run_cli
from homly.io import parse_candidates


def run(argv, stdin=""):
    """Run the CLI in-process; returns (code, stdout, stderr)."""
    out, err = _io.StringIO(), _io.StringIO()
    saved = sys.stdin, sys.stdout, sys.stderr
    sys.stdin, sys.stdout, sys.stderr = _io.StringIO(stdin), out, err
    try:
        code = run_cli(argv)
    finally:
        sys.stdin, sys.stdout, sys.stderr = saved
    return code, out.getvalue(), err.getvalue()


def cat(name):
    return str(catalog.path(name))


def test_verify_pass():
    code, out, _ = run(["verify", cat("so3-ly"), "--suite", "ly"])
    assert code == 0
    assert out.startswith("suite ly: PASS")


def test_verify_fail_names_first_failure():
    code, out, _ = run(["verify", cat("corrupted-so3-ly"), "--suite", "ly"])
    assert code == 1
    assert "A2" in out and "[0, 1, 0] (x=e1, y=e2, z=e1)" in out


def test_verify_malformed(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"dim": 2, "binary": [{"i": 2, "j": 0, "coeffs": {"0": "1"}}]}')
    code, out, err = run(["verify", str(bad), "--suite", "ly"])
    assert code == 2 and out == ""
    assert "binary[0].i" in err


@pytest.mark.parametrize("argv", [
    [],
    ["verify", "x.json"],
    ["verify", "x.json", "--suite", "nope"],
    ["frobnicate"],
    ["random", "--dim", "3"],
])
def test_usage_errors(argv):
    code, _, _ = run(argv)
    assert code == 2


def test_missing_file():
    code, _, err = run(["verify", "/nonexistent/a.json", "--suite", "ly"])
    assert code == 2 and "cannot read" in err


def test_verify_json_and_stdin():
    code, out, _ = run(["verify", "--suite", "hom-lie", "--format", "json"], stdin=catalog.text("octonion-bracket"))
    assert code == 1
    doc = json.loads(out)
    assert doc["passed"] is False


def test_verify_b6_printed():
    code, out, _ = run(["verify", cat("so3-hom-ly"), "--suite", "hom-ly", "--b6", "printed"])
    assert code == 0 and "hom-ly-printed-b6" in out
    code, _, err = run(["verify", cat("so3-ly"), "--suite", "ly", "--b6", "printed"])
    assert code == 2


def test_max_counterexamples_flag():
    code, out, _ = run(["verify", cat("octonion-bracket"), "--suite", "hom-lie", "--max-counterexamples", "1",
                        "--format", "json"])
    hj = next(a for a in json.loads(out)["axioms"] if a["axiom_id"] == "HJ")
    assert len(hj["counterexamples"]) == 1 < hj["failure_count"]


def test_twist_then_verify_pipeline():
    code, twisted, _ = run(["twist", cat("so3"), "--morphism", cat("cyclic"), "--mode", "cor33"])
    assert code == 0
    code, out, _ = run(["verify", "-", "--suite", "hom-ly"], stdin=twisted)
    assert code == 0, out
    assert algebras_equal(parse_algebra(twisted), catalog.load("so3-hom-ly"))


def test_twist_precondition_failure():
    code, out, err = run(["twist", cat("so3-perturbed"), "--morphism", cat("identity3"), "--mode", "cor33"])
    assert code == 2 and out == "" and err


def test_twist_modes(tmp_path):
    out = tmp_path / "t.json"
    assert run(["twist", cat("so3-ly"), "--morphism", cat("cyclic"), "--mode", "cor32", "-o", str(out)])[0] == 0
    assert check_hom_ly(parse_algebra(out.read_text())).passed
    assert run(["twist", cat("so3-hom-ly"), "--morphism", cat("cyclic"), "-o", str(out)])[0] == 0
    assert check_hom_ly(parse_algebra(out.read_text())).passed


@pytest.mark.parametrize("construction, expected", [
    ("cor33", "so3-malcev-ly"),
    ("lie-ly", "so3-ly"),
])
def test_derive_matches_catalog(construction, expected):
    code, out, _ = run(["derive", cat("so3"), "--construction", construction])
    assert code == 0
    assert algebras_equal(parse_algebra(out), catalog.load(expected))


@pytest.mark.parametrize("construction", ["prop24", "eq41", "j-alpha"])
def test_derive_other_constructions(construction):
    code, out, _ = run(["derive", cat("octonion-bracket"), "--construction", construction])
    assert code == 0
    assert parse_algebra(out).ternary is not None


def test_derive_on_ternary_only_algebra():
    code, _, err = run(["derive", "--construction", "prop24"], stdin='{"dim": 1, "ternary": []}')
    assert code == 2 and err


def test_endos_permutations():
    code, out, _ = run(["endos", cat("so3"), "--permutations"])
    assert code == 0
    assert len(parse_candidates(out)) == 3
    code, out, _ = run(["endos", cat("so3"), "--permutations", "--signed"])
    assert len(parse_candidates(out)) == 24


def test_endos_scalars_and_candidates(tmp_path):
    code, out, _ = run(["endos", cat("so3"), "--scalars=-1,0,1/2,1,2"])
    assert code == 0 and len(parse_candidates(out)) == 2
    f = tmp_path / "c.json"
    f.write_text(out)
    code, out2, _ = run(["endos", cat("so3-hom-ly"), "--candidates", str(f), "--commute"])
    assert code == 0 and len(parse_candidates(out2)) == 2


def test_endos_cap():
    code, _, err = run(["endos", cat("octonion-bracket"), "--permutations", "--signed"])
    assert code == 2 and "cap" in err


def test_probe():
    code, out, _ = run(["probe", cat("so3")])
    assert code == 0 and out.startswith("suite probe: PASS")
    code, _, _ = run(["probe", cat("so3-perturbed")])
    assert code == 2


def test_random_is_deterministic():
    argv = ["random", "--dim", "3", "--seed", "5", "--skew", "--ternary", "--random-alpha"]
    a, b = run(argv)[1], run(argv)[1]
    assert a == b
    A = parse_algebra(a)
    assert A.dim == 3 and A.ternary is not None


def test_catalog_command():
    code, out, _ = run(["catalog"])
    assert code == 0 and "so3" in out.split()
    code, out, _ = run(["catalog", "so3"])
    assert out == catalog.text("so3")
    assert run(["catalog", "nope"])[0] == 2


def test_reports_are_byte_identical():
    argv = ["verify", cat("octonion-ly"), "--suite", "all", "--format", "json"]
    first, second = run(argv), run(argv)
    assert first == second


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "homly", "verify", cat("so3-ly"), "--suite", "ly"],
                          capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    assert "PASS" in proc.stdout


def test_exit_code_tracks_passed():
    for name in ("so3", "so3-perturbed", "octonion-bracket"):
        for suite in ("hom-malcev", "eq44", "eq45", "hom-lie"):
            code, out, _ = run(["verify", cat(name), "--suite", suite, "--format", "json"])
            assert (code == 1) == (json.loads(out)["passed"] is False)


def test_all_suite_skips_inapplicable():
    code, out, _ = run(["verify", cat("so3"), "--suite", "all", "--format", "json"])
    doc = json.loads(out)
    ids = {a["axiom_id"].split("/")[0] for a in doc["axioms"]}
    assert "ly" not in ids and "hom-malcev" in ids
    assert code == 0
