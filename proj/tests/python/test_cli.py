"""End-to-end checks of the relmin command line tool."""

import json
import os
import subprocess

import pytest

CLI = os.environ.get("RELMIN_CLI")

pytestmark = pytest.mark.skipif(CLI is None, reason="RELMIN_CLI not set")


def run(args, stdin=None):
    return subprocess.run([CLI, *args], input=stdin, capture_output=True, text=True)


def test_verify_exit_codes_and_determinism():
    args = ["verify", "--suite", "heisenberg_axioms", "--level", "2", "--dim", "2",
            "--samples", "25", "--seed", "9"]
    first = run(args)
    second = run(args)
    assert first.returncode == 0
    assert first.stdout == second.stdout  # byte-identical
    report = json.loads(first.stdout)
    assert report["suite"] == "heisenberg_axioms"
    assert report["exit"] == 0

    failing = run(["verify", "--suite", "cd_axioms", "--level", "4", "--samples", "25", "--seed", "1"])
    assert failing.returncode == 1
    assert json.loads(failing.stdout)["exit"] == 1


def test_verify_rejects_malformed_config():
    assert run(["verify", "--suite", "no_such_suite"]).returncode == 2
    assert run(["verify", "--suite", "cd_axioms", "--level", "9"]).returncode == 2
    assert run(["bogus_command"]).returncode == 2


def test_witness_break_compat():
    request = json.dumps({"x": ["20", "3"], "eps0": "1/10", "level": 0, "n": 2})
    result = run(["witness", "break_compat"], stdin=request)
    assert result.returncode == 0
    payload = json.loads(result.stdout)
    assert payload["a"] == ["1/20", "0"]
    assert payload["w_value"] == "1"
    assert payload["max_abs_sq"] == "1/400"

    no_escape = json.dumps({"x": ["1", "1"], "eps0": "1/10", "level": 0, "n": 2})
    result = run(["witness", "break_compat"], stdin=no_escape)
    assert result.returncode == 1
    payload = json.loads(result.stdout)
    assert payload["error"] == "no escaping coordinate"
    assert payload["max_abs_sq"] == "1"


def test_witness_escalate():
    request = json.dumps({"n0": 2, "m": 10, "r": "1"})
    result = run(["witness", "escalate"], stdin=request)
    assert result.returncode == 0
    payload = json.loads(result.stdout)
    assert int(payload["required_norm_sq"]) == 4**10
    assert int(payload["norm_sq"]) >= 4**10


def test_compute_h_mul():
    u1 = {"a": "0", "x": ["1"], "f": ["0"], "level": 0, "n": 1, "pairing": "xf"}
    u2 = {"a": "0", "x": ["0"], "f": ["1"], "level": 0, "n": 1, "pairing": "xf"}
    result = run(["compute", "h_mul"], stdin=json.dumps({"u1": u2, "u2": u1}))
    assert result.returncode == 0
    payload = json.loads(result.stdout)
    assert payload["a"]["coeffs"] == ["1"]  # the scalar slot picks up w(x2, f1)


def test_compute_realize_identity():
    element = {"a": "0", "x": ["0", "0"], "f": ["0", "0"], "level": 0, "n": 2, "pairing": "xf"}
    result = run(["compute", "realize"], stdin=json.dumps(element))
    assert result.returncode == 0
    payload = json.loads(result.stdout)
    assert payload["size"] == 4
    for r in range(4):
        for c in range(4):
            expected = "1" if r == c else "0"
            assert payload["rows"][r][c]["coeffs"][0] == expected


def test_compute_corner_rejects_excluded_position():
    result = run(["compute", "corner"], stdin=json.dumps({"n": 2, "i": 1, "j": 4, "a": "1"}))
    assert result.returncode == 1
    assert json.loads(result.stdout)["error"] == "precondition"

    good = run(["compute", "corner"], stdin=json.dumps({"n": 2, "i": 1, "j": 2, "a": "5/2"}))
    assert good.returncode == 0
    assert json.loads(good.stdout)["rows"][0][1]["coeffs"] == ["5/2"]


def test_compute_reduce():
    corner = json.loads(run(["compute", "corner"], stdin=json.dumps({"n": 3, "i": 2, "j": 3, "a": "9/4"})).stdout)
    result = run(["compute", "reduce"], stdin=json.dumps({"matrix": corner, "i": 2}))
    assert result.returncode == 0
    payload = json.loads(result.stdout)
    assert payload["size"] == 4
    assert payload["rows"][0][1]["coeffs"] == ["9/4"]  # (i,j) -> (1, j+1-i)


def test_compute_ut_mul():
    corner = lambda i, j, a: json.loads(
        run(["compute", "corner"], stdin=json.dumps({"n": 1, "i": i, "j": j, "a": a})).stdout)
    result = run(["compute", "ut_mul"],
                 stdin=json.dumps({"lhs": corner(1, 2, "2"), "rhs": corner(2, 3, "3")}))
    assert result.returncode == 0
    payload = json.loads(result.stdout)
    assert payload["rows"][0][2]["coeffs"] == ["6"]  # (1,3) entry picks up a·b


def test_json_out_matches_stdout_and_is_deterministic(tmp_path):
    out1 = tmp_path / "report1.json"
    out2 = tmp_path / "report2.json"
    args = ["verify", "--suite", "witnesses", "--level", "2", "--dim", "2",
            "--samples", "20", "--seed", "5"]
    first = run([*args, "--json-out", str(out1)])
    second = run([*args, "--json-out", str(out2)])
    assert first.returncode == 0
    assert out1.read_text() == first.stdout
    assert out1.read_bytes() == out2.read_bytes()


def test_malformed_json_is_exit_2():
    assert run(["compute", "h_mul"], stdin="{not json").returncode == 2
    assert run(["witness", "break_compat"], stdin='{"eps0": "1/10"}').returncode == 2
    assert run(["compute", "nope"], stdin="{}").returncode == 2
    assert run(["--help"]).returncode == 0


@pytest.mark.parametrize("kind,payload", [
    ("break_compat", "null"),
    ("break_compat", '{"x": "not-a-list", "eps0": "1/10", "level": 0, "n": 1}'),
    ("break_compat", '{"x": ["1/0"], "eps0": "1/10", "level": 0, "n": 1}'),
    ("escalate", '{"n0": 2}'),
    ("escalate", '{"n0": 1, "m": 3, "r": "1"}'),
    ("escalate", '{"n0": 2, "m": 3, "r": "0", "delta1": "1/2", "delta2": "1/2"}'),
])
def test_witness_never_crashes_on_bad_input(kind, payload):
    result = run(["witness", kind], stdin=payload)
    assert result.returncode in (1, 2)  # rejected, not crashed


@pytest.mark.parametrize("kind,payload", [
    ("h_mul", '{"u1": 3, "u2": 4}'),
    ("h_mul", '{"u1": {"level": 0, "n": 1, "x": ["1"], "f": ["1"]}, "u2": {"level": 2, "n": 1, "x": [[]], "f": [[]]}}'),
    ("ut_mul", '{"lhs": {"size": 2, "level": 0, "rows": [[1, 2], [3, 4]]}, "rhs": {}}'),
    ("realize", '{"level": 2, "n": 1, "pairing": "xf", "x": [{"level": 2, "coeffs": ["0","1","0","0"]}], "f": [{"level": 2, "coeffs": ["0","1","0","0"]}]}'),
    ("reduce", '{"matrix": {"size": 3, "level": 0, "rows": [["1","5","0"],["0","1","0"],["0","0","1"]]}, "i": 2}'),
    ("corner", '{"n": 2, "i": 2, "j": 2, "a": "1"}'),
])
def test_compute_never_crashes_on_bad_input(kind, payload):
    result = run(["compute", kind], stdin=payload)
    assert result.returncode in (1, 2)


def test_search():
    result = run(["search", "--level", "4", "--bound", "1"])
    assert result.returncode == 0
    payload = json.loads(result.stdout)
    assert payload["found"] is True
    assert payload["norm_of_product"] != payload["norm_product"]

    octonion = run(["search", "--level", "3", "--bound", "1"])
    assert json.loads(octonion.stdout)["found"] is False
