"""End-to-end command line checks via subprocess."""

import json
import os
import subprocess
import sys


def run(*args, env_extra=None):
    env = dict(os.environ)
    env.pop("INVOLUTION_ORACLE_MAX_N", None)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "involution_harmonics", *args],
        capture_output=True,
        text=True,
        env=env,
    )


def test_grfrob_json_is_stable_across_methods():
    want = '{"terms":[{"partition":[3],"coeffs":[1]},{"partition":[2,1],"coeffs":[0,1]}]}\n'
    for method in ["signed", "positive", "width", "oracle"]:
        out = run("grfrob", "--n", "3", "--a", "1", "--format", "json", "--method", method)
        assert out.returncode == 0
        assert out.stdout == want


def test_grfrob_text():
    out = run("grfrob", "--n", "3", "--a", "1")
    assert out.returncode == 0
    assert out.stdout == "s[3]: 1\ns[2,1]: q\n"


def test_hilb_formats():
    out = run("hilb", "--n", "4", "--a", "2", "--format", "json")
    assert out.returncode == 0
    assert out.stdout == '{"coeffs":[1,5]}\n'
    out = run("hilb", "--n", "4", "--a", "2")
    assert out.stdout == "1 + 5*q\n"


def test_hilb_oracle_matches_formula_beyond_the_default_cap():
    out = run("hilb", "--n", "7", "--a", "1", "--method", "oracle", "--cap", "7",
              "--format", "json")
    assert out.returncode == 0
    assert out.stdout == '{"coeffs":[1,20,70,14]}\n'


def test_parameter_errors_exit_2():
    out = run("hilb", "--n", "4", "--a", "3")
    assert out.returncode == 2
    assert out.stderr.startswith("error:")
    out = run("grfrob", "--n", "0", "--a", "0")
    assert out.returncode == 2


def test_size_cap_exit_3():
    out = run("hilb", "--n", "7", "--a", "1", "--method", "oracle")
    assert out.returncode == 3
    assert out.stderr.startswith("error:")
    # the environment variable tightens the cap
    out = run("hilb", "--n", "5", "--a", "1", "--method", "oracle",
              env_extra={"INVOLUTION_ORACLE_MAX_N": "4"})
    assert out.returncode == 3
    # an explicit cap beats it
    out = run("hilb", "--n", "5", "--a", "1", "--method", "oracle", "--cap", "5",
              env_extra={"INVOLUTION_ORACLE_MAX_N": "4"})
    assert out.returncode == 0


def test_check_sweeps_pass():
    for args in [
        ("check", "formulas", "--max-n", "5"),
        ("check", "bijections", "--max-n", "5"),
        ("check", "width", "--max-n", "8"),
    ]:
        out = run(*args)
        assert out.returncode == 0, out.stdout + out.stderr
        assert out.stdout.rstrip().endswith("PASS")


def test_check_basis_reports_json():
    out = run("check", "basis", "--n", "4", "--a", "0")
    assert out.returncode == 0
    report = json.loads(out.stdout)
    assert report["basis_check"] == "PASS"
    assert report["hilbert"] == [1, 2]
    assert report["profile"] == [1, 2]


def test_enumerate_stripes():
    out = run("enumerate", "stripes", "--n", "4", "--a", "0", "--format", "json")
    assert out.returncode == 0
    assert out.stdout == run("enumerate", "stripes", "--n", "4", "--a", "0",
                             "--format", "json").stdout
    data = json.loads(out.stdout)
    assert data["stripes"] == [
        {"outer": [4], "inner": [4], "path": "SSSS", "width": 4, "degree": 0},
        {"outer": [2, 2], "inner": [2, 2], "path": "SS", "width": 2, "degree": 1},
    ]
    filtered = run("enumerate", "stripes", "--n", "4", "--a", "0", "--d", "1",
                   "--format", "json")
    assert json.loads(filtered.stdout)["stripes"] == data["stripes"][1:]


def test_enumerate_stripes_ascii():
    out = run("enumerate", "stripes", "--n", "4", "--a", "2", "--ascii")
    assert out.returncode == 0
    assert "\\" in out.stdout or "/" in out.stdout


def test_enumerate_involutions():
    out = run("enumerate", "involutions", "--n", "4", "--a", "2", "--format", "json")
    assert out.returncode == 0
    assert out.stdout == run("enumerate", "involutions", "--n", "4", "--a", "2",
                             "--format", "json").stdout
    data = json.loads(out.stdout)
    assert data["count"] == 6
    assert len(data["involutions"]) == 6
    assert sum(k for _, k in data["width_histogram"]) == 6
    text = run("enumerate", "involutions", "--n", "3", "--a", "1")
    assert text.returncode == 0
    assert text.stdout.rstrip().splitlines()[-1].startswith("count=3")
