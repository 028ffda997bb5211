import json
import subprocess
import sys

import pytest

from detlab.cli import main
from detlab.exact import QPoly
from detlab.families import lookup, point_key
from detlab.laurent import MultiLaurent
from detlab.scalars import parse_scalar, render
from detlab.verify import Config, load_config, verify, verify_all, verify_point
from fractions import Fraction


@pytest.mark.parametrize("ident,n,params", [
    ("I03", 4, {"r": 2}), ("I16", 3, {"r": 2, "x": 1, "y": 2}), ("I17", 3, {"r": 2, "s": 1}),
    ("I24", 3, {}), ("I05", 3, {"mu": 1}),
])
def test_render_is_reparseable(ident, n, params):
    rep = verify_point(ident, dict(params, n=n))
    spec = lookup(ident)
    lhs = parse_scalar(rep.lhs, spec.ring, spec.vars)
    rhs = parse_scalar(rep.rhs, spec.ring, spec.vars)
    assert rep.match == (lhs == rhs)
    assert render(lhs) == rep.lhs


def test_scalar_roundtrip_direct():
    q = QPoly.q()
    p = 3 - 2 * q ** 2 + Fraction(1, 2) * q ** 5
    assert parse_scalar(render(p), "q-poly") == p
    names = ("q", "z")
    m = MultiLaurent({(1, 0): -1, (0, 2): 3, (0, 0): 1}, names)
    assert parse_scalar(render(m), "multivariate", names) == m
    assert parse_scalar("-7/3", "rational") == Fraction(-7, 3)


def test_verify_examples():
    assert all(r.match for r in verify("I03"))
    (r,) = verify("I04", param_ranges={"a": (2, 2), "b": (2, 2), "c": (2, 2)})
    assert r.lhs == r.rhs == "20"
    (r,) = verify("I24", n_range=(2, 2))
    assert r.lhs == r.rhs == "e2"


def test_verify_specials():
    reps = verify("I08")
    assert [r.lhs for r in reps] == ["1", "2", "6", "24", "120"]
    assert all(r.match for r in verify("I09") + verify("I10"))


def test_n_max_1_trivial():
    reports, summary = verify_all(Config(n_max=1, jobs=1))
    assert summary.ok and summary.mismatches == 0
    assert all(r.point["n"] == 1 or "c" in r.point for r in reports)


def test_q_restricted_run():
    reports, summary = verify_all(Config(rings=("q-poly", "multivariate"), n_max=3, jobs=1))
    assert {r.id for r in reports} == {"I16", "I17", "I18", "I19", "I20", "I21", "I24", "I28"}
    assert summary.ok


def test_determinism_and_parallel(tmp_path):
    cfg = dict(ids=("I01", "I05", "I16", "I22"), n_max=4)
    a, sa = verify_all(Config(jobs=1, out=str(tmp_path / "a.jsonl"), **cfg))
    b, sb = verify_all(Config(jobs=2, out=str(tmp_path / "b.jsonl"), **cfg))
    assert (tmp_path / "a.jsonl").read_text() == (tmp_path / "b.jsonl").read_text()
    lines = (tmp_path / "a.jsonl").read_text().splitlines()
    assert json.loads(lines[-1])["summary"]["total"] == len(lines) - 1
    keys = [(json.loads(l)["id"], point_key(json.loads(l)["point"])) for l in lines[:-1]]
    assert keys == sorted(keys)
    assert sa.calibration_findings > 0 and sa.ok


def test_config_overrides():
    ov = load_config("# grid\nI01 | n=2..3 | params=a:1..1,b:0..1\n")
    reports, _ = verify_all(Config(ids=("I01",), overrides=ov, jobs=1))
    assert [(r.point["n"], r.point["a"], r.point["b"]) for r in reports] == [(2, 1, 0), (2, 1, 1), (3, 1, 0), (3, 1, 1)]


def test_unknown_id():
    with pytest.raises(KeyError):
        verify_all(Config(ids=("I99",)))


def run_cli(*args, stdin=None):
    return subprocess.run([sys.executable, "-m", "detlab.cli", *args], input=stdin,
                          capture_output=True, text=True)


def test_cli_eval():
    out = run_cli("eval", "I06", "--n", "3")
    assert out.returncode == 0
    assert "det = 1" in out.stdout and "[1, 3, 6]" in out.stdout


def test_cli_ct_and_integral():
    assert run_cli("ct", "dyson", "--n", "3", "--alpha", "1").stdout.strip() == "6"
    assert run_cli("integral", "--n", "3", "--alpha", "0", "--beta", "1").stdout.strip() == "24"


def test_cli_guess_stdin():
    values = "\n".join(str(2 ** (n * (n - 1) // 2)) for n in range(1, 9))
    out = run_cli("guess", stdin=values)
    assert out.returncode == 0 and "conjectured" in out.stdout


def test_cli_list_rhs_verify(capsys):
    assert main(["list"]) == 0
    assert "30 identities" in capsys.readouterr().out
    assert main(["rhs", "I04", "--params", "a=2,b=2,c=2"]) == 0
    assert capsys.readouterr().out.strip() == "20"
    assert main(["verify", "I24", "--n", "2..2"]) == 0
    line = capsys.readouterr().out.splitlines()[0]
    assert json.loads(line)["lhs"] == "e2"


def test_cli_verify_all_exit_status(tmp_path):
    out = tmp_path / "rep.jsonl"
    assert main(["verify-all", "--ids", "I05,I06", "--n-max", "3", "--out", str(out), "--jobs", "1"]) == 0
    assert out.read_text().count("\n") == 5 * 3 + 3 + 1


def test_cli_usage_errors():
    assert run_cli("frobnicate").returncode != 0
    assert run_cli("eval").returncode != 0
    assert run_cli("eval", "I99").returncode != 0
    assert run_cli("eval", "I01", "--params", "a").returncode != 0


def test_cli_bench(capsys):
    assert main(["bench", "--sizes", "2,4"]) == 0
    assert "bareiss_ms" in capsys.readouterr().out
