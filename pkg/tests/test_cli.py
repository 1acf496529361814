import io
import json
import math
import subprocess
import sys

import pytest

from polyint import cli
from polyint.special import riemann_zeta


def run(argv):
    out = io.StringIO()
    parser = cli.build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (0 if exc.code == 0 else 2), ""
    try:
        code = args.func(args, out=out)
    except cli.UsageError:
        code = 2
    return code, out.getvalue()


def test_eval_minus_p0_t2():
    code, text = run(["eval", "--sign", "minus", "--a", "1", "--b", "1", "--p", "0", "--t", "2"])
    assert code == 0
    report = json.loads(text)
    assert list(report) == list(cli.EVAL_KEYS)
    assert report["total_re"] == pytest.approx(-2 * riemann_zeta(3), rel=1e-14)
    assert report["total_im"] == 0


def test_eval_plus_p2_t4_imaginary_part():
    code, text = run(["eval", "--sign", "plus", "--a", "2", "--b", "1", "--p", "2", "--t", "4"])
    assert code == 0
    assert json.loads(text)["total_im"] == pytest.approx(-31 / 189 * math.pi ** 7, rel=1e-14)


@pytest.mark.parametrize("extra", [
    ["--a", "1", "--b", "-1", "--p", "0", "--t", "1"],
    ["--a", "1", "--b", "1", "--p", "0", "--t", "0"],
    ["--a", "1", "--b", "1", "--p", "-1", "--t", "1"],
    ["--a", "x", "--b", "1", "--p", "0", "--t", "1"],
])
def test_eval_usage_errors(extra):
    assert cli.main(["eval", "--sign", "plus"] + extra) == 2


def test_eval_text_and_csv():
    code, text = run(["eval", "--sign", "plus", "--a", "1", "--b", "1", "--p", "0", "--t", "1",
                      "--format", "text"])
    assert code == 0 and text.splitlines()[0].split() == ["sign", "plus"]
    code, text = run(["eval", "--sign", "plus", "--a", "1", "--b", "1", "--p", "0", "--t", "1",
                      "--format", "csv"])
    header, row = text.strip().splitlines()
    assert header.split(",") == list(cli.EVAL_KEYS)
    assert row.startswith("plus,1,1,0,1,1,")


def test_json_round_trip():
    code, text = run(["eval", "--sign", "plus", "--a", "3", "--b", "0.7", "--p", "3", "--t", "3"])
    line = text.strip()
    again = cli.dumps_report(json.loads(line), cli.EVAL_KEYS)
    assert again == line


def test_format_value():
    assert cli.format_value(-0.0) == "0"
    assert cli.format_value(0.1) == "0.10000000000000001"
    assert float(cli.format_value(math.pi)) == math.pi
    assert cli.format_value(True) == "true"
    assert cli.format_value(None) == "null"


def test_verify_single_point_file(tmp_path):
    grid = tmp_path / "grid.csv"
    grid.write_text("sign,a,b,p,t\nminus,6,1,1,1\n")
    code, text = run(["verify", "--grid", "file", str(grid)])
    assert code == 0
    report = json.loads(text)
    assert list(report) == list(cli.REPORT_KEYS)
    assert report["pass"] is True
    assert report["total_re"] == pytest.approx(-10.814245149925146, rel=1e-14)
    line = text.strip()
    assert cli.dumps_report(json.loads(line), cli.REPORT_KEYS) == line


def test_verify_plain_path_and_csv(tmp_path):
    grid = tmp_path / "grid.csv"
    grid.write_text("sign,a,b,p,t\nplus,2,1,1,1\nminus,1,1,0,2\n")
    code, text = run(["verify", "--grid", str(grid), "--format", "csv"])
    assert code == 0
    lines = text.strip().splitlines()
    assert lines[0] == ",".join(cli.REPORT_KEYS)
    assert [ln.split(",")[0] for ln in lines[1:]] == ["plus", "minus"]


@pytest.mark.parametrize("content", [
    "",
    "sign,a,b\nminus,6,1\n",
    "sign,a,b,p,t\nminus,6,1,1\n",
    "sign,a,b,p,t\nminus,six,1,1,1\n",
    "sign,a,b,p,t\nminus,6,-1,1,1\n",
    "sign,a,b,p,t\n",
])
def test_verify_malformed_grid(tmp_path, content):
    grid = tmp_path / "grid.csv"
    grid.write_text(content)
    assert cli.main(["verify", "--grid", "file", str(grid)]) == 2


def test_verify_missing_file(tmp_path):
    assert cli.main(["verify", "--grid", "file", str(tmp_path / "nope.csv")]) == 2
    assert cli.main(["verify", "--grid", "a", "b", "c"]) == 2


def test_verify_failure_exit(tmp_path):
    grid = tmp_path / "grid.csv"
    grid.write_text("sign,a,b,p,t\nplus,2,1,2,4\n")
    code, text = run(["verify", "--grid", "file", str(grid), "--tol", "1e-300"])
    assert code == 1
    assert json.loads(text)["pass"] is False


def test_verify_jobs_keep_order(tmp_path):
    rows = ["plus,2,1,2,4", "minus,1,1,0,2", "plus,1,1,0,1", "minus,-3,-1,3,3"]
    grid = tmp_path / "grid.csv"
    grid.write_text("sign,a,b,p,t\n" + "\n".join(rows) + "\n")
    code, text = run(["verify", "--grid", "file", str(grid), "--jobs", "2"])
    assert code == 0
    got = [json.loads(line) for line in text.strip().splitlines()]
    assert [(r["sign"], r["a"], r["p"]) for r in got] == [
        ("plus", 2, 2), ("minus", 1, 0), ("plus", 1, 0), ("minus", -3, 3)]


def test_default_grid_shape():
    grid = cli.default_grid()
    assert len(grid) == 384
    assert {(g.sign, g.q) for g in grid} == {(s, q) for s in ("plus", "minus")
                                              for q in (0.5, 1.0, 2.0, 3.0)}


def test_sum_borwein():
    code, text = run(["sum", "--kind", "plain", "--p", "3", "--t", "4", "--r", "1"])
    assert code == 0
    report = json.loads(text)
    assert list(report) == list(cli.SUM_KEYS)
    assert report["abs_diff"] <= 1e-11
    assert report["expression"] == "18 zeta(7) - 10 zeta(2) zeta(5)"


def test_sum_half_scale():
    code, text = run(["sum", "--kind", "alt", "--p", "1", "--t", "2", "--r", "0.5"])
    assert code == 0
    assert json.loads(text)["value"] == pytest.approx(3 * riemann_zeta(3) / 8, rel=1e-13)


def test_sum_without_closed_form():
    code, text = run(["sum", "--kind", "plain", "--p", "2", "--t", "5", "--format", "text"])
    assert code == 0
    assert "closed_form" in text


def test_sum_divergent():
    assert cli.main(["sum", "--kind", "plain", "--p", "1", "--t", "1", "--r", "1"]) == 2


def test_sum_non_convergence_exit():
    assert cli.main(["sum", "--kind", "plain", "--p", "3", "--t", "4", "--tol", "1e-30"]) == 3


def test_usage_and_help():
    assert cli.main([]) == 2
    assert cli.main(["bogus"]) == 2
    assert cli.main(["--help"]) == 0


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "polyint", "sum", "--kind", "alt", "--p", "1",
                           "--t", "1"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["value"] == pytest.approx(0.5822405264650125, rel=1e-14)
    proc = subprocess.run([sys.executable, "-m", "polyint", "eval", "--sign", "plus", "--a", "1",
                           "--b", "-1", "--p", "0", "--t", "1"], capture_output=True, text=True)
    assert proc.returncode == 2
    assert "a*b > 0" in proc.stderr
