import pytest
from click.testing import CliRunner

from pqpierce.main import cli


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def prefix_file(tmp_path, runner):
    def make(n):
        path = tmp_path / f"prefix-{n}.txt"
        result = runner.invoke(cli, ["gen", "--n", str(n), "--out", str(path)])
        assert result.exit_code == 0, result.output
        return path

    return make


def test_gen_then_check_pq(runner, prefix_file):
    result = runner.invoke(cli, ["check-pq", "--p", "4", "--q", "3", str(prefix_file(6))])
    assert result.exit_code == 0
    assert "holds: true" in result.output


def test_check_pq_failure_exits_one(runner, tmp_path):
    path = tmp_path / "lines.txt"
    path.write_text(
        "family l\n"
        "region L1\nhalfplane 2 -1 1\nhalfplane -2 1 -1\nend\n"
        "region L2\nhalfplane 4 -1 4\nhalfplane -4 1 -4\nend\n"
        "region L3\nhalfplane 6 -1 9\nhalfplane -6 1 -9\nend\n",
        encoding="utf-8",
    )
    result = runner.invoke(cli, ["check-pq", "--p", "3", "--q", "3", str(path)])
    assert result.exit_code == 1
    assert "holds: false" in result.output
    assert "violation: L1 L2 L3" in result.output


def test_pierce_prefix_ten(runner, prefix_file):
    result = runner.invoke(cli, ["pierce", str(prefix_file(10))])
    assert result.exit_code == 0
    assert "tau: 2" in result.output


def test_pierce_budget(runner, tmp_path):
    path = tmp_path / "sq.txt"
    path.write_text(
        "family sq\n"
        "region A\nhalfplane 1 0 1\nhalfplane -1 0 0\nhalfplane 0 1 1\nhalfplane 0 -1 0\nend\n"
        "region B\nhalfplane 1 0 3\nhalfplane -1 0 -2\nhalfplane 0 1 1\nhalfplane 0 -1 0\nend\n",
        encoding="utf-8",
    )
    result = runner.invoke(cli, ["pierce", str(path), "--max-size", "1"])
    assert result.exit_code == 1
    assert "error: BUDGET_EXCEEDED" in result.output


def test_escape(runner):
    result = runner.invoke(cli, ["escape", "--x", "0", "--y", "5"])
    assert result.exit_code == 0
    assert "escapeIndex: 7" in result.output
    assert "slope: -15/2" in result.output


def test_escape_rejects_floats(runner):
    result = runner.invoke(cli, ["escape", "--x", "0.5", "--y", "1"])
    assert result.exit_code == 2


def test_certify_unpierceable(runner, tmp_path):
    path = tmp_path / "pts.txt"
    path.write_text("0 5\n0 100\n2 1\n", encoding="utf-8")
    result = runner.invoke(cli, ["certify-unpierceable", "--points", str(path)])
    assert result.exit_code == 0
    assert "nStar: 102" in result.output


def test_radon(runner):
    result = runner.invoke(cli, ["radon", "0", "0", "2", "0", "0", "2", "2", "2"])
    assert result.exit_code == 0
    assert result.output == "partA: 1 4\npartB: 2 3\ncommonPoint: (1, 1)\n"


def test_theorem2_success_and_violation(runner, tmp_path):
    ok = tmp_path / "ok.txt"
    ok.write_text(
        "family sb\n"
        "region A\nhalfplane 1 0 1\nhalfplane -1 0 0\nhalfplane 0 1 1\nhalfplane 0 -1 0\nend\n"
        "region B\nhalfplane 1 0 4\nhalfplane -1 0 -3\nhalfplane 0 1 1\nhalfplane 0 -1 0\nend\n"
        "region strip\nhalfplane 0 1 1\nhalfplane 0 -1 0\nend\n"
        "region band\nhalfplane 1 0 2\nhalfplane -1 0 -1\nend\n",
        encoding="utf-8",
    )
    result = runner.invoke(cli, ["theorem2", str(ok), "--a", "A", "--b", "B"])
    assert result.exit_code == 0, result.output
    assert "tau: 2" in result.output
    assert "boundSatisfied: true" in result.output

    result = runner.invoke(cli, ["theorem2", str(ok), "--a", "A", "--b", "strip"])
    assert result.exit_code == 3
    assert "error: HYPOTHESIS_VIOLATED" in result.output


def test_parse_error_exit_code(runner, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("family z\nregion X\nhalfplane 0 0 1\nend\n", encoding="utf-8")
    result = runner.invoke(cli, ["pierce", str(path)])
    assert result.exit_code == 2
    assert "error: PARSE_ERROR: line 3" in result.output


def test_render(runner, prefix_file, tmp_path):
    out = tmp_path / "fig.svg"
    result = runner.invoke(cli, ["render", str(prefix_file(5)), "--out", str(out), "--clip-box", "-2", "-3", "3", "4"])
    assert result.exit_code == 0
    assert out.read_text(encoding="utf-8").count("<g ") == 5


def test_quadruple(runner):
    result = runner.invoke(cli, ["quadruple", "1", "2", "5", "7"])
    assert result.exit_code == 0
    assert "triple: 1 2 5" in result.output
    assert "witness: (4/5, 0)" in result.output


def test_gen_with_compacta_and_config(runner, tmp_path):
    cfg = tmp_path / "cfg.yaml"
    cfg.write_text("log:\n  level: ERROR\n", encoding="utf-8")
    out = tmp_path / "ext.txt"
    result = runner.invoke(cli, ["--config", str(cfg), "gen", "--n", "8", "--compacta", "3", "--out", str(out)])
    assert result.exit_code == 0
    assert "regions: 11" in result.output
    assert "region K3" in out.read_text(encoding="utf-8")


def test_reports_are_deterministic(runner, prefix_file):
    path = str(prefix_file(7))
    first = runner.invoke(cli, ["pierce", path]).output
    assert runner.invoke(cli, ["pierce", path]).output == first


def test_explicit_zero_window_and_bound_are_rejected(runner, tmp_path):
    result = runner.invoke(cli, ["escape", "--x", "0", "--y", "5", "--window", "0"])
    assert result.exit_code == 2
    assert "error: BAD_PARAMS" in result.output

    pts = tmp_path / "pts.txt"
    pts.write_text("0 5\n", encoding="utf-8")
    result = runner.invoke(cli, ["certify-unpierceable", "--points", str(pts), "--window", "0"])
    assert result.exit_code == 2

    fam = tmp_path / "two.txt"
    fam.write_text(
        "family two\n"
        "region A\nhalfplane 1 0 1\nhalfplane -1 0 0\nhalfplane 0 1 1\nhalfplane 0 -1 0\nend\n"
        "region B\nhalfplane 1 0 4\nhalfplane -1 0 -3\nhalfplane 0 1 1\nhalfplane 0 -1 0\nend\n",
        encoding="utf-8",
    )
    result = runner.invoke(cli, ["theorem2", str(fam), "--a", "A", "--b", "B", "--bound", "0"])
    assert result.exit_code == 2
    assert "error: BAD_PARAMS" in result.output
