import json

import pytest
from click.testing import CliRunner

from app.cli.main import cli
from app.services.analysis import AnalysisService


@pytest.fixture
def runner():
    return CliRunner()


def invoke_json(runner, tmp_path, *args):
    """Run a command writing JSON to a file and return (exit code, payload)."""
    out = tmp_path / "report.json"
    result = runner.invoke(cli, [*args, "--out", str(out)])
    payload = json.loads(out.read_text()) if out.exists() else None
    return result.exit_code, payload


def test_certify_multinacci(runner, tmp_path):
    code, report = invoke_json(runner, tmp_path, "certify", "--beta", "multinacci:2")
    assert code == 0
    assert report["regime"] == "Exact(2)"
    assert report["beta_spec"] == "multinacci:2"
    assert report["result"]["tag"] == "IsomorphicMultinacci"
    assert report["result"]["certificate"]["matrix"] == [[1, 1], [1, 0]]
    assert report["config"]["command"] == "certify"


def test_certify_below_golden_mean(runner, tmp_path):
    code, report = invoke_json(runner, tmp_path, "certify", "--beta", "rational:3/2")
    assert code == 0
    assert report["regime"] == "SubGolden"
    assert report["result"]["tag"] == "NotIsomorphic"
    assert 2 in [w["k"] for w in report["result"]["witnesses"]]
    assert report["result"]["matches_prediction"]


def test_certify_invalid_beta(runner):
    result = runner.invoke(cli, ["certify", "--beta", "rational:5/2"])
    assert result.exit_code == 2


def test_certify_needs_one_source(runner, tmp_path):
    assert runner.invoke(cli, ["certify"]).exit_code == 2
    beta_list = tmp_path / "betas.txt"
    beta_list.write_text("rational:3/2\n")
    result = runner.invoke(cli, ["certify", "--beta", "rational:3/2", "--beta-list", str(beta_list)])
    assert result.exit_code == 2


def test_certify_text_format(runner, tmp_path):
    out = tmp_path / "report.txt"
    result = runner.invoke(cli, ["certify", "--beta", "rational:3/2", "--format", "text", "--out", str(out)])
    assert result.exit_code == 0
    text = out.read_text()
    assert "regime   SubGolden" in text
    assert "NotIsomorphic" in text


def test_certify_batch(runner, tmp_path):
    beta_list = tmp_path / "betas.txt"
    beta_list.write_text("rational:3/2\n# comment\n\nrational:5/2\nmultinacci:2\n")
    code, reports = invoke_json(runner, tmp_path, "certify", "--beta-list", str(beta_list))
    assert code == 2
    assert len(reports) == 3
    assert reports[0]["result"]["tag"] == "NotIsomorphic"
    assert reports[1]["error"] == "InvalidArgumentException"
    assert reports[2]["result"]["tag"] == "IsomorphicMultinacci"


def test_certify_batch_csv(runner, tmp_path):
    beta_list = tmp_path / "betas.txt"
    beta_list.write_text("rational:3/2\nrational:17/10\n")
    out = tmp_path / "summary.csv"
    result = runner.invoke(cli, ["certify", "--beta-list", str(beta_list), "--format", "csv", "--out", str(out)])
    assert result.exit_code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "beta_spec,regime,n,tag,witnesses"
    assert lines[1].startswith("rational:3/2,SubGolden,3,NotIsomorphic,")
    assert lines[2].startswith("rational:17/10,Gap(3),3,NotIsomorphic,")


@pytest.mark.parametrize(
    "args, code",
    [
        (["lemma31", "--beta", "multinacci:6", "--n", "6"], 0),
        (["fixed-point-bounds", "--beta", "multinacci:5"], 0),
        (["kappa", "--beta", "rational:19/10"], 0),
        (["iota", "--beta", "rational:19/10", "--m", "4"], 0),
        (["kappa", "--beta", "multinacci:3"], 2),
        (["iota", "--beta", "rational:19/10", "--m", "7"], 2),
        (["parity", "--beta", "rational:19/10"], 0),
        (["claim", "--beta", "rational:159/80"], 0),
        (["closed-form", "--beta", "rational:159/80"], 0),
        (["orbit-order", "--beta", "rational:19/10"], 0),
        (["markov", "--beta", "multinacci:3", "--map", "T"], 0),
    ],
)
def test_verify_targets(runner, tmp_path, args, code):
    exit_code, report = invoke_json(runner, tmp_path, "verify", *args)
    assert exit_code == code
    if code == 0:
        assert report["passed"] is True
        assert report["config"]["target"] == args[0]


def test_verify_unknown_target(runner):
    assert runner.invoke(cli, ["verify", "nothing", "--beta", "rational:3/2"]).exit_code == 2


def test_spectrum_csv(runner, tmp_path):
    out = tmp_path / "spectrum.csv"
    result = runner.invoke(cli, ["spectrum", "--beta", "rational:3/2", "--format", "csv", "--out", str(out)])
    assert result.exit_code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "map,n,left,right,value,left_exact,right_exact"
    rows = [line.split(",") for line in lines[1:]]
    assert [int(row[4]) for row in rows if row[0] == "T"] == [5, 4, 3, 2]
    assert [int(row[4]) for row in rows if row[0] == "S"] == [3, 1, 4, 5]


def test_spectrum_json_mass(runner, tmp_path):
    code, report = invoke_json(runner, tmp_path, "spectrum", "--beta", "rational:17/10", "--map", "S")
    assert code == 0
    spectra = report["result"]["spectra"]
    assert [s["map"] for s in spectra] == ["S"]
    assert spectra[0]["mass_identity"]


def test_orbit_csv(runner, tmp_path):
    out = tmp_path / "orbit.csv"
    result = runner.invoke(
        cli, ["orbit", "--beta", "rational:3/2", "--depth", "3", "--format", "csv", "--out", str(out)]
    )
    assert result.exit_code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "k,exact,decimal"
    assert [line.split(",")[1] for line in lines[1:]] == ["1", "1/2", "3/4", "1/8"]


def test_markov_command(runner, tmp_path):
    code, report = invoke_json(runner, tmp_path, "markov", "--beta", "multinacci:2")
    assert code == 0
    result = report["result"]
    assert result["found"]
    assert result["matrix"] == [[1, 1], [1, 0]]
    assert result["entropy"]["contains_log_beta"]
    assert result["coding"]["holds"]


def test_markov_without_partition(runner, tmp_path):
    code, report = invoke_json(runner, tmp_path, "markov", "--beta", "rational:3/2")
    assert code == 0
    assert report["result"]["found"] is False


def test_metrics_file(runner, tmp_path):
    metrics = tmp_path / "betamorph.prom"
    result = runner.invoke(cli, ["--metrics-file", str(metrics), "certify", "--beta", "rational:3/2"])
    assert result.exit_code == 0
    assert "betamorph_verdicts_total" in metrics.read_text()


def test_version(runner):
    result = runner.invoke(cli, ["--version"])
    assert result.exit_code == 0
    assert "betamorph" in result.output


def test_verify_lemma31_boundary_equality(runner, tmp_path):
    code, report = invoke_json(runner, tmp_path, "verify", "lemma31", "--beta", "multinacci:6", "--n", "6")
    assert code == 0
    assert report["result"]["holds"]
    assert report["result"]["equality"]


def test_verify_kappa_counts_branches(runner, tmp_path):
    code, report = invoke_json(runner, tmp_path, "verify", "kappa", "--beta", "rational:19/10", "--n", "4")
    assert code == 0
    assert sum(row["observed"] for row in report["result"]["rows"] if row["m"] == 4) == 15


def test_verify_iota_at_third_gap(runner, tmp_path):
    code, report = invoke_json(
        runner, tmp_path, "verify", "iota", "--beta", "rational:17/10", "--n", "3", "--m", "3"
    )
    assert code == 0
    rows = sorted(report["result"]["rows"], key=lambda row: row["j"])
    assert [row["observed"] for row in rows] == [1, 3, 2, 1]


def test_certify_rejects_zero_iterate(runner):
    result = runner.invoke(cli, ["certify", "--beta", "rational:17/10", "--n", "0"])
    assert result.exit_code == 2


def test_unexpected_failure_exits_internal(runner, monkeypatch):
    def broken(self, n=None, map_name=None):
        raise RuntimeError("broken")

    monkeypatch.setattr(AnalysisService, "spectrum", broken)
    result = runner.invoke(cli, ["spectrum", "--beta", "rational:3/2"])
    assert result.exit_code == 3
