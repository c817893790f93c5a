import pytest

from app.cli.batch import certify_batch, certify_one, read_beta_list
from app.exceptions import InvalidArgumentException
from app.schemas.common import ErrorReport
from app.services.analysis import AnalysisService


async def test_batch_keeps_input_order():
    specs = ["multinacci:2", "rational:17/10", "rational:3/2", "nothing", "rational:19/10"]
    outcomes = await certify_batch(specs, workers=2)
    assert [report.beta_spec for report, _ in outcomes] == specs
    assert [code for _, code in outcomes] == [0, 0, 0, 2, 0]
    assert isinstance(outcomes[3][0], ErrorReport)
    assert outcomes[1][0].result.case == "1*"


async def test_batch_forced_iterate():
    outcomes = await certify_batch(["rational:19/10"], forced_n=3, workers=1)
    report, code = outcomes[0]
    assert report.result.n == 3
    assert report.config.n == 3


def test_certify_one_reports_errors():
    report, code = certify_one("poly:1,0,1")
    assert code == 2
    assert report.error == "NoRootException"


def test_read_beta_list(tmp_path):
    path = tmp_path / "betas.txt"
    path.write_text("# gap samples\nrational:17/10\n\n  rational:19/10  # fourth gap\n")
    assert read_beta_list(str(path)) == ["rational:17/10", "rational:19/10"]

    empty = tmp_path / "empty.txt"
    empty.write_text("# nothing here\n")
    with pytest.raises(InvalidArgumentException):
        read_beta_list(str(empty))


def test_certify_one_maps_unexpected_errors_to_internal(monkeypatch):
    def broken(self, forced_n=None):
        raise ZeroDivisionError("broken")

    monkeypatch.setattr(AnalysisService, "certify", broken)
    report, code = certify_one("rational:3/2")
    assert code == 3
    assert report.error == "ZeroDivisionError"


def test_certify_one_rejects_zero_iterate():
    report, code = certify_one("rational:17/10", forced_n=0)
    assert code == 2
    assert report.error == "InvalidArgumentException"
