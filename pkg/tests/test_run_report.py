# -*- coding: utf-8 -*-

"""
実行レポートと RunReportManager のテスト
"""

import pytest

from models.run_report import RunReport, RunReportManager
from utils.conventions import fingerprint
from utils.errors import DegenerateInputError


@pytest.fixture
def manager(tmp_path):
    return RunReportManager(tmp_path / "data")


def test_status_and_exit_code():
    report = RunReport(command=["braid", "eq"])
    assert report.exit_code == 0
    report.add_check("a", True)
    report.add_check("b", "unknown")
    assert report.exit_code == 0
    report.add_check("c", False)
    assert report.exit_code == 1
    assert report.to_dict()["summary"] == {"pass": 1, "fail": 1, "unknown": 1}
    report.error = "usage: x"
    assert report.exit_code == 2
    assert report.to_dict()["status"] == "error"


def test_rejects_unknown_status():
    with pytest.raises(ValueError):
        RunReport().add_check("a", "maybe")


def test_run_check_records_errors_as_failures():
    report = RunReport()

    def broken():
        raise DegenerateInputError("p0(0, 0) = 0")

    check = report.run_check("broken", broken)
    assert check["status"] == "fail"
    assert "DegenerateInputError" in check["detail"]
    assert report.run_check("ok", lambda: ("pass", ""))["status"] == "pass"


def test_dict_round_trip():
    report = RunReport(command=["verify", "tables"], result={"n": 3})
    report.add_check("x", True, "detail", 0.5)
    again = RunReport.from_dict(report.to_dict())
    assert again.id == report.id
    assert again.to_dict() == report.to_dict()
    assert again.conventions_fingerprint == fingerprint()


def test_save_get_delete(manager):
    report = RunReport(command=["bezout", "line-image"])
    report.add_check("image", True)
    assert manager.save_report(report) == report.id

    fresh = RunReportManager(manager.data_dir)
    loaded = fresh.get_report(report.id)
    assert loaded.to_dict() == report.to_dict()

    assert fresh.delete_report(report.id)
    assert fresh.get_report(report.id) is None
    assert not fresh.delete_report(report.id)


def test_search_reports(manager):
    passing = RunReport(command=["braid", "eq"])
    passing.add_check("eq", True)
    failing = RunReport(command=["verify", "tables"])
    failing.add_check("tables", False)
    broken = RunReport(command=["hurwitz"])
    broken.error = "FixtureError: missing.json"
    for report in (passing, failing, broken):
        manager.save_report(report)

    assert len(manager.get_all_reports()) == 3
    assert [r.id for r in manager.search_reports(command="braid")] == [passing.id]
    assert [r.id for r in manager.search_reports(status="pass")] == [passing.id]
    assert [r.id for r in manager.search_reports(status="fail")] == [failing.id]
    assert [r.id for r in manager.search_reports(status="error")] == [broken.id]
