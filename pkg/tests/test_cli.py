# -*- coding: utf-8 -*-

"""
コマンドライン（CurveTwistApp.cmd_dispatch と main）のテスト
"""

import json

import pytest

from main import CurveTwistApp, main


@pytest.fixture
def app():
    return CurveTwistApp()


@pytest.fixture
def lemma_files(tmp_path, fixtures):
    first, second, moves = fixtures.lemma_he()
    paths = []
    for name, factorization in (("f1.json", first), ("f2.json", second)):
        path = tmp_path / name
        path.write_text(json.dumps(factorization.to_dict()), encoding="utf-8")
        paths.append(str(path))
    return paths[0], paths[1], moves


def _map_arguments(record):
    raw = record.raw["map"]
    return ["--p0", raw["p0"], "--p1", raw["p1"], "--p2", raw["p2"]]


@pytest.mark.parametrize("argv", [[], ["frobnicate"], ["braid", "eq", "--n", "3"], ["bezout", "--p", "t"]])
def test_usage_errors_exit_two(app, argv):
    report = app.cmd_dispatch(argv)
    assert report.exit_code == 2
    assert report.error.startswith("usage")


def test_conventions(app):
    report = app.cmd_dispatch(["--conventions"])
    assert report.exit_code == 0
    assert report.result["fingerprint"] == report.conventions_fingerprint
    assert report.result["conventions"]["pencil_slot_order"] == ["y", "x", "1"]


def test_line_image_with_expected_conic(app):
    argv = ["line-image", "--p0", "1+x^2", "--p1", "2*x", "--p2", "2*x^2+3*x",
            "--expect", "13*x^2-12*x*y+4*y^2+12*x-8*y"]
    report = app.cmd_dispatch(argv)
    assert report.exit_code == 0
    assert [c["name"] for c in report.checks] == ["image-oracle", "expected-image"]


def test_line_image_with_wrong_expectation(app):
    argv = ["line-image", "--p0", "1+x^2", "--p1", "2*x", "--p2", "2*x^2+3*x", "--expect", "x^2+y^2-1"]
    assert app.cmd_dispatch(argv).exit_code == 1


def test_braid_equality(app):
    report = app.cmd_dispatch(["braid", "eq", "--n", "3", "--w1", "s1 s2 s1", "--w2", "s2 s1 s2"])
    assert report.exit_code == 0
    assert report.result["equal"] is True
    report = app.cmd_dispatch(["braid", "eq", "--n", "3", "--w1", "s1", "--w2", "s2"])
    assert report.exit_code == 1


def test_generator_out_of_range_is_usage_error(app):
    report = app.cmd_dispatch(["braid", "nf", "--n", "3", "--w", "s3"])
    assert report.exit_code == 2
    assert "DimensionError" in report.error


def test_hurwitz_reproduces_lemma(app, lemma_files):
    first, second, moves = lemma_files
    report = app.cmd_dispatch(["hurwitz", "--fact", first, "--moves", moves, "--expect", second])
    assert report.exit_code == 0
    assert report.checks[-1]["name"] == "expected-factorization"


def test_missing_input_file_is_usage_error(app, tmp_path):
    report = app.cmd_dispatch(["braid", "product", "--fact", str(tmp_path / "missing.json")])
    assert report.exit_code == 2


def test_local_multiplicity(app, appendix):
    report = app.cmd_dispatch(["local-mult"] + _map_arguments(appendix["appendix-ex4"]))
    assert report.exit_code == 0
    assert report.result["multiplicity"] == 3


def test_degenerate_map_is_a_failure(app):
    report = app.cmd_dispatch(["local-mult", "--p0", "x^2+y", "--p1", "x", "--p2", "y^2"])
    assert report.exit_code == 1
    assert report.error is None


def test_two_lines(app, appendix):
    report = app.cmd_dispatch(["two-lines"] + _map_arguments(appendix["appendix-ex5"]))
    assert report.exit_code == 0
    assert report.result["case"] == 5


@pytest.mark.parametrize("suite", ["lemmaHE", "section4", "conditions"])
def test_verify_suites(app, suite):
    report = app.cmd_dispatch(["verify", "--suite", suite])
    assert report.exit_code == 0
    assert report.result["suites"][suite]["failed"] == 0


@pytest.mark.slow
@pytest.mark.parametrize("suite", ["appendix", "tables", "calibration"])
def test_verify_slow_suites(app, suite):
    assert app.cmd_dispatch(["verify", "--suite", suite]).exit_code == 0


def test_reports_are_stored_and_listed(app):
    app.cmd_dispatch(["braid", "eq", "--n", "3", "--w1", "s1", "--w2", "s1"])
    listing = app.cmd_dispatch(["reports", "--command", "braid"])
    assert listing.result["count"] == 1
    stored_id = app.report_manager.search_reports(command="braid")[0].id
    shown = app.cmd_dispatch(["reports", "--show", stored_id[:8]])
    assert shown.exit_code == 0
    assert shown.result["id"] == stored_id
    assert app.cmd_dispatch(["reports", "--status", "error"]).result["count"] == 0
    assert app.cmd_dispatch(["reports", "--delete", stored_id]).exit_code == 0
    assert app.cmd_dispatch(["reports", "--command", "braid"]).result["count"] == 0


def test_main_prints_json(capsys):
    code = main(["braid", "nf", "--n", "3", "--w", "s1 s2 s1 s2", "--json"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data["status"] == "pass"
    assert data["result"]["normal_form"]["strands"] == 3


def test_main_usage_exit_code(capsys):
    assert main(["braid", "eq"]) == 2
    assert "usage" in capsys.readouterr().err
