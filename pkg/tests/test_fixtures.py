# -*- coding: utf-8 -*-

"""
フィクスチャの読み込みと検証のテスト
"""

import json

import pytest

from models.fixture import FixtureManager
from utils.errors import FixtureError
from utils.input_loader import load_detrep, load_map, load_polynomial


def test_appendix_records(appendix):
    assert sorted(appendix) == [f"appendix-ex{k}" for k in range(1, 9)]
    for record in appendix.values():
        assert record.map.degree == 2
        assert len(record.image_factors) == 2
        assert record.factorization.strands == 4
        assert 1 <= record.case <= 7


def test_reference_factorizations_for_case_seven(fixtures):
    tables = [table for table, _ in fixtures.reference_factorizations(7)]
    assert tables == ["1m2-a", "1m2-b"]


def test_get_record(fixtures):
    assert fixtures.get_record("node_bm", "node-bm-c1").table == "NodeBM"
    assert fixtures.get_record("node_bm", "missing") is None
    with pytest.raises(FixtureError):
        fixtures.load("nonexistent")


def test_record_dict_has_source(fixtures):
    data = fixtures.get_record("appendix", "appendix-ex1").to_dict()
    assert data["source"]
    assert data["case"] == 1


def test_duplicate_ids_are_rejected(tmp_path):
    records = [{"id": "same", "curve": "x"}, {"id": "same", "curve": "y"}]
    (tmp_path / "node_bm.json").write_text(json.dumps({"records": records}), encoding="utf-8")
    with pytest.raises(FixtureError):
        FixtureManager(tmp_path).load("node_bm")


def test_missing_file_and_bad_json(tmp_path):
    with pytest.raises(FixtureError):
        FixtureManager(tmp_path).load("lemmaHE")
    (tmp_path / "lemma_he.json").write_text("{not json", encoding="utf-8")
    with pytest.raises(FixtureError):
        FixtureManager(tmp_path).load("lemmaHE")


def test_invalid_record_content(tmp_path):
    records = [{"id": "bad", "factorization": {"strands": 3, "factors": ["s7"]}}]
    (tmp_path / "node_bm.json").write_text(json.dumps({"records": records}), encoding="utf-8")
    with pytest.raises(FixtureError):
        FixtureManager(tmp_path).load("node_bm")


def test_input_loaders(tmp_path):
    poly_file = tmp_path / "curve.txt"
    poly_file.write_text("x^2+y^2-1\n", encoding="utf-8")
    assert load_polynomial(f"@{poly_file}") == load_polynomial("x^2+y^2-1")

    detrep_file = tmp_path / "rep.json"
    detrep_file.write_text(json.dumps({"D0": [[1]], "D1": [[2]], "D2": [[3]]}), encoding="utf-8")
    assert load_detrep(detrep_file).m == 1

    assert load_map(p0="1+x^2", p1="2*x", p2="x").degree == 2
