# -*- coding: utf-8 -*-

"""
テスト共通設定

リポジトリのルートを sys.path に追加し、設定ディレクトリを一時ディレクトリに向けます。
"""

import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from models.fixture import FixtureManager  # noqa: E402


@pytest.fixture(autouse=True)
def curvetwist_home(tmp_path, monkeypatch):
    home = tmp_path / "home"
    monkeypatch.setenv("CURVETWIST_HOME", str(home))
    monkeypatch.delenv("CURVETWIST_PRECISION", raising=False)
    return home


@pytest.fixture(scope="session")
def fixtures():
    return FixtureManager()


@pytest.fixture(scope="session")
def appendix(fixtures):
    return {record.id: record for record in fixtures.appendix_records()}
