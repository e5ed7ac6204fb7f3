# -*- coding: utf-8 -*-

"""
ConfigManager と規約台帳のテスト
"""

import json

from utils.config_manager import ConfigManager, DEFAULT_CONFIG, config_home
from utils.conventions import CONVENTIONS, conventions_dict, fingerprint


def test_defaults_are_written(tmp_path):
    manager = ConfigManager(tmp_path)
    assert (tmp_path / "config.json").exists()
    assert manager.get_precision() == DEFAULT_CONFIG["precision"]
    assert manager.get_bmt_budget() == (5, 0)
    assert manager.stores_reports()


def test_home_follows_environment(tmp_path):
    assert config_home() == tmp_path / "home"


def test_stored_values_override_defaults(tmp_path):
    (tmp_path / "config.json").write_text(
        json.dumps({"precision": 30, "tracker": {"workers": 4}, "unknown_key": 1}), encoding="utf-8"
    )
    manager = ConfigManager(tmp_path)
    assert manager.get_precision() == 30
    settings = manager.get_tracker_settings()
    assert settings["workers"] == 4
    assert settings["max_step"] == DEFAULT_CONFIG["tracker"]["max_step"]
    assert "unknown_key" not in manager.config


def test_precision_environment_override(tmp_path, monkeypatch):
    manager = ConfigManager(tmp_path)
    monkeypatch.setenv("CURVETWIST_PRECISION", "40")
    assert manager.get_precision() == 40
    monkeypatch.setenv("CURVETWIST_PRECISION", "3")
    assert manager.get_precision() == DEFAULT_CONFIG["precision"]


def test_invalid_values_are_ignored(tmp_path):
    manager = ConfigManager(tmp_path)
    manager.set_precision(5)
    manager.set_log_level("LOUD")
    assert manager.get_precision() == DEFAULT_CONFIG["precision"]
    assert manager.get_log_level() == "WARNING"
    manager.set_log_level("debug")
    assert ConfigManager(tmp_path).get_log_level() == "DEBUG"


def test_conventions_ledger():
    ledger = conventions_dict()
    assert ledger["pencil_slot_order"] == list(CONVENTIONS["pencil_slot_order"])
    assert fingerprint() == fingerprint()
    assert len(fingerprint()) > 0
