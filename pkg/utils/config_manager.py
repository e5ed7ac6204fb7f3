#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
設定マネージャーモジュール

このモジュールは、curvetwist の実行設定を管理するクラスを提供します。
追跡精度、ログレベル、BMT 探索の予算などを JSON ファイルに保存し、
環境変数による上書きを適用します。

バージョン: 1.0.0
"""

import copy
import json
import os
import logging
from pathlib import Path

logger = logging.getLogger(__name__)

HOME_ENV = "CURVETWIST_HOME"
PRECISION_ENV = "CURVETWIST_PRECISION"

DEFAULT_CONFIG = {
    "precision": 15,
    "max_precision": 60,
    "log_level": "WARNING",
    "store_reports": True,
    "bmt_depth": 5,
    "bmt_conjugator_letters": 0,
    "tracker": {
        "safety": 0.25,
        "min_step": 1e-9,
        "max_step": 0.05,
        "loop_vertices": 32,
        "workers": 1,
    },
}

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def config_home():
    """
    設定ディレクトリのパスを返します。

    Returns:
        Path: CURVETWIST_HOME があればそのパス、なければ ~/.curvetwist
    """
    override = os.environ.get(HOME_ENV)
    if override:
        return Path(override)
    return Path.home() / ".curvetwist"


class ConfigManager:
    """
    curvetwist の設定を管理するクラス。
    設定ファイルの読み込み・保存と、値の検証付き取得・変更を行います。
    """

    def __init__(self, config_dir=None):
        """
        ConfigManagerクラスのコンストラクタ。

        Args:
            config_dir (Path): 設定ディレクトリ（省略時は config_home()）
        """
        self.config_dir = Path(config_dir) if config_dir else config_home()
        self.config_file = self.config_dir / "config.json"
        self.config = copy.deepcopy(DEFAULT_CONFIG)

        # 設定ディレクトリの作成
        if not self.config_dir.exists():
            os.makedirs(self.config_dir, exist_ok=True)
            logger.info(f"設定ディレクトリを作成しました: {self.config_dir}")

        self.load_config()

    def load_config(self):
        """
        設定ファイルから設定を読み込みます。
        ファイルが存在しない場合はデフォルト設定を保存します。
        """
        if self.config_file.exists():
            try:
                with open(self.config_file, "r", encoding="utf-8") as f:
                    stored = json.load(f)
                for key, value in stored.items():
                    if key == "tracker" and isinstance(value, dict):
                        self.config["tracker"].update(value)
                    elif key in DEFAULT_CONFIG:
                        self.config[key] = value
                logger.info(f"設定を読み込みました: {self.config_file}")
            except Exception as e:
                logger.error(f"設定の読み込み中にエラーが発生しました: {e}")
                self.save_config()
        else:
            logger.info("設定ファイルが見つかりませんでした。デフォルト設定を使用します。")
            self.save_config()

    def save_config(self):
        """
        現在の設定をファイルに保存します。
        """
        try:
            with open(self.config_file, "w", encoding="utf-8") as f:
                json.dump(self.config, f, indent=4)
            logger.info(f"設定を保存しました: {self.config_file}")
        except Exception as e:
            logger.error(f"設定の保存中にエラーが発生しました: {e}")

    def get_precision(self):
        """
        追跡に用いる十進桁数を取得します。環境変数 CURVETWIST_PRECISION が優先されます。

        Returns:
            int: 十進桁数
        """
        override = os.environ.get(PRECISION_ENV)
        if override:
            try:
                value = int(override)
                if value >= 15:
                    return value
                logger.warning(f"{PRECISION_ENV} が小さすぎるため無視します: {override}")
            except ValueError:
                logger.warning(f"{PRECISION_ENV} の値が不正です: {override}")
        return int(self.config["precision"])

    def set_precision(self, digits):
        """
        追跡精度を設定します。

        Args:
            digits (int): 十進桁数（15 以上 max_precision 以下）
        """
        if isinstance(digits, int) and 15 <= digits <= self.config["max_precision"]:
            self.config["precision"] = digits
            self.save_config()
            logger.info(f"追跡精度を変更しました: {digits}")
        else:
            logger.warning(f"無効な精度が指定されました: {digits}")

    def get_max_precision(self):
        return int(self.config["max_precision"])

    def get_log_level(self):
        level = str(self.config.get("log_level", "WARNING")).upper()
        return level if level in LOG_LEVELS else "WARNING"

    def set_log_level(self, level):
        """
        ログレベルを設定します。

        Args:
            level (str): DEBUG / INFO / WARNING / ERROR / CRITICAL
        """
        if str(level).upper() in LOG_LEVELS:
            self.config["log_level"] = str(level).upper()
            self.save_config()
        else:
            logger.warning(f"無効なログレベルが指定されました: {level}")

    def stores_reports(self):
        return bool(self.config.get("store_reports", True))

    def get_bmt_budget(self):
        """
        BMT 探索の予算を取得します。

        Returns:
            tuple: (探索深さ, 共役子の文字数上限)
        """
        return int(self.config["bmt_depth"]), int(self.config["bmt_conjugator_letters"])

    def get_tracker_settings(self):
        """
        根追跡のステップ制御パラメータを取得します。

        Returns:
            dict: safety, min_step, max_step, loop_vertices, workers
        """
        return dict(self.config["tracker"])
