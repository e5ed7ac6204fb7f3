#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
実行レポートモデルモジュール

このモジュールは、コマンド実行ごとのレポート（チェック結果、所要時間、
規約のフィンガープリント）のデータモデルと、SQLite への保存・取得を提供します。

バージョン: 1.0.0
"""

import os
import json
import time
import uuid
import datetime
import logging
from pathlib import Path
from sqlitedict import SqliteDict

from utils.config_manager import config_home
from utils.conventions import fingerprint
from utils.errors import CurveTwistError

logger = logging.getLogger(__name__)

STATUSES = ("pass", "fail", "unknown")


class RunReport:
    """
    実行レポートのデータモデルクラス。
    1 回のコマンド実行のチェック結果と出力をまとめます。
    """

    def __init__(self, command=None, checks=None, result=None, created_at=None,
                 conventions_fingerprint=None):
        """
        RunReportクラスのコンストラクタ。

        Args:
            command (list): 実行したコマンドの引数列
            checks (list): チェック結果 [{'name': str, 'status': str, 'detail': str, 'seconds': float}, ...]
            result (dict): コマンドの出力（JSON 化可能な辞書）
            created_at (datetime): 作成日時
            conventions_fingerprint (str): 規約のフィンガープリント（省略時は現在の値）
        """
        self.id = str(uuid.uuid4())
        self.command = list(command or [])
        self.checks = list(checks or [])
        self.result = result or {}
        self.created_at = created_at or datetime.datetime.now()
        self.conventions_fingerprint = conventions_fingerprint or fingerprint()
        self.error = None

    def add_check(self, name, status, detail="", seconds=0.0):
        """
        チェック結果を追加します。

        Args:
            name (str): チェック名
            status (str | bool): "pass"、"fail"、"unknown"、または真偽値
            detail (str): 補足
            seconds (float): 所要時間（秒）

        Returns:
            dict: 追加したチェック
        """
        if isinstance(status, bool):
            status = "pass" if status else "fail"
        if status not in STATUSES:
            raise ValueError(f"不明なチェック状態です: {status}")
        check = {"name": name, "status": status, "detail": str(detail), "seconds": round(float(seconds), 4)}
        self.checks.append(check)
        if status == "fail":
            logger.warning(f"チェックが失敗しました: {name} {detail}")
        return check

    def run_check(self, name, check):
        """
        チェック関数を実行し、所要時間とともに結果を追加します。

        Args:
            name (str): チェック名
            check (callable): (状態, 補足) を返す引数なしの関数

        Returns:
            dict: 追加したチェック
        """
        started = time.perf_counter()
        try:
            status, detail = check()
        except CurveTwistError as e:
            status, detail = "fail", f"{type(e).__name__}: {e}"
            logger.error(f"チェック {name} でエラーが発生しました: {detail}")
        return self.add_check(name, status, detail, time.perf_counter() - started)

    def count(self, status):
        return sum(1 for c in self.checks if c["status"] == status)

    @property
    def passed(self):
        return self.count("fail") == 0

    @property
    def status(self):
        """"error"、"pass" または "fail"。"""
        if self.error:
            return "error"
        return "pass" if self.passed else "fail"

    @property
    def exit_code(self):
        if self.error:
            return 2
        return 0 if self.passed else 1

    @property
    def total_seconds(self):
        return round(sum(c["seconds"] for c in self.checks), 4)

    def to_dict(self):
        """
        実行レポートを辞書形式に変換します。

        Returns:
            dict: 実行レポートの辞書表現
        """
        return {
            "id": self.id,
            "command": self.command,
            "status": self.status,
            "error": self.error,
            "summary": {s: self.count(s) for s in STATUSES},
            "checks": self.checks,
            "timings": {"total_seconds": self.total_seconds},
            "conventions_fingerprint": self.conventions_fingerprint,
            "result": self.result,
            "created_at": self.created_at.isoformat(),
        }

    @classmethod
    def from_dict(cls, data):
        """
        辞書形式から実行レポートを作成します。

        Args:
            data (dict): 実行レポートの辞書表現

        Returns:
            RunReport: 実行レポートオブジェクト
        """
        report = cls(
            command=data.get("command", []),
            checks=data.get("checks", []),
            result=data.get("result", {}),
            conventions_fingerprint=data.get("conventions_fingerprint"),
        )
        report.id = data.get("id", report.id)
        report.error = data.get("error")
        if "created_at" in data:
            report.created_at = datetime.datetime.fromisoformat(data["created_at"])
        return report


class RunReportManager:
    """
    実行レポートの保存と取得を行うクラス。
    """

    def __init__(self, data_dir=None):
        """
        RunReportManagerクラスのコンストラクタ。

        Args:
            data_dir (Path, optional): データディレクトリ（省略時は設定ディレクトリの data/）
        """
        self.data_dir = Path(data_dir) if data_dir else config_home() / "data"
        self.db_file = self.data_dir / "reports.sqlite"
        self.reports_cache = {}

        # データディレクトリの作成
        if not self.data_dir.exists():
            os.makedirs(self.data_dir, exist_ok=True)
            logger.info(f"データディレクトリを作成しました: {self.data_dir}")

    def save_report(self, report):
        """
        実行レポートを保存します。

        Args:
            report (RunReport): 保存するレポート

        Returns:
            str: 保存したレポートの ID（失敗時は None）
        """
        try:
            with SqliteDict(str(self.db_file), tablename="reports", autocommit=True) as db:
                db[report.id] = json.dumps(report.to_dict(), ensure_ascii=False)
                self.reports_cache[report.id] = report
                logger.info(f"実行レポートを保存しました: ID={report.id}")
                return report.id
        except Exception as e:
            logger.error(f"実行レポートの保存に失敗しました: {e}")
            return None

    def get_report(self, report_id):
        """
        指定された ID の実行レポートを取得します。

        Returns:
            RunReport: 取得したレポート。存在しない場合は None
        """
        if report_id in self.reports_cache:
            return self.reports_cache[report_id]
        try:
            with SqliteDict(str(self.db_file), tablename="reports") as db:
                if report_id not in db:
                    return None
                report = RunReport.from_dict(json.loads(db[report_id]))
                self.reports_cache[report_id] = report
                return report
        except Exception as e:
            logger.error(f"実行レポートの取得に失敗しました: ID={report_id}, エラー={e}")
            return None

    def delete_report(self, report_id):
        try:
            with SqliteDict(str(self.db_file), tablename="reports", autocommit=True) as db:
                if report_id in db:
                    del db[report_id]
                    self.reports_cache.pop(report_id, None)
                    logger.info(f"実行レポートを削除しました: ID={report_id}")
                    return True
                return False
        except Exception as e:
            logger.error(f"実行レポートの削除に失敗しました: ID={report_id}, エラー={e}")
            return False

    def get_all_reports(self):
        """
        すべての実行レポートを作成日時の降順で取得します。
        """
        reports = []
        try:
            with SqliteDict(str(self.db_file), tablename="reports") as db:
                keys = list(db.keys())
            for report_id in keys:
                report = self.get_report(report_id)
                if report:
                    reports.append(report)
            reports.sort(key=lambda r: r.created_at, reverse=True)
            return reports
        except Exception as e:
            logger.error(f"すべての実行レポートの取得に失敗しました: {e}")
            return []

    def search_reports(self, command=None, status=None):
        """
        サブコマンド名や状態でレポートを絞り込みます。

        Args:
            command (str, optional): サブコマンド名（引数列の先頭）
            status (str, optional): "pass"、"fail" または "error"
        """
        filtered = []
        for report in self.get_all_reports():
            if command and (not report.command or report.command[0] != command):
                continue
            if status and report.status != status:
                continue
            filtered.append(report)
        return filtered
