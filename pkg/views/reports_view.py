#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
実行レポート一覧ビューモジュール

保存された実行レポートの一覧表示・詳細表示・削除を行う
reports サブコマンドを提供します。

バージョン: 1.0.0
"""

import logging

from components.report_card import ReportCard

logger = logging.getLogger(__name__)


class ReportsView:
    """
    保存済みレポートを扱うビュークラス。
    """

    def __init__(self, app):
        """
        ReportsViewクラスのコンストラクタ。

        Args:
            app: CurveTwistApp のインスタンス
        """
        self.app = app
        self.report_manager = app.report_manager

    def register(self, subparsers):
        parser = subparsers.add_parser("reports", help="保存された実行レポート")
        parser.add_argument("--command", dest="filter_command", help="サブコマンド名で絞り込む")
        parser.add_argument("--status", choices=("pass", "fail", "error"), help="状態で絞り込む")
        parser.add_argument("--show", metavar="ID", help="指定 ID のレポートを表示する")
        parser.add_argument("--delete", metavar="ID", help="指定 ID のレポートを削除する")
        parser.set_defaults(handler=self.reports, store=False)

    def _find(self, prefix):
        # ID の先頭一致で探す
        for stored in self.report_manager.get_all_reports():
            if stored.id.startswith(prefix):
                return stored
        return None

    def reports(self, args, report):
        if args.show:
            stored = self._find(args.show)
            report.add_check("found", stored is not None, args.show)
            if stored is not None:
                report.result = stored.to_dict()
            return report
        if args.delete:
            stored = self._find(args.delete)
            deleted = stored is not None and self.report_manager.delete_report(stored.id)
            report.add_check("deleted", deleted, args.delete)
            return report
        found = self.report_manager.search_reports(command=args.filter_command, status=args.status)
        report.result = {
            "count": len(found),
            "reports": [ReportCard(r).render_line() for r in found],
        }
        logger.info(f"保存済みレポート {len(found)} 件")
        return report
