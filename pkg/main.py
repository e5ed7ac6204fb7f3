#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
curvetwist - 平面曲線の二次変換と組紐モノドロミー

このスクリプトは、curvetwist のコマンドラインのメインエントリーポイントです。
二次の有理写像による平面曲線の像を厳密に計算し、像曲線の組紐モノドロミー分解を
求め、印刷された表と照合します。

主な機能:
- Bezout 行列による直線・曲線の像と行列式表現の検証
- 原点の像での交点の重複度と二直線の分類
- 組紐語の標準形、Hurwitz 移動、BMT 比較
- 数値的な組紐モノドロミー分解
- フィクスチャに対する検証スイートと実行レポートの保存

終了コード: 0 すべて成功、1 失敗あり、2 使い方・入力ファイルの誤り

バージョン: 1.0.0
"""

import os
import sys
import argparse
import logging

# 内部モジュールのインポート
sys.path.append(os.path.dirname(os.path.abspath(__file__)))
from components.report_card import ReportCard
from models.fixture import FixtureManager
from models.run_report import RunReport, RunReportManager
from utils.config_manager import ConfigManager, LOG_LEVELS
from utils.conventions import conventions_dict
from utils.errors import CurveTwistError, DimensionError, FixtureError, ParseError
from views.bezout_view import BezoutView
from views.braid_view import BraidView
from views.contact_view import ContactView
from views.monodromy_view import MonodromyView
from views.reports_view import ReportsView
from views.verify_view import VerifyView

logger = logging.getLogger(__name__)

# 終了コード 2 として扱う入力の誤り
USAGE_ERRORS = (ParseError, FixtureError, DimensionError)


class UsageError(Exception):
    """argparse の使い方の誤り。"""


class _Parser(argparse.ArgumentParser):
    # 使い方の誤りで終了せず例外を送出する
    def error(self, message):
        raise UsageError(message)


def _add_json_flag(parser):
    # サブコマンドの後ろにも --json を書けるようにする
    parser.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="レポートを JSON で出力する")
    for action in parser._actions:
        if isinstance(action, argparse._SubParsersAction):
            for child in action.choices.values():
                _add_json_flag(child)


class CurveTwistApp:
    """
    curvetwist アプリケーションのメインクラス。
    設定・フィクスチャ・レポートのマネージャーを保持し、サブコマンドをビューに振り分けます。
    """

    def __init__(self, config_manager=None, report_manager=None, fixture_manager=None):
        """
        CurveTwistAppクラスのコンストラクタ。
        必要なマネージャーとビューを初期化します。
        """
        self.config_manager = config_manager or ConfigManager()
        self.report_manager = report_manager or RunReportManager()
        self.fixture_manager = fixture_manager or FixtureManager()

        self.views = {
            "bezout": BezoutView(self),
            "contact": ContactView(self),
            "braid": BraidView(self),
            "monodromy": MonodromyView(self),
            "verify": VerifyView(self),
            "reports": ReportsView(self),
        }
        self.parser = self.build_parser()

    def build_parser(self):
        """
        全サブコマンドを登録した引数パーサーを作成します。
        """
        parser = _Parser(prog="curvetwist", description="平面曲線の二次変換と組紐モノドロミー")
        parser.add_argument("--conventions", action="store_true", help="規約台帳を表示する")
        parser.add_argument("--json", action="store_true", help="レポートを JSON で出力する")
        parser.add_argument("--log-level", choices=LOG_LEVELS, help="ログレベル")
        subparsers = parser.add_subparsers(dest="command", parser_class=_Parser)
        for view in self.views.values():
            view.register(subparsers)
        for child in subparsers.choices.values():
            _add_json_flag(child)
        return parser

    def cmd_dispatch(self, argv):
        """
        引数列を解析して対応するビューに振り分けます。

        Args:
            argv (list): サブコマンドと引数の列

        Returns:
            RunReport: 実行レポート（使い方の誤りは error に記録され終了コード 2）
        """
        argv = list(argv)
        report = RunReport(command=argv)
        try:
            args = self.parser.parse_args(argv)
        except UsageError as e:
            logger.error(f"使い方の誤り: {e}")
            report.error = f"usage: {e}"
            return report

        if args.conventions:
            report.result = {"conventions": conventions_dict(), "fingerprint": report.conventions_fingerprint}
            if args.command is None:
                return report
        elif args.command is None:
            report.error = "usage: サブコマンドが指定されていません"
            return report

        logger.info(f"コマンド実行: {args.command}")
        try:
            args.handler(args, report)
        except USAGE_ERRORS as e:
            logger.error(f"入力エラー: {e}")
            report.error = f"{type(e).__name__}: {e}"
        except CurveTwistError as e:
            logger.error(f"コマンド {args.command} が失敗しました: {e}")
            report.add_check(args.command, "fail", f"{type(e).__name__}: {e}")
        except Exception as e:
            logger.error(f"コマンド {args.command} の実行中にエラーが発生しました: {e}", exc_info=True)
            report.add_check(args.command, "fail", f"{type(e).__name__}: {e}")

        if getattr(args, "store", True) and self.config_manager.stores_reports():
            self.report_manager.save_report(report)
        return report


def configure_logging(level, log_dir):
    """
    ロギングを設定します（端末とログファイル）。

    Args:
        level (str): ログレベル
        log_dir (Path): ログファイルを置くディレクトリ
    """
    logging.basicConfig(
        level=getattr(logging, level),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=[
            logging.FileHandler(log_dir / "curvetwist.log", encoding="utf-8"),
            logging.StreamHandler()
        ]
    )


def main(argv=None):
    """
    アプリケーションのメインエントリポイント。

    Returns:
        int: 終了コード
    """
    argv = sys.argv[1:] if argv is None else list(argv)
    app = CurveTwistApp()
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--log-level", choices=LOG_LEVELS)
    known, _ = pre.parse_known_args(argv)
    configure_logging(known.log_level or app.config_manager.get_log_level(), app.config_manager.config_dir)

    report = app.cmd_dispatch(argv)
    card = ReportCard(report)
    print(card.render_json() if "--json" in argv else card.render_text())
    if report.error:
        print(app.parser.format_usage(), file=sys.stderr, end="")
    return report.exit_code


if __name__ == "__main__":
    try:
        sys.exit(main())
    except Exception as e:
        logger.error(f"アプリケーションの実行中にエラーが発生しました: {e}", exc_info=True)
        sys.exit(1)
