#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
組紐モノドロミービューモジュール

アフィン曲線の組紐モノドロミー分解を数値的に計算する
monodromy サブコマンドを提供します。

バージョン: 1.0.0
"""

import logging
from pathlib import Path

from braids.hurwitz import bmt_compare
from monodromy.plot import plot_traces, write_trace_csv
from monodromy.tracker import braid_monodromy
from utils.input_loader import load_factorization, load_polynomial

logger = logging.getLogger(__name__)


class MonodromyView:
    """
    組紐モノドロミーのサブコマンドを扱うビュークラス。
    """

    def __init__(self, app):
        """
        MonodromyViewクラスのコンストラクタ。

        Args:
            app: CurveTwistApp のインスタンス
        """
        self.app = app
        self.config_manager = app.config_manager

    def register(self, subparsers):
        parser = subparsers.add_parser("monodromy", help="組紐モノドロミー分解の数値計算")
        parser.add_argument("--poly", required=True, help="x, y の多項式 q(x, y)")
        parser.add_argument("--precision", type=int, help="十進桁数（既定は設定値）")
        parser.add_argument("--max-precision", type=int, help="精度の上限")
        parser.add_argument("--plot", help="軌跡の出力先（拡張子なし。.csv と .png を書き出す）")
        parser.add_argument("--expect", help="比較する分解の JSON ファイル")
        parser.set_defaults(handler=self.monodromy)

    def monodromy(self, args, report):
        curve = load_polynomial(args.poly, ("x", "y"))
        precision = args.precision or self.config_manager.get_precision()
        max_precision = args.max_precision or self.config_manager.get_max_precision()
        result = braid_monodromy(
            curve,
            precision=precision,
            max_precision=max(max_precision, precision),
            settings=self.config_manager.get_tracker_settings(),
            record_trace=bool(args.plot),
        )
        report.result = result.to_dict()
        invariants = result.invariants
        if invariants:
            report.add_check(
                "exponent-sum",
                invariants["total_exponent_sum"] == invariants["expected_exponent_sum"],
                f"{invariants['total_exponent_sum']} / {invariants['expected_exponent_sum']}",
            )
            report.add_check("product-full-twist", invariants["product_is_full_twist"], "積 = Δ²")

        if args.plot:
            prefix = Path(args.plot)
            csv_path = write_trace_csv(result.loops, prefix.with_suffix(".csv"))
            png_path = plot_traces(result.loops, prefix.with_suffix(".png"))
            report.result["plot"] = {"csv": str(csv_path), "png": str(png_path)}

        if args.expect:
            expected = load_factorization(args.expect)
            depth, letters = self.config_manager.get_bmt_budget()
            comparison = bmt_compare(result.factorization, expected, depth=depth, conjugator_letters=letters)
            report.result["comparison"] = comparison.to_dict()
            report.add_check("bmt-equivalent", "pass" if comparison.found else "unknown", comparison.note)
        logger.info(f"monodromy: 因子 {len(result.factorization)} 個")
        return report
