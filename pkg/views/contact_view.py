#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
局所交点ビューモジュール

原点の像での交点の重複度（local-mult）と、二本の座標軸の像による
分類（two-lines）のサブコマンドを提供します。

バージョン: 1.0.0
"""

import logging

from contact.contact import (
    MAX_DEPTH,
    conditions_match,
    contact_reports,
    evaluate_conditions,
    multiplicity_from_conditions,
    symbolic_conditions_degree2,
)
from contact.two_lines import CASE_TABLE, classify_two_lines
from models.polynomial import format_fraction
from models.rational_map import AFFINE_ARITY, RationalMap
from utils.input_loader import load_map

logger = logging.getLogger(__name__)


class ContactView:
    """
    局所交点のサブコマンドを扱うビュークラス。
    """

    def __init__(self, app):
        """
        ContactViewクラスのコンストラクタ。

        Args:
            app: CurveTwistApp のインスタンス
        """
        self.app = app
        self.fixture_manager = app.fixture_manager

    def register(self, subparsers):
        parser = subparsers.add_parser("local-mult", help="原点の像での交点の重複度")
        self._add_map_arguments(parser)
        parser.add_argument("--depth", type=int, default=MAX_DEPTH, help="接触列の深さ")
        parser.add_argument("--symbolic", action="store_true",
                            help="係数記号による条件式を計算し、印刷された式と照合する")
        parser.set_defaults(handler=self.local_mult)

        parser = subparsers.add_parser("two-lines", help="二本の座標軸の像による分類")
        self._add_map_arguments(parser)
        parser.set_defaults(handler=self.two_lines)

    def _add_map_arguments(self, parser):
        parser.add_argument("--map", help="写像の JSON ファイル")
        parser.add_argument("--p0", help="成分 p0（x, y の多項式）")
        parser.add_argument("--p1", help="成分 p1")
        parser.add_argument("--p2", help="成分 p2")

    def _affine_map(self, args):
        rational_map = load_map(args.map, args.p0, args.p1, args.p2)
        if rational_map.arity != AFFINE_ARITY:
            rational_map = RationalMap(*rational_map.components, arity=AFFINE_ARITY)
        return rational_map

    def local_mult(self, args, report):
        if args.symbolic and args.map is None and args.p0 is None:
            return self._symbolic(report)
        rational_map = self._affine_map(args)
        x_report, y_report = contact_reports(rational_map, args.depth)
        report.result = {
            "map": rational_map.to_dict(),
            "multiplicity": x_report.multiplicity,
            "reports": [x_report.to_dict(), y_report.to_dict()],
        }
        if args.depth == MAX_DEPTH:
            # 印刷された条件式による独立な判定と照合する
            def cross_check():
                values = evaluate_conditions(rational_map)
                report.result["conditions"] = [format_fraction(v) for v in values]
                expected = multiplicity_from_conditions(rational_map)
                return expected == x_report.multiplicity, f"条件式による重複度 {expected}"

            report.run_check("conditions-cross-check", cross_check)
        if args.symbolic:
            self._symbolic(report)
        return report

    def _symbolic(self, report):
        conditions = symbolic_conditions_degree2()
        report.result["symbolic_conditions"] = [c.to_string() for c in conditions]
        for entry in conditions_match():
            report.add_check(
                f"symbolic-condition-{entry['index']}",
                entry["match"],
                f"{entry['method']} ratio={entry['ratio']}",
            )
        return report

    def two_lines(self, args, report):
        rational_map = self._affine_map(args)
        references = {case: self.fixture_manager.reference_factorizations(case)
                      for case in sorted(set(CASE_TABLE.values()))}
        classification = classify_two_lines(rational_map, references)
        report.result = {"map": rational_map.to_dict(), **classification.to_dict()}
        report.add_check("total-multiplicity", classification.total_multiplicity == 4,
                         f"総和 {classification.total_multiplicity}")
        report.add_check(
            "origin-multiplicity",
            "pass" if classification.origin_consistent else "unknown",
            f"接触列 {classification.origin_multiplicity}、"
            f"終結式 {classification.origin_resultant_multiplicity}",
        )
        report.add_check("reference-factorization", classification.reference_factorization is not None,
                         ", ".join(classification.reference_tables))
        logger.info(f"two-lines: ケース {classification.case}")
        return report
