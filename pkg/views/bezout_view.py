#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Bezout 消去ビューモジュール

Bezout 行列、直線・曲線の像、反転、行列式表現の検証を行う
サブコマンドを提供します。

バージョン: 1.0.0
"""

import logging

from algebra.exact import determinant
from elimination.bezout import (
    bezout_matrix,
    curve_image,
    detrep_verify,
    generalized_bezout,
    image_oracle,
    inversion_image,
    line_image,
)
from models.rational_map import LINE_ARITY, RationalMap
from utils.input_loader import load_detrep, load_map, load_polynomial

logger = logging.getLogger(__name__)


class BezoutView:
    """
    Bezout 消去のサブコマンドを扱うビュークラス。
    """

    def __init__(self, app):
        """
        BezoutViewクラスのコンストラクタ。

        Args:
            app: CurveTwistApp のインスタンス
        """
        self.app = app

    def register(self, subparsers):
        """
        サブコマンドを登録します。

        Args:
            subparsers: argparse のサブパーサー集合
        """
        parser = subparsers.add_parser("bezout", help="一変数 Bezout 行列")
        parser.add_argument("--p", required=True, help="一変数多項式 p")
        parser.add_argument("--q", required=True, help="一変数多項式 q")
        parser.add_argument("--size", type=int, help="行列のサイズ")
        parser.set_defaults(handler=self.bezout)

        parser = subparsers.add_parser("line-image", help="直線の有理写像の像")
        self._add_map_arguments(parser)
        parser.add_argument("--expect", help="期待される像（定数倍まで）")
        parser.set_defaults(handler=self.line_image)

        parser = subparsers.add_parser("gen-bezout", help="一般化 Bezout 行列")
        parser.add_argument("--p", required=True, help="x0, x1, x2 の斉次多項式 p")
        parser.add_argument("--q", required=True, help="x0, x1, x2 の斉次多項式 q")
        parser.add_argument("--n", type=int, help="次数")
        parser.set_defaults(handler=self.gen_bezout)

        parser = subparsers.add_parser("curve-image", help="行列式表現された曲線の像")
        parser.add_argument("--detrep", required=True, help="行列式表現の JSON ファイル")
        self._add_map_arguments(parser)
        parser.add_argument("--expect", help="期待される像（定数倍まで）")
        parser.set_defaults(handler=self.curve_image)

        parser = subparsers.add_parser("invert", help="標準二次変換による像")
        parser.add_argument("--detrep", required=True, help="行列式表現の JSON ファイル")
        parser.add_argument("--expect", help="期待される像（定数倍まで）")
        parser.set_defaults(handler=self.invert)

        parser = subparsers.add_parser("detrep-verify", help="行列式表現の検証")
        parser.add_argument("--detrep", required=True, help="行列式表現の JSON ファイル")
        parser.add_argument("--target", required=True, help="目標の多項式")
        parser.set_defaults(handler=self.detrep_verify)

    def _add_map_arguments(self, parser):
        parser.add_argument("--map", help="写像の JSON ファイル")
        parser.add_argument("--p0", help="成分 p0")
        parser.add_argument("--p1", help="成分 p1")
        parser.add_argument("--p2", help="成分 p2")

    def _check_expected(self, report, image, expected):
        if expected is None:
            return
        target = load_polynomial(expected)
        # アフィンの期待値とは x0 = 1 で比べる
        candidate = image.dehomogenize() if set(target.used_variables()) <= {"x", "y"} else image
        report.run_check(
            "expected-image",
            lambda: (candidate.is_proportional_to(target), f"期待値 {target.to_string()}"),
        )

    def bezout(self, args, report):
        p = load_polynomial(args.p)
        q = load_polynomial(args.q)
        matrix = bezout_matrix(p, q, args.size)
        report.result = {"size": matrix.rows, "matrix": matrix.to_lists()}
        swapped = bezout_matrix(q, p, matrix.rows)
        report.run_check("symmetric", lambda: (matrix.is_symmetric(), ""))
        report.run_check("antisymmetric", lambda: (swapped == -matrix, "B(q, p) = −B(p, q)"))
        return report

    def line_image(self, args, report):
        rational_map = load_map(args.map, args.p0, args.p1, args.p2)
        if rational_map.arity != LINE_ARITY:
            rational_map = RationalMap(*rational_map.components, arity=LINE_ARITY)
        image = line_image(rational_map)
        report.result = {"map": rational_map.to_dict(), "image": image.to_string()}
        report.run_check("image-oracle", lambda: (image_oracle(rational_map, "line", image),
                                                  "q(p0, p1, p2) ≡ 0"))
        self._check_expected(report, image, args.expect)
        logger.info(f"line-image: {image.to_string()}")
        return report

    def gen_bezout(self, args, report):
        p = load_polynomial(args.p, ("x0", "x1", "x2"))
        q = load_polynomial(args.q, ("x0", "x1", "x2"))
        bezout = generalized_bezout(p, q, args.n)
        report.result = bezout.to_dict()
        report.run_check("symmetric", lambda: (bezout.is_symmetric(), ""))
        return report

    def curve_image(self, args, report):
        rep = load_detrep(args.detrep)
        rational_map = load_map(args.map, args.p0, args.p1, args.p2).homogenized()
        curve = determinant(rep.pencil())
        image = curve_image(rep, rational_map)
        report.result = {
            "curve": curve.to_string(),
            "map": rational_map.to_dict(),
            "image": image.to_string(),
            "degree": image.total_degree(),
        }
        report.run_check("image-oracle", lambda: (image_oracle(rational_map, curve, image),
                                                  "Δ | q(p0, p1, p2)"))
        self._check_expected(report, image, args.expect)
        return report

    def invert(self, args, report):
        rep = load_detrep(args.detrep)
        curve = determinant(rep.pencil())
        image = inversion_image(rep)
        report.result = {"curve": curve.to_string(), "image": image.to_string()}
        report.run_check("image-oracle", lambda: (image_oracle(RationalMap.inversion(), curve, image),
                                                  "Δ | q(x1·x2, x0·x2, x0·x1)"))
        self._check_expected(report, image, args.expect)
        return report

    def detrep_verify(self, args, report):
        rep = load_detrep(args.detrep)
        target = load_polynomial(args.target)
        report.result = {"m": rep.m, "target": target.to_string(),
                         "determinant": determinant(rep.pencil()).to_string()}
        report.run_check("detrep-verify", lambda: (detrep_verify(rep, target), f"m = {rep.m}"))
        return report
