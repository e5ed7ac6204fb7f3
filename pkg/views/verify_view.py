#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
検証スイートビューモジュール

フィクスチャに収録された印刷値に対して各モジュールを通しで検証する
verify サブコマンドを提供します。スイートは決まった順序で実行され、
チェックごとの結果が RunReport に記録されます。

スイート:
- appendix: 8 つの写像の像の二次曲線、原点の重複度、二直線の分類
- section4: 印刷された行列束の行列式表現の検証
- lemmaHE: Hurwitz 移動列による二つの表の移り合い
- tables: 表の分解の指数和と積
- conditions: 係数記号による条件式と印刷された式の照合
- calibration: 恒等写像と反転による像の較正
- monodromy: 円、C1、例 1 の像曲線の数値的な組紐モノドロミー

バージョン: 1.0.0
"""

import logging
import random
from collections import Counter
from functools import reduce

from algebra.exact import determinant
from braids.builders import full_twist
from braids.garside import equals
from braids.hurwitz import apply_moves, factorization_invariants, factorization_product, parse_moves
from contact.contact import (
    conditions_match,
    intersection_multiplicity_origin,
    multiplicity_from_conditions,
)
from contact.two_lines import CASE_TABLE, classify_two_lines
from elimination.bezout import (
    curve_image,
    detrep_verify,
    image_oracle,
    inversion_image,
    line_image,
)
from models.matrix import RationalMatrix
from models.polynomial import ExactPolynomial, PROJECTIVE_VARIABLES
from models.rational_map import DetRep, RationalMap
from monodromy.tracker import braid_monodromy
from utils.errors import CurveTwistError

logger = logging.getLogger(__name__)

SUITES = ("appendix", "section4", "lemmaHE", "tables", "conditions", "calibration", "monodromy")

CALIBRATION_SEED = 20240601
IDENTITY_SAMPLES = 3
INVERSION_SAMPLES = 5

# (名前, 曲線, 因子数, 指数和の多重集合)
MONODROMY_CASES = (
    ("circle", "x^2+y^2-1", 2, (1, 1)),
    ("node-bm-c1", None, 5, (1, 1, 1, 1, 2)),
    ("appendix-ex1-image", None, 8, None),
)


def _random_detrep(rng, m, invertible_slots=False):
    # 対称な整数行列の三つ組（行列式が 0 でないもの）
    while True:
        matrices = []
        for _ in range(3):
            grid = [[0] * m for _ in range(m)]
            for i in range(m):
                for j in range(i, m):
                    grid[i][j] = grid[j][i] = rng.randint(-3, 3)
            matrices.append(RationalMatrix(grid))
        rep = DetRep(*matrices)
        if determinant(rep.pencil()).is_zero():
            continue
        if invertible_slots and any(determinant(mat).is_zero() for mat in matrices):
            continue
        return rep


class VerifyView:
    """
    検証スイートを実行するビュークラス。
    """

    def __init__(self, app):
        """
        VerifyViewクラスのコンストラクタ。

        Args:
            app: CurveTwistApp のインスタンス
        """
        self.app = app
        self.config_manager = app.config_manager
        self.fixture_manager = app.fixture_manager
        self.suites = {
            "appendix": self.suite_appendix,
            "section4": self.suite_section4,
            "lemmaHE": self.suite_lemma_he,
            "tables": self.suite_tables,
            "conditions": self.suite_conditions,
            "calibration": self.suite_calibration,
            "monodromy": self.suite_monodromy,
        }

    def register(self, subparsers):
        parser = subparsers.add_parser("verify", help="検証スイートの実行")
        parser.add_argument("--suite", required=True, choices=SUITES + ("all",), help="スイート名")
        parser.set_defaults(handler=self.verify)

    def verify(self, args, report):
        """
        指定されたスイート（all ならすべて）を順に実行します。
        """
        names = SUITES if args.suite == "all" else (args.suite,)
        report.result = {"suites": {}}
        for name in names:
            before = len(report.checks)
            logger.info(f"スイート {name} を実行します")
            self.suites[name](report)
            checks = report.checks[before:]
            report.result["suites"][name] = {
                "checks": len(checks),
                "failed": sum(1 for c in checks if c["status"] == "fail"),
            }
        return report

    # ------------------------------------------------------------------
    # 8 つの二次写像
    # ------------------------------------------------------------------
    def suite_appendix(self, report):
        references = {case: self.fixture_manager.reference_factorizations(case)
                      for case in sorted(set(CASE_TABLE.values()))}
        for record in self.fixture_manager.appendix_records():
            for axis in ("x-axis", "y-axis"):
                report.run_check(f"{record.id}/line-image/{axis}",
                                 lambda r=record, a=axis: self._axis_image(r, a))
            report.run_check(f"{record.id}/multiplicity", lambda r=record: self._origin_multiplicity(r))
            report.run_check(f"{record.id}/two-lines", lambda r=record: self._two_lines(r, references))

    def _axis_image(self, record, axis):
        image = line_image(record.map.restrict_to_axis(axis)).dehomogenize()
        for k, factor in enumerate(record.image_factors):
            if image.is_proportional_to(factor):
                return True, f"因子 {k + 1} と一致"
        return False, f"像 {image.to_string()} が印刷された因子と一致しません"

    def _origin_multiplicity(self, record):
        multiplicity = intersection_multiplicity_origin(record.map)
        by_conditions = multiplicity_from_conditions(record.map)
        # 表には原点の像の局所因子 σ^{2m} が現れる
        local_factor = any(f.exponent_sum() == 2 * multiplicity for f in record.factorization)
        ok = multiplicity == by_conditions and local_factor
        return ok, f"重複度 {multiplicity}（条件式 {by_conditions}、表の局所因子 {'あり' if local_factor else 'なし'}）"

    def _two_lines(self, record, references):
        classification = classify_two_lines(record.map, references)
        ok = classification.case == record.case and classification.reference_factorization is not None
        return ok, f"ケース {classification.case}（期待 {record.case}）"

    # ------------------------------------------------------------------
    # 印刷された行列束
    # ------------------------------------------------------------------
    def suite_section4(self, report):
        for record_id, rep, target in self.fixture_manager.section4_pencils():
            report.run_check(f"{record_id}/detrep-verify",
                             lambda r=rep, t=target: (detrep_verify(r, t), f"m = {r.m}, {t.to_string()}"))

    # ------------------------------------------------------------------
    # Hurwitz 移動
    # ------------------------------------------------------------------
    def suite_lemma_he(self, report):
        def check():
            first, second, moves = self.fixture_manager.lemma_he()
            moved = apply_moves(first, parse_moves(moves))
            if len(moved) != len(second):
                return False, "因子数が一致しません"
            mismatched = [k + 1 for k, (a, b) in enumerate(zip(moved, second)) if not equals(a, b)]
            return not mismatched, f"{moves}: 不一致の位置 {mismatched}" if mismatched else moves

        report.run_check("lemmaHE/moves", check)

    # ------------------------------------------------------------------
    # 表の不変量
    # ------------------------------------------------------------------
    def suite_tables(self, report):
        records = [r for r in self.fixture_manager.appendix_records() if r.factorization is not None]
        records.append(self.fixture_manager.node_bm())
        for record in records:
            invariants = factorization_invariants(record.factorization)
            total, expected = invariants["total_exponent_sum"], invariants["expected_exponent_sum"]
            report.add_check(f"{record.table}/exponent-sum", total == expected, f"{total} / {expected}")
            if invariants["product_is_full_twist"]:
                report.add_check(f"{record.table}/product", "pass", "積 = Δ²")
            else:
                product = factorization_product(record.factorization)
                report.add_check(f"{record.table}/product", "unknown",
                                 f"積 {product.to_string()} が Δ² と一致しません")

    # ------------------------------------------------------------------
    # 記号的な条件式
    # ------------------------------------------------------------------
    def suite_conditions(self, report):
        try:
            entries = conditions_match()
        except CurveTwistError as e:
            report.add_check("conditions", "fail", str(e))
            return
        for entry in entries:
            report.add_check(f"conditions/{entry['index']}", entry["match"],
                             f"{entry['method']} ratio={entry['ratio']}")

    # ------------------------------------------------------------------
    # 曲線の像の較正
    # ------------------------------------------------------------------
    def suite_calibration(self, report):
        rng = random.Random(CALIBRATION_SEED)
        identity = RationalMap.identity()
        for k in range(IDENTITY_SAMPLES):
            rep = _random_detrep(rng, k + 1)
            report.run_check(
                f"calibration/identity-{k + 1}",
                lambda r=rep: (curve_image(r, identity).is_proportional_to(determinant(r.pencil())),
                               f"m = {r.m}"),
            )

        line = DetRep([[1]], [[1]], [[1]])
        expected = ExactPolynomial.parse("x0*x1+x0*x2+x1*x2", PROJECTIVE_VARIABLES)
        report.run_check("calibration/inversion-line",
                         lambda: (inversion_image(line).is_proportional_to(expected), expected.to_string()))

        inversion = RationalMap.inversion()
        for k in range(INVERSION_SAMPLES):
            rep = _random_detrep(rng, 1 + k % 2, invertible_slots=True)

            def oracle(r=rep):
                curve = determinant(r.pencil())
                return image_oracle(inversion, curve, inversion_image(r)), f"m = {r.m}, {curve.to_string()}"

            report.run_check(f"calibration/inversion-oracle-{k + 1}", oracle)

    # ------------------------------------------------------------------
    # 数値的な組紐モノドロミー
    # ------------------------------------------------------------------
    def _monodromy_curve(self, name, text):
        if text is not None:
            return text
        if name == "node-bm-c1":
            return self.fixture_manager.node_bm().raw["curve"]
        record = self.fixture_manager.get_record("appendix", "appendix-ex1")
        return reduce(lambda a, b: a * b, record.image_factors)

    def suite_monodromy(self, report):
        precision = self.config_manager.get_precision()
        max_precision = max(self.config_manager.get_max_precision(), precision)
        settings = self.config_manager.get_tracker_settings()
        for name, text, count, sums in MONODROMY_CASES:
            def check(name=name, text=text, count=count, sums=sums):
                result = braid_monodromy(self._monodromy_curve(name, text), precision, max_precision, settings)
                factorization = result.factorization
                found = sorted(f.exponent_sum() for f in factorization)
                ok = len(factorization) == count and equals(
                    factorization_product(factorization), full_twist(factorization.strands)
                )
                if sums is not None:
                    ok = ok and Counter(found) == Counter(sums)
                return ok, f"{len(factorization)} 因子、指数和 {found}: {factorization.to_string()}"

            report.run_check(f"monodromy/{name}", check)
