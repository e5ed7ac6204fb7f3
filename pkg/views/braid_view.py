#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
組紐ビューモジュール

組紐語の標準形・等号判定、分解の積と不変量、Hurwitz 移動、
BMT 比較のサブコマンドを提供します。

バージョン: 1.0.0
"""

import logging

from braids.artin import artin_images
from braids.builders import full_twist
from braids.garside import canonical_word, equals, normal_form
from braids.hurwitz import (
    apply_moves,
    bmt_compare,
    factorization_invariants,
    factorization_product,
    parse_moves,
)
from models.braid_word import parse_braid
from utils.input_loader import load_factorization

logger = logging.getLogger(__name__)


class BraidView:
    """
    組紐群のサブコマンドを扱うビュークラス。
    """

    def __init__(self, app):
        """
        BraidViewクラスのコンストラクタ。

        Args:
            app: CurveTwistApp のインスタンス
        """
        self.app = app
        self.config_manager = app.config_manager

    def register(self, subparsers):
        braid = subparsers.add_parser("braid", help="組紐語の計算")
        actions = braid.add_subparsers(dest="braid_action", required=True)

        parser = actions.add_parser("nf", help="Garside 左標準形")
        parser.add_argument("--n", type=int, required=True, help="ストランド数")
        parser.add_argument("--w", required=True, help="組紐語（例: \"s1 s2^-1\"）")
        parser.set_defaults(handler=self.normal_form)

        parser = actions.add_parser("eq", help="二つの語の等号判定")
        parser.add_argument("--n", type=int, required=True, help="ストランド数")
        parser.add_argument("--w1", required=True, help="一つ目の語")
        parser.add_argument("--w2", required=True, help="二つ目の語")
        parser.set_defaults(handler=self.equality)

        parser = actions.add_parser("product", help="分解の積")
        parser.add_argument("--fact", required=True, help="分解の JSON ファイル")
        parser.set_defaults(handler=self.product)

        parser = actions.add_parser("invariants", help="分解の不変量")
        parser.add_argument("--fact", required=True, help="分解の JSON ファイル")
        parser.set_defaults(handler=self.invariants)

        parser = subparsers.add_parser("hurwitz", help="Hurwitz 移動の適用")
        parser.add_argument("--fact", required=True, help="分解の JSON ファイル")
        parser.add_argument("--moves", required=True, help="移動列（例: \"R1^-1 R5 R4\"）")
        parser.add_argument("--expect", help="期待される分解の JSON ファイル")
        parser.set_defaults(handler=self.hurwitz)

        parser = subparsers.add_parser("bmt-compare", help="二つの分解の BMT 比較（有界探索）")
        parser.add_argument("--fact1", required=True, help="一つ目の分解の JSON ファイル")
        parser.add_argument("--fact2", required=True, help="二つ目の分解の JSON ファイル")
        parser.add_argument("--depth", type=int, help="Hurwitz 移動の数の上限")
        parser.add_argument("--conjugator-letters", type=int, help="共役子の文字数の上限")
        parser.set_defaults(handler=self.bmt_compare)

    def normal_form(self, args, report):
        word = parse_braid(args.w, args.n)
        form = normal_form(word)
        report.result = {
            "word": word.to_string(),
            "normal_form": form.to_dict(),
            "canonical_word": canonical_word(word).to_string(),
        }
        report.run_check("canonical-word", lambda: (equals(canonical_word(word), word), "標準形の語が元の語と等しい"))
        return report

    def equality(self, args, report):
        first = parse_braid(args.w1, args.n)
        second = parse_braid(args.w2, args.n)
        same = equals(first, second)
        report.result = {"w1": first.to_string(), "w2": second.to_string(), "equal": same}
        report.add_check("equal", same, "Garside 標準形の比較")
        # 自由群への作用で独立に確かめる
        report.run_check(
            "artin-oracle",
            lambda: ((artin_images(first) == artin_images(second)) == same, "Artin 作用との一致"),
        )
        return report

    def product(self, args, report):
        factorization = load_factorization(args.fact)
        product_word = factorization_product(factorization)
        is_full_twist = equals(product_word, full_twist(factorization.strands))
        report.result = {
            "product": product_word.to_string(),
            "normal_form": normal_form(product_word).to_dict(),
            "is_full_twist": is_full_twist,
        }
        report.add_check("product-full-twist", "pass" if is_full_twist else "unknown", "積 = Δ²")
        return report

    def invariants(self, args, report):
        factorization = load_factorization(args.fact)
        invariants = factorization_invariants(factorization)
        report.result = invariants
        report.add_check(
            "exponent-sum",
            invariants["total_exponent_sum"] == invariants["expected_exponent_sum"],
            f"{invariants['total_exponent_sum']} / {invariants['expected_exponent_sum']}",
        )
        report.add_check("product-full-twist", invariants["product_is_full_twist"], "積 = Δ²")
        return report

    def hurwitz(self, args, report):
        factorization = load_factorization(args.fact)
        moves = parse_moves(args.moves)
        moved = apply_moves(factorization, moves)
        report.result = {
            "moves": [m.to_string() for m in moves],
            "factorization": moved.to_dict(),
            "factors": [f.to_string() for f in moved],
        }
        report.add_check(
            "product-invariant",
            equals(factorization_product(moved), factorization_product(factorization)),
            "移動の前後で積が等しい",
        )
        if args.expect:
            expected = load_factorization(args.expect)

            def elementwise():
                if len(expected) != len(moved):
                    return False, f"因子数 {len(moved)} ≠ {len(expected)}"
                mismatched = [k + 1 for k, (a, b) in enumerate(zip(moved, expected)) if not equals(a, b)]
                return not mismatched, f"不一致の位置 {mismatched}" if mismatched else "全因子が一致"

            report.run_check("expected-factorization", elementwise)
        return report

    def bmt_compare(self, args, report):
        first = load_factorization(args.fact1)
        second = load_factorization(args.fact2)
        depth, letters = self.config_manager.get_bmt_budget()
        depth = args.depth if args.depth is not None else depth
        letters = args.conjugator_letters if args.conjugator_letters is not None else letters
        workers = int(self.config_manager.get_tracker_settings().get("workers", 1))
        result = bmt_compare(first, second, depth=depth, conjugator_letters=letters, workers=workers)
        report.result = result.to_dict()
        report.add_check("bmt-equivalent", "pass" if result.found else "unknown", result.note)
        logger.info(f"bmt-compare: {result.status}（探索 {result.explored} 状態）")
        return report
