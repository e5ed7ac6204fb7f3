#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
フィクスチャモデルモジュール

fixtures/ 以下の JSON ファイル（印刷された値と出典のみを含む）を読み込み、
検証済みの FixtureRecord として提供します。

バージョン: 1.0.0
"""

import json
import logging
from pathlib import Path

from models.braid_word import Factorization
from models.matrix import RationalMatrix
from models.polynomial import ExactPolynomial
from models.rational_map import AFFINE_ARITY, DetRep, RationalMap
from utils.conventions import CONVENTIONS
from utils.errors import CurveTwistError, FixtureError

logger = logging.getLogger(__name__)

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures"

SUITE_FILES = {
    "appendix": "appendix.json",
    "node_bm": "node_bm.json",
    "lemmaHE": "lemma_he.json",
    "section4": "section4.json",
}


class FixtureRecord:
    """
    フィクスチャの 1 レコード。
    """

    def __init__(self, id, source="", map=None, image_factors=None, factorization=None,
                 case=None, table=None, raw=None):
        """
        FixtureRecordクラスのコンストラクタ。

        Args:
            id (str): 一意な識別子（例: "appendix-ex5"）
            source (str): 出典（参照表の説明）
            map (RationalMap): 写像
            image_factors (list): 期待される像の因子（ExactPolynomial）
            factorization (Factorization): 期待される分解
            case (int): 期待されるケース番号 1..7
            table (str): 表のラベル
            raw (dict): 元の JSON レコード
        """
        self.id = id
        self.source = source
        self.map = map
        self.image_factors = image_factors or []
        self.factorization = factorization
        self.case = case
        self.table = table
        self.raw = raw or {}

    def to_dict(self):
        return {
            "id": self.id,
            "source": self.source,
            "map": self.map.to_dict() if self.map else None,
            "image_factors": [p.to_string() for p in self.image_factors],
            "factorization": self.factorization.to_dict() if self.factorization else None,
            "case": self.case,
            "table": self.table,
        }

    def __repr__(self):
        return f"FixtureRecord({self.id!r})"


class FixtureManager:
    """
    フィクスチャファイルを読み込み・検証・キャッシュするクラス。
    """

    def __init__(self, fixture_dir=None):
        """
        FixtureManagerクラスのコンストラクタ。

        Args:
            fixture_dir (Path): フィクスチャのディレクトリ（省略時はリポジトリの fixtures/）
        """
        self.fixture_dir = Path(fixture_dir) if fixture_dir else FIXTURE_DIR
        self._cache = {}

    def _read(self, suite):
        name = SUITE_FILES.get(suite)
        if name is None:
            raise FixtureError(f"不明なフィクスチャのスイートです: {suite}")
        path = self.fixture_dir / name
        if not path.exists():
            raise FixtureError(f"フィクスチャファイルが見つかりません: {path}")
        try:
            with open(path, "r", encoding="utf-8") as f:
                data = json.load(f)
        except json.JSONDecodeError as e:
            raise FixtureError(f"フィクスチャファイルの JSON が不正です: {path}: {e}") from e
        records = data.get("records")
        if not isinstance(records, list):
            raise FixtureError(f"records がありません: {path}")
        ids = [r.get("id") for r in records]
        if len(ids) != len(set(ids)) or None in ids:
            raise FixtureError(f"フィクスチャの id が一意ではありません: {path}")
        logger.info(f"フィクスチャを読み込みました: {path} ({len(records)} 件)")
        return records

    def load(self, suite):
        """
        スイートのレコードを読み込みます（キャッシュ付き）。

        Args:
            suite (str): "appendix"、"node_bm"、"lemmaHE"、"section4"

        Returns:
            list: FixtureRecord のリスト
        """
        if suite in self._cache:
            return self._cache[suite]
        records = []
        for raw in self._read(suite):
            try:
                records.append(self._build(raw))
            except CurveTwistError as e:
                raise FixtureError(f"フィクスチャ {raw.get('id')} が不正です: {e}") from e
        self._cache[suite] = records
        return records

    def _build(self, raw):
        rational_map = None
        if "map" in raw and raw["id"] != "section4-degree3-map":
            rational_map = RationalMap(
                raw["map"]["p0"], raw["map"]["p1"], raw["map"]["p2"], arity=AFFINE_ARITY
            )
        elif "map" in raw:
            for text in raw["map"].values():
                ExactPolynomial.parse(text, ("x0", "x1", "x2", "a", "b"))
        image_factors = [ExactPolynomial.parse(text) for text in raw.get("image_factors", [])]
        factorization = None
        if "factorization" in raw:
            factorization = Factorization.from_dict(raw["factorization"])
        for key in ("F1", "F2"):
            if key in raw:
                Factorization.from_dict(raw[key])
        if "target" in raw:
            ExactPolynomial.parse(raw["target"])
        return FixtureRecord(
            id=raw["id"],
            source=raw.get("source", ""),
            map=rational_map,
            image_factors=image_factors,
            factorization=factorization,
            case=raw.get("case"),
            table=raw.get("table"),
            raw=raw,
        )

    def get_record(self, suite, record_id):
        for record in self.load(suite):
            if record.id == record_id:
                return record
        return None

    def appendix_records(self):
        return self.load("appendix")

    def node_bm(self):
        return self.load("node_bm")[0]

    def lemma_he(self):
        """
        Hurwitz 同値の例の (F1, F2, 移動列の文字列) を返します。
        """
        raw = self.load("lemmaHE")[0].raw
        return Factorization.from_dict(raw["F1"]), Factorization.from_dict(raw["F2"]), raw["moves"]

    def section4_pencils(self):
        """
        印刷された行列束を規約台帳の並び順で DetRep に組み立てます。

        Returns:
            list: (id, DetRep, アフィンの目標多項式) のリスト
        """
        order = tuple(CONVENTIONS["pencil_slot_order"])
        pencils = []
        for record in self.load("section4"):
            raw = record.raw
            if "printed_constant" not in raw:
                continue
            rep = DetRep.from_printed_pencil(
                RationalMatrix.from_json(raw["printed_constant"]),
                RationalMatrix.from_json(raw["printed_x"]),
                RationalMatrix.from_json(raw["printed_y"]),
                slot_order=order,
            )
            pencils.append((record.id, rep, ExactPolynomial.parse(raw["target"])))
        return pencils

    def reference_factorizations(self, case):
        """
        ケース番号に対応する参照表の分解のリスト（ケース 7 は type a、type b の順）。
        """
        return [(r.table, r.factorization) for r in self.appendix_records() if r.case == case]
