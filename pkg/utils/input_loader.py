#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
入力ファイル読み込みモジュール

コマンドラインから渡される JSON ファイル（行列式表現、写像、分解）と
多項式の文字列を読み込み、モデルオブジェクトに変換します。

バージョン: 1.0.0
"""

import json
import logging
from pathlib import Path

from models.braid_word import Factorization
from models.matrix import RationalMatrix
from models.polynomial import ExactPolynomial
from models.rational_map import DetRep, RationalMap
from utils.conventions import CONVENTIONS
from utils.errors import ParseError

logger = logging.getLogger(__name__)


def load_json(path):
    """
    JSON ファイルを読み込みます。

    Args:
        path (str | Path): ファイルのパス

    Returns:
        dict: 読み込んだ内容
    """
    path = Path(path)
    if not path.exists():
        raise ParseError(f"入力ファイルが見つかりません: {path}")
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise ParseError(f"入力ファイルの JSON が不正です: {path}: {e}") from e
    logger.debug(f"入力ファイルを読み込みました: {path}")
    return data


def load_polynomial(text, variables=None):
    """
    多項式の文字列を読み込みます。"@" で始まる場合はファイルの中身を読みます。
    """
    if text is None:
        raise ParseError("多項式が指定されていません")
    if text.startswith("@"):
        text = Path(text[1:]).read_text(encoding="utf-8").strip()
    return ExactPolynomial.parse(text, variables)


def load_detrep(path):
    """
    行列式表現を読み込みます。

    {"D0", "D1", "D2"} 形式のほか、印刷された行列束の
    {"printed_constant", "printed_x", "printed_y"} 形式も受け付けます。
    後者は規約台帳の並び順で割り当てます。

    Returns:
        DetRep: 行列式表現
    """
    data = load_json(path)
    if "printed_constant" in data:
        return DetRep.from_printed_pencil(
            RationalMatrix.from_json(data["printed_constant"]),
            RationalMatrix.from_json(data["printed_x"]),
            RationalMatrix.from_json(data["printed_y"]),
            slot_order=tuple(CONVENTIONS["pencil_slot_order"]),
        )
    try:
        return DetRep.from_dict(data)
    except KeyError as e:
        raise ParseError(f"行列式表現に {e} がありません: {path}") from e


def load_map(path=None, p0=None, p1=None, p2=None):
    """
    写像をファイルまたは三つの成分の文字列から作成します。
    """
    if path:
        data = load_json(path)
        try:
            return RationalMap.from_dict(data)
        except KeyError as e:
            raise ParseError(f"写像に {e} がありません: {path}") from e
    if None in (p0, p1, p2):
        raise ParseError("写像には --map か --p0/--p1/--p2 のすべてが必要です")
    return RationalMap(p0, p1, p2)


def load_factorization(path):
    """分解を {"strands": n, "factors": [...]} 形式の JSON から読み込みます。"""
    return Factorization.from_dict(load_json(path))
