#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
組紐語の構成モジュール

全ひねり Δ²、半ひねり Δ、局所モノドロミーの語を構成します。

バージョン: 1.0.0
"""

from models.braid_word import BraidWord
from utils.errors import DimensionError


def full_twist(n):
    """
    全ひねり (σ1σ2⋯σ_{n−1})^n を返します。指数和は n(n−1) です。

    Args:
        n (int): ストランド数（2 以上）
    """
    if n < 2:
        raise DimensionError(f"ストランド数は 2 以上です: {n}")
    return BraidWord(n, [(i, 1) for i in range(1, n)] * n)


def half_twist(n):
    """Garside 元 Δ = (σ1⋯σ_{n−1})(σ1⋯σ_{n−2})⋯σ1。"""
    if n < 2:
        raise DimensionError(f"ストランド数は 2 以上です: {n}")
    letters = []
    for top in range(n - 1, 0, -1):
        letters.extend((i, 1) for i in range(1, top + 1))
    return BraidWord(n, letters)


def local_monodromy_word(multiplicity, position, n):
    """
    重複度 m の交点の局所モノドロミー σ_i^{2m} を返します。

    Args:
        multiplicity (int): 1..4
        position (int): 生成元番号 i
        n (int): ストランド数
    """
    if not 1 <= multiplicity <= 4:
        raise DimensionError(f"重複度は 1..4 です: {multiplicity}")
    if not 1 <= position <= n - 1:
        raise DimensionError(f"生成元 s{position} は B_{n} の範囲外です")
    return BraidWord.generator(position, n, 2 * multiplicity)
