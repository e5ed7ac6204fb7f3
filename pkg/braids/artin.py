#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Artin 作用モジュール

組紐群の自由群への（右）作用を提供します。語の等号判定の独立な検証に用います。

    σ_i:   g_i ↦ g_i g_{i+1} g_i⁻¹,  g_{i+1} ↦ g_i
    σ_i⁻¹: g_i ↦ g_{i+1},            g_{i+1} ↦ g_{i+1}⁻¹ g_i g_{i+1}

バージョン: 1.0.0
"""

import logging

from models.braid_word import FreeGroupWord
from utils.errors import DimensionError

logger = logging.getLogger(__name__)


def _letter_images(index, sign, rank):
    g = FreeGroupWord.generator
    gi, gj = g(index, rank), g(index + 1, rank)
    if sign > 0:
        return {index: gi * gj * gi.inverse(), index + 1: gi}
    return {index: gj, index + 1: gj.inverse() * gi * gj}


def _substitute(word, images):
    result = FreeGroupWord(word.rank)
    for index, sign in word.letters:
        image = images.get(index)
        if image is None:
            image = FreeGroupWord.generator(index, word.rank)
        result = result * (image if sign > 0 else image.inverse())
    return result


def artin_action(braid, element):
    """
    組紐語を自由群の元に文字ごとに左から右へ作用させます。

    Args:
        braid (BraidWord): n 本の組紐語
        element (FreeGroupWord): 階数 n の自由群の元

    Returns:
        FreeGroupWord: 既約な像
    """
    if element.rank != braid.strands:
        raise DimensionError(f"自由群の階数 {element.rank} がストランド数 {braid.strands} と一致しません")
    result = element
    for index, sign in braid.letters:
        result = _substitute(result, _letter_images(index, sign, element.rank))
    return result


def artin_images(braid):
    """全生成元 g_1..g_n の像のタプル。"""
    n = braid.strands
    return tuple(artin_action(braid, FreeGroupWord.generator(i, n)) for i in range(1, n + 1))
