#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Garside 標準形モジュール

組紐群 B_n の語の問題を Garside 左標準形で解きます。
単純組紐（置換組紐）は「位置 → ラベル」の並び（タプル）で表し、
σ_i は位置 i−1 と i を入れ替えます。Δ は逆順の並びです。

標準形は (inf, 単純因子の並び) で、二つの語が群として等しいとき
かつそのときに限り一致します。

バージョン: 1.0.0
"""

import logging
from dataclasses import dataclass

from models.braid_word import BraidWord
from utils.errors import DimensionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NormalForm:
    """Garside 左標準形 Δ^inf · A_1 ⋯ A_r。"""

    strands: int
    inf: int
    factors: tuple

    def to_dict(self):
        return {"strands": self.strands, "inf": self.inf, "factors": [list(f) for f in self.factors]}

    @property
    def canonical_length(self):
        return len(self.factors)


def identity_arrangement(n):
    return tuple(range(n))


def delta_arrangement(n):
    return tuple(range(n - 1, -1, -1))


def _swap(arrangement, i):
    p = list(arrangement)
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def finishing_set(arrangement):
    """A = A'·σ_i と書ける i の集合。"""
    return {i for i in range(1, len(arrangement)) if arrangement[i - 1] > arrangement[i]}


def starting_set(arrangement):
    """B = σ_i·B' と書ける i の集合。"""
    position = [0] * len(arrangement)
    for pos, label in enumerate(arrangement):
        position[label] = pos
    return {i for i in range(1, len(arrangement)) if position[i - 1] > position[i]}


def _remove_left(arrangement, i):
    # σ_i⁻¹·B: ラベル i−1 と i を入れ替える
    swapped = {i - 1: i, i: i - 1}
    return tuple(swapped.get(label, label) for label in arrangement)


def _tau(arrangement):
    # Δ による共役 σ_i ↦ σ_{n−i}
    n = len(arrangement)
    return tuple(n - 1 - arrangement[n - 1 - pos] for pos in range(n))


def _left_weight(factors):
    factors = [tuple(f) for f in factors]
    changed = True
    while changed:
        changed = False
        for k in range(len(factors) - 1):
            a, b = factors[k], factors[k + 1]
            while True:
                movable = sorted(starting_set(b) - finishing_set(a))
                if not movable:
                    break
                i = movable[0]
                a = _swap(a, i)
                b = _remove_left(b, i)
                changed = True
            factors[k], factors[k + 1] = a, b
    return factors


def normal_form(word):
    """
    語の Garside 左標準形を計算します。

    Args:
        word (BraidWord): 組紐語

    Returns:
        NormalForm: (inf, 単純因子の並び)
    """
    n = word.strands
    identity = identity_arrangement(n)
    delta = delta_arrangement(n)
    inf = 0
    factors = []
    for index, sign in word.letters:
        if sign > 0:
            factors.append(_swap(identity, index))
        else:
            # σ_i⁻¹ = Δ⁻¹·(Δσ_i⁻¹) とし、Δ⁻¹ を左端へ移す
            factors = [_tau(f) for f in factors]
            inf -= 1
            factors.append(_swap(delta, index))
    factors = _left_weight(factors)
    while factors and factors[0] == delta:
        factors.pop(0)
        inf += 1
    factors = [f for f in factors if f != identity]
    return NormalForm(n, inf, tuple(factors))


def equals(first, second):
    """
    二つの語が B_n で等しいかどうかを標準形の一致で判定します。
    """
    if first.strands != second.strands:
        raise DimensionError(f"ストランド数が一致しません: {first.strands} と {second.strands}")
    return normal_form(first) == normal_form(second)


def simple_word(arrangement):
    """単純組紐の並びに対応する正の語を返します。"""
    letters = []
    current = tuple(arrangement)
    while True:
        finishing = sorted(finishing_set(current))
        if not finishing:
            break
        i = finishing[-1]
        letters.append((i, 1))
        current = _swap(current, i)
    return BraidWord(len(arrangement), list(reversed(letters)))


def from_normal_form(form):
    """標準形から対応する語を組み立てます。"""
    delta = simple_word(delta_arrangement(form.strands))
    word = delta ** form.inf
    for factor in form.factors:
        word = word * simple_word(factor)
    return word


def canonical_word(word):
    """標準形を経由した正準な語。"""
    return from_normal_form(normal_form(word))
