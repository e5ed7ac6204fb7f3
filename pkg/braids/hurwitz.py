#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Hurwitz 移動モジュール

組紐モノドロミー分解への Hurwitz 移動、分解の積と不変量、
および Hurwitz 移動と同時共役による有界な同値性探索（BMT 比較）を提供します。

    R_k:   (t_k, t_{k+1}) ↦ (t_k t_{k+1} t_k⁻¹, t_k)
    R_k⁻¹: (t_k, t_{k+1}) ↦ (t_{k+1}, t_{k+1}⁻¹ t_k t_{k+1})

バージョン: 1.0.0
"""

import re
import logging
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import product

from braids.builders import full_twist
from braids.garside import canonical_word, equals, from_normal_form, normal_form
from models.braid_word import BraidWord, Factorization
from utils.errors import DimensionError, ParseError

logger = logging.getLogger(__name__)

_MOVE_TOKEN = re.compile(r"^R(\d+)(?:\^(-?\d+))?$")


@dataclass(frozen=True, order=True)
class HurwitzMove:
    """位置 k（1 始まり）の Hurwitz 移動。"""

    position: int
    inverse: bool = False

    def to_string(self):
        return f"R{self.position}^-1" if self.inverse else f"R{self.position}"

    def reversed(self):
        return HurwitzMove(self.position, not self.inverse)


def parse_moves(text):
    """
    "R1^-1 R5 R4 R3 R4" 形式の移動列を読み込みます。
    """
    moves = []
    for token in text.split():
        match = _MOVE_TOKEN.match(token)
        if not match:
            raise ParseError(f"不正な Hurwitz 移動です: {token!r}")
        position = int(match.group(1))
        power = int(match.group(2)) if match.group(2) is not None else 1
        if power == 0:
            raise ParseError(f"指数 0 は使用できません: {token!r}")
        moves.extend([HurwitzMove(position, power < 0)] * abs(power))
    return moves


def hurwitz_move(factorization, k, inverse=False):
    """
    位置 k に Hurwitz 移動を適用します。

    Args:
        factorization (Factorization): 分解
        k (int): 1 始まりの位置（1 ≤ k ≤ 長さ − 1）
        inverse (bool): True なら逆移動

    Returns:
        Factorization: 移動後の分解（他の位置は不変）
    """
    if not 1 <= k <= len(factorization) - 1:
        raise DimensionError(f"移動位置 {k} が範囲外です（長さ {len(factorization)}）")
    first, second = factorization[k - 1], factorization[k]
    if inverse:
        pair = (second, (second.inverse() * first * second).freely_reduced())
    else:
        pair = ((first * second * first.inverse()).freely_reduced(), first)
    return factorization.replaced(k - 1, pair)


def apply_moves(factorization, moves):
    for move in moves:
        factorization = hurwitz_move(factorization, move.position, move.inverse)
    return factorization


def factorization_product(factorization):
    """因子を左から右へ掛けた積 t_1 t_2 ⋯ t_p。"""
    result = BraidWord.identity(factorization.strands)
    for factor in factorization:
        result = result * factor
    return result


def factorization_invariants(factorization):
    """
    分解の不変量の報告を作成します。

    Returns:
        dict: 因子数、因子ごとの指数和、総指数和、積の標準形、
              因子ごとの置換、積が全ひねりと等しいか
    """
    product_word = factorization_product(factorization)
    exponent_sums = [f.exponent_sum() for f in factorization]
    product_is_full_twist = equals(product_word, full_twist(factorization.strands))
    if not product_is_full_twist:
        logger.warning(f"分解の積が全ひねりと一致しません: {factorization.to_string()}")
    return {
        "strands": factorization.strands,
        "factor_count": len(factorization),
        "exponent_sums": exponent_sums,
        "total_exponent_sum": sum(exponent_sums),
        "expected_exponent_sum": factorization.strands * (factorization.strands - 1),
        "product_normal_form": normal_form(product_word).to_dict(),
        "permutations": [list(f.permutation()) for f in factorization],
        "product_is_full_twist": product_is_full_twist,
    }


@dataclass
class BmtResult:
    """BMT 比較の結果。status は "equivalent" または "unknown"。"""

    status: str
    moves: tuple = ()
    conjugator: BraidWord = None
    note: str = ""
    explored: int = 0

    @property
    def found(self):
        return self.status == "equivalent"

    def to_dict(self):
        return {
            "status": self.status,
            "moves": [m.to_string() for m in self.moves],
            "conjugator": self.conjugator.to_string() if self.conjugator is not None else None,
            "note": self.note,
            "explored": self.explored,
        }


def _state_key(factorization):
    return tuple(normal_form(f) for f in factorization)


def _canonical(factorization):
    return Factorization(factorization.strands, [canonical_word(f) for f in factorization])


def _all_moves(length):
    moves = []
    for k in range(1, length):
        moves.append(HurwitzMove(k, False))
        moves.append(HurwitzMove(k, True))
    return moves


def _successor(factors, keys, move, strands):
    # 移動で変わる二つの因子だけを正準化する
    k = move.position
    moved = hurwitz_move(Factorization(strands, factors), k, move.inverse)
    new_factors = list(factors)
    new_keys = list(keys)
    for index in (k - 1, k):
        form = normal_form(moved[index])
        new_keys[index] = form
        new_factors[index] = from_normal_form(form)
    return tuple(new_factors), tuple(new_keys)


def _breadth_first(start, depth):
    # 各状態への最短かつ辞書式最小の移動列
    moves = _all_moves(len(start))
    keys = _state_key(start)
    paths = {keys: ()}
    frontier = [(tuple(start.factors), keys, ())]
    for _ in range(depth):
        next_frontier = []
        for state, state_keys, path in frontier:
            for move in moves:
                successor, key = _successor(state, state_keys, move, start.strands)
                if key not in paths:
                    paths[key] = path + (move,)
                    next_frontier.append((successor, key, path + (move,)))
        frontier = next_frontier
    return paths


def _search(source, target, depth):
    forward_depth = (depth + 1) // 2
    backward = _breadth_first(target, depth - forward_depth)
    forward = _breadth_first(source, forward_depth)
    best = None
    for key, path in forward.items():
        tail = backward.get(key)
        if tail is None:
            continue
        certificate = path + tuple(m.reversed() for m in reversed(tail))
        rank = (len(certificate), certificate)
        if best is None or rank < best[0]:
            best = (rank, certificate)
    explored = len(forward) + len(backward)
    return (best[1] if best else None), explored


def _conjugators(strands, letters):
    words = [BraidWord.identity(strands)]
    alphabet = [(i, s) for i in range(1, strands) for s in (1, -1)]
    for length in range(1, letters + 1):
        for combo in product(alphabet, repeat=length):
            word = BraidWord(strands, combo)
            if len(word.freely_reduced()) == length:
                words.append(word)
    return words


def bmt_compare(first, second, depth=5, conjugator_letters=0, workers=1):
    """
    二つの分解が Hurwitz 移動と一つの同時共役で移り合うかを有界に探索します。

    見つからない場合は "unknown" を返し、「同値でない」とは判定しません。

    Args:
        first (Factorization): 始点の分解
        second (Factorization): 終点の分解
        depth (int): Hurwitz 移動の数の上限
        conjugator_letters (int): 同時共役に使う語の文字数の上限
        workers (int): 共役子ごとの探索に使うスレッド数

    Returns:
        BmtResult: 証明書（移動列と共役子）または "unknown"
    """
    if first.strands != second.strands:
        raise DimensionError(f"ストランド数が一致しません: {first.strands} と {second.strands}")
    if len(first) != len(second):
        return BmtResult("unknown", note="因子数が異なります")
    sums_first = Counter(f.exponent_sum() for f in first)
    sums_second = Counter(f.exponent_sum() for f in second)
    if sums_first != sums_second:
        return BmtResult("unknown", note="指数和の多重集合が一致しません（不変量の不一致）")

    source = _canonical(first)
    target = _canonical(second)
    if _state_key(source) == _state_key(target):
        return BmtResult("equivalent", moves=(), note="同一の分解です")

    conjugators = _conjugators(first.strands, conjugator_letters)
    if conjugator_letters == 0 and not equals(factorization_product(first), factorization_product(second)):
        return BmtResult("unknown", note="積が一致しません（共役なしでは移り合いません）")

    def attempt(conjugator):
        start = _canonical(source.conjugated(conjugator)) if len(conjugator) else source
        return _search(start, target, depth)

    if workers > 1 and len(conjugators) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(attempt, conjugators))
    else:
        outcomes = [attempt(c) for c in conjugators]

    explored = sum(count for _, count in outcomes)
    best = None
    for conjugator, (certificate, _) in zip(conjugators, outcomes):
        if certificate is None:
            continue
        rank = (len(certificate), certificate, len(conjugator), conjugator.letters)
        if best is None or rank < best[0]:
            best = (rank, certificate, conjugator)
    if best is None:
        logger.info(f"BMT 探索で証明書が見つかりませんでした（深さ {depth}、探索 {explored} 状態）")
        return BmtResult("unknown", note=f"深さ {depth} 以内で見つかりません", explored=explored)
    _, certificate, conjugator = best
    return BmtResult(
        "equivalent",
        moves=certificate,
        conjugator=conjugator if len(conjugator) else None,
        explored=explored,
    )
