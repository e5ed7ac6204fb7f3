#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
組紐語モデルモジュール

組紐群 B_n の語 BraidWord、組紐モノドロミー分解 Factorization、
自由群の語 FreeGroupWord と、それぞれの表記の読み込みを提供します。
合成は左から右の順です。

表記:
    組紐語   "s3 s2^4 s3^-1"（空語は "e"）
    自由群語 "g1 g2 g1^-1"（単位元は "e"）

バージョン: 1.0.0
"""

import re
import logging

from utils.errors import DimensionError, ParseError

logger = logging.getLogger(__name__)

_BRAID_TOKEN = re.compile(r"^s(\d+)(?:\^(-?\d+))?$")
_FREE_TOKEN = re.compile(r"^g(\d+)(?:\^(-?\d+))?$")


def _group_letters(letters, prefix):
    if not letters:
        return "e"
    tokens = []
    run_index, run_power = letters[0][0], 0
    for index, sign in letters:
        same_direction = run_power == 0 or (run_power > 0) == (sign > 0)
        if index == run_index and same_direction:
            run_power += sign
        else:
            tokens.append((run_index, run_power))
            run_index, run_power = index, sign
    tokens.append((run_index, run_power))
    return " ".join(f"{prefix}{i}" if p == 1 else f"{prefix}{i}^{p}" for i, p in tokens)


def _parse_tokens(text, pattern, prefix):
    text = text.strip()
    if text in ("", "e"):
        return []
    letters = []
    for token in text.split():
        match = pattern.match(token)
        if not match:
            raise ParseError(f"不正なトークンです: {token!r}（{prefix}K または {prefix}K^E の形式）")
        index = int(match.group(1))
        power = int(match.group(2)) if match.group(2) is not None else 1
        if power == 0:
            raise ParseError(f"指数 0 は使用できません: {token!r}")
        sign = 1 if power > 0 else -1
        letters.extend([(index, sign)] * abs(power))
    return letters


class BraidWord:
    """
    n 本の組紐の生成元 σ_1..σ_{n−1} とその逆元からなる語。
    """

    __slots__ = ("strands", "letters")

    def __init__(self, strands, letters=()):
        """
        BraidWordクラスのコンストラクタ。

        Args:
            strands (int): ストランド数 n（2 以上）
            letters (iterable): (生成元番号, 符号 ±1) の列
        """
        if strands < 2:
            raise DimensionError(f"ストランド数は 2 以上です: {strands}")
        self.strands = int(strands)
        checked = []
        for index, sign in letters:
            if not 1 <= index <= strands - 1:
                raise DimensionError(f"生成元 s{index} は B_{strands} の範囲外です")
            if sign not in (1, -1):
                raise ParseError(f"符号は ±1 です: {sign}")
            checked.append((int(index), int(sign)))
        self.letters = tuple(checked)

    @classmethod
    def generator(cls, index, strands, power=1):
        sign = 1 if power > 0 else -1
        return cls(strands, [(index, sign)] * abs(power))

    @classmethod
    def identity(cls, strands):
        return cls(strands, ())

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other):
        self._check_strands(other)
        return BraidWord(self.strands, self.letters + other.letters)

    def __pow__(self, exponent):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return BraidWord(self.strands, self.letters * exponent)

    def inverse(self):
        return BraidWord(self.strands, [(i, -s) for i, s in reversed(self.letters)])

    def conjugate(self, conjugator):
        """c⁻¹·w·c を返します。"""
        return conjugator.inverse() * self * conjugator

    def exponent_sum(self):
        return sum(sign for _, sign in self.letters)

    def permutation(self):
        """
        位置ごとのラベルの並び（σ_i は位置 i−1 と i を入れ替え）を返します。
        """
        arrangement = list(range(self.strands))
        for index, _ in self.letters:
            arrangement[index - 1], arrangement[index] = arrangement[index], arrangement[index - 1]
        return tuple(arrangement)

    def freely_reduced(self):
        stack = []
        for letter in self.letters:
            if stack and stack[-1][0] == letter[0] and stack[-1][1] == -letter[1]:
                stack.pop()
            else:
                stack.append(letter)
        return BraidWord(self.strands, stack)

    def _check_strands(self, other):
        if self.strands != other.strands:
            raise DimensionError(f"ストランド数が一致しません: {self.strands} と {other.strands}")

    def to_string(self):
        return _group_letters(self.letters, "s")

    def to_tokens(self):
        text = self.to_string()
        return [] if text == "e" else text.split()

    def __eq__(self, other):
        if not isinstance(other, BraidWord):
            return NotImplemented
        return self.strands == other.strands and self.letters == other.letters

    def __hash__(self):
        return hash((self.strands, self.letters))

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"BraidWord({self.strands}, {self.to_string()!r})"


def parse_braid(text, n):
    """
    表の表記の組紐語を読み込みます。

    Args:
        text (str): 空白区切りの sK または sK^E（"e" は空語）
        n (int): ストランド数

    Returns:
        BraidWord: 展開された文字列
    """
    return BraidWord(n, _parse_tokens(text, _BRAID_TOKEN, "s"))


class FreeGroupWord:
    """
    階数 n の自由群の既約語。
    """

    __slots__ = ("rank", "letters")

    def __init__(self, rank, letters=()):
        self.rank = int(rank)
        stack = []
        for index, sign in letters:
            if not 1 <= index <= self.rank:
                raise DimensionError(f"生成元 g{index} は階数 {self.rank} の範囲外です")
            if stack and stack[-1] == (index, -sign):
                stack.pop()
            else:
                stack.append((int(index), int(sign)))
        self.letters = tuple(stack)

    @classmethod
    def generator(cls, index, rank):
        return cls(rank, [(index, 1)])

    @classmethod
    def parse(cls, text, rank):
        return cls(rank, _parse_tokens(text, _FREE_TOKEN, "g"))

    def __mul__(self, other):
        if self.rank != other.rank:
            raise DimensionError(f"階数が一致しません: {self.rank} と {other.rank}")
        return FreeGroupWord(self.rank, self.letters + other.letters)

    def inverse(self):
        return FreeGroupWord(self.rank, [(i, -s) for i, s in reversed(self.letters)])

    def is_identity(self):
        return not self.letters

    def to_string(self):
        return _group_letters(self.letters, "g")

    def __eq__(self, other):
        if not isinstance(other, FreeGroupWord):
            return NotImplemented
        return self.rank == other.rank and self.letters == other.letters

    def __hash__(self):
        return hash((self.rank, self.letters))

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"FreeGroupWord({self.rank}, {self.to_string()!r})"


class Factorization:
    """
    組紐モノドロミー分解（同じストランド数の組紐語の順序付き組）。
    """

    __slots__ = ("strands", "factors")

    def __init__(self, strands, factors=()):
        self.strands = int(strands)
        factors = tuple(factors)
        for factor in factors:
            if factor.strands != self.strands:
                raise DimensionError(
                    f"因子のストランド数 {factor.strands} が {self.strands} と一致しません"
                )
        self.factors = factors

    @classmethod
    def parse(cls, texts, strands):
        """組紐語の文字列のリストから作成します。"""
        return cls(strands, [parse_braid(text, strands) for text in texts])

    def __len__(self):
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __getitem__(self, index):
        return self.factors[index]

    def replaced(self, position, new_factors):
        """position から始まる len(new_factors) 個の因子を置き換えた分解。"""
        factors = list(self.factors)
        factors[position:position + len(new_factors)] = new_factors
        return Factorization(self.strands, factors)

    def conjugated(self, conjugator):
        """全因子を同じ語で同時共役した分解。"""
        return Factorization(self.strands, [f.conjugate(conjugator) for f in self.factors])

    def to_dict(self):
        return {"strands": self.strands, "factors": [f.to_tokens() for f in self.factors]}

    @classmethod
    def from_dict(cls, data):
        """
        {"strands": n, "factors": [["s1", "s2^-1"], ...]} 形式から作成します。
        各因子は文字列のリストまたは空白区切りの文字列です。
        """
        try:
            strands = int(data["strands"])
            raw = data["factors"]
        except (KeyError, TypeError, ValueError) as e:
            raise ParseError(f"分解の JSON が不正です: {e}") from e
        factors = []
        for item in raw:
            text = " ".join(item) if isinstance(item, list) else str(item)
            factors.append(parse_braid(text, strands))
        return cls(strands, factors)

    def to_string(self):
        return " | ".join(f.to_string() for f in self.factors)

    def __eq__(self, other):
        if not isinstance(other, Factorization):
            return NotImplemented
        return self.strands == other.strands and self.factors == other.factors

    def __hash__(self):
        return hash((self.strands, self.factors))

    def __repr__(self):
        return f"Factorization({self.strands}, {self.to_string()!r})"
