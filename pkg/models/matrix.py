#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
行列モデルモジュール

有理数行列 RationalMatrix と多項式行列 PolyMatrix を提供します。
行列束 x0·D0 + x1·D1 + x2·D2 の構築もここで行います。

バージョン: 1.0.0
"""

import logging
from fractions import Fraction

from models.polynomial import (
    ExactPolynomial,
    PROJECTIVE_VARIABLES,
    format_fraction,
    merge_variables,
)
from utils.errors import DimensionError, ParseError

logger = logging.getLogger(__name__)


def _to_fraction(value):
    if isinstance(value, ExactPolynomial):
        return value.constant_value()
    try:
        return Fraction(value.strip()) if isinstance(value, str) else Fraction(value)
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError(f"行列要素を有理数として読み込めません: {value!r}") from e


class RationalMatrix:
    """
    有理数を要素とする密な行列。
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries, cols=None):
        """
        RationalMatrixクラスのコンストラクタ。

        Args:
            entries (list): 行のリスト（各行は有理数・整数・'a/b' 文字列のリスト）
            cols (int): 列数（行が 0 個のときに指定）
        """
        grid = tuple(tuple(_to_fraction(v) for v in row) for row in entries)
        widths = {len(row) for row in grid}
        if len(widths) > 1:
            raise DimensionError(f"行の長さが揃っていません: {sorted(widths)}")
        self.rows = len(grid)
        self.cols = widths.pop() if widths else int(cols or 0)
        self.entries = grid

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, size):
        return cls([[1 if i == j else 0 for j in range(size)] for i in range(size)], cols=size)

    @classmethod
    def from_json(cls, data):
        """JSON の配列の配列（係数文字列）から作成します。"""
        if not isinstance(data, list) or not all(isinstance(row, list) for row in data):
            raise ParseError("行列は配列の配列でなければなりません")
        return cls(data)

    def __getitem__(self, index):
        i, j = index
        return self.entries[i][j]

    def is_square(self):
        return self.rows == self.cols

    def transpose(self):
        return RationalMatrix([list(col) for col in zip(*self.entries)], cols=self.rows)

    def is_symmetric(self):
        return self.is_square() and all(
            self.entries[i][j] == self.entries[j][i] for i in range(self.rows) for j in range(i)
        )

    def is_zero(self):
        return all(v == 0 for row in self.entries for v in row)

    def __add__(self, other):
        self._check_same_shape(other)
        return RationalMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)],
            cols=self.cols,
        )

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return self.scaled(-1)

    def scaled(self, factor):
        factor = Fraction(factor)
        return RationalMatrix([[v * factor for v in row] for row in self.entries], cols=self.cols)

    def __mul__(self, other):
        if isinstance(other, RationalMatrix):
            if self.cols != other.rows:
                raise DimensionError(f"積を取れません: {self.rows}x{self.cols} と {other.rows}x{other.cols}")
            columns = list(zip(*other.entries)) if other.rows else [()] * other.cols
            return RationalMatrix(
                [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in columns] for row in self.entries],
                cols=other.cols,
            )
        return self.scaled(other)

    __rmul__ = scaled

    def apply(self, vector):
        """行列とベクトルの積。"""
        if len(vector) != self.cols:
            raise DimensionError(f"ベクトルの長さ {len(vector)} が列数 {self.cols} と一致しません")
        return [sum((a * Fraction(b) for a, b in zip(row, vector)), Fraction(0)) for row in self.entries]

    def hstack(self, *others):
        for other in others:
            if other.rows != self.rows:
                raise DimensionError("横に連結する行列の行数が一致しません")
        rows = [list(row) for row in self.entries]
        for other in others:
            for row, extra in zip(rows, other.entries):
                row.extend(extra)
        return RationalMatrix(rows, cols=self.cols + sum(o.cols for o in others))

    def vstack(self, *others):
        for other in others:
            if other.cols != self.cols:
                raise DimensionError("縦に連結する行列の列数が一致しません")
        rows = [list(row) for row in self.entries]
        for other in others:
            rows.extend(list(row) for row in other.entries)
        return RationalMatrix(rows, cols=self.cols)

    def _check_same_shape(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError(
                f"行列のサイズが一致しません: {self.rows}x{self.cols} と {other.rows}x{other.cols}"
            )

    def to_poly_matrix(self, variables=()):
        return PolyMatrix(
            [[ExactPolynomial.constant(v, variables) for v in row] for row in self.entries],
            variables=variables,
            cols=self.cols,
        )

    def to_lists(self):
        """係数文字列の配列の配列（JSON 形式）に変換します。"""
        return [[format_fraction(v) for v in row] for row in self.entries]

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.entries == other.entries and self.cols == other.cols

    def __hash__(self):
        return hash((self.cols, self.entries))

    def __repr__(self):
        return f"RationalMatrix({self.to_lists()})"


class PolyMatrix:
    """
    共通の変数リスト上の ExactPolynomial を要素とする行列。
    """

    __slots__ = ("rows", "cols", "variables", "entries")

    def __init__(self, entries, variables=None, cols=None):
        """
        PolyMatrixクラスのコンストラクタ。

        Args:
            entries (list): 行のリスト（各要素は ExactPolynomial、数値または多項式文字列）
            variables (tuple): 共通の変数リスト（省略時は全要素の変数の併合）
            cols (int): 列数（行が 0 個のときに指定）
        """
        grid = []
        for row in entries:
            converted = []
            for value in row:
                if isinstance(value, ExactPolynomial):
                    converted.append(value)
                elif isinstance(value, str):
                    converted.append(ExactPolynomial.parse(value))
                else:
                    converted.append(ExactPolynomial.constant(value))
            grid.append(converted)
        widths = {len(row) for row in grid}
        if len(widths) > 1:
            raise DimensionError(f"行の長さが揃っていません: {sorted(widths)}")
        if variables is None:
            variables = merge_variables(*(p.variables for row in grid for p in row))
        self.variables = tuple(variables)
        self.entries = tuple(tuple(p.with_variables(self.variables) for p in row) for row in grid)
        self.rows = len(self.entries)
        self.cols = widths.pop() if widths else int(cols or 0)

    @classmethod
    def pencil(cls, matrices, variables=PROJECTIVE_VARIABLES):
        """
        行列束 Σ variables[k]·matrices[k] を作成します。

        Args:
            matrices (list): 同じサイズの RationalMatrix のリスト
            variables (tuple): 各行列に掛ける変数名
        """
        if len(matrices) != len(variables):
            raise DimensionError("行列と変数の個数が一致しません")
        size = {(m.rows, m.cols) for m in matrices}
        if len(size) != 1:
            raise DimensionError(f"行列束のサイズが揃っていません: {sorted(size)}")
        rows, cols = size.pop()
        units = [ExactPolynomial.variable(v, variables) for v in variables]
        grid = []
        for i in range(rows):
            row = []
            for j in range(cols):
                terms = {}
                for unit, matrix in zip(units, matrices):
                    if matrix[i, j]:
                        exps = next(iter(unit.terms))
                        terms[exps] = terms.get(exps, 0) + matrix[i, j]
                row.append(ExactPolynomial(variables, terms))
            grid.append(row)
        return cls(grid, variables=variables, cols=cols)

    def __getitem__(self, index):
        i, j = index
        return self.entries[i][j]

    def is_square(self):
        return self.rows == self.cols

    def is_constant(self):
        return all(p.is_constant() for row in self.entries for p in row)

    def to_rational(self):
        return RationalMatrix([[p.constant_value() for p in row] for row in self.entries], cols=self.cols)

    def transpose(self):
        return PolyMatrix([list(col) for col in zip(*self.entries)], self.variables, cols=self.rows)

    def permuted(self, row_order, col_order):
        """行と列を並べ替えた行列。"""
        return PolyMatrix(
            [[self.entries[i][j] for j in col_order] for i in row_order], self.variables, cols=len(col_order)
        )

    def __add__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError("行列のサイズが一致しません")
        return PolyMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)], cols=self.cols
        )

    def __mul__(self, other):
        if isinstance(other, PolyMatrix):
            if self.cols != other.rows:
                raise DimensionError(f"積を取れません: {self.rows}x{self.cols} と {other.rows}x{other.cols}")
            variables = merge_variables(self.variables, other.variables)
            columns = list(zip(*other.entries))
            grid = []
            for row in self.entries:
                out = []
                for col in columns:
                    acc = ExactPolynomial.zero(variables)
                    for a, b in zip(row, col):
                        if a and b:
                            acc = acc + a * b
                    out.append(acc)
                grid.append(out)
            return PolyMatrix(grid, variables, cols=other.cols)
        return PolyMatrix([[p * other for p in row] for row in self.entries], self.variables, cols=self.cols)

    __rmul__ = __mul__

    def substitute(self, mapping):
        return PolyMatrix([[p.substitute(mapping) for p in row] for row in self.entries], cols=self.cols)

    def max_degree_in(self, var):
        return max((p.degree_in(var) for row in self.entries for p in row), default=0)

    def to_lists(self):
        return [[p.to_string() for p in row] for row in self.entries]

    def __repr__(self):
        return f"PolyMatrix({self.to_lists()})"
