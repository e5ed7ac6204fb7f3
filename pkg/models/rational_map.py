#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
有理写像と行列式表現のモデルモジュール

有理写像 RationalMap、行列式表現 DetRep、一般化 Bezout 行列
GeneralizedBezout、主部分空間 PrincipalSubspace のデータモデルを提供します。
各クラスは to_dict / from_dict で JSON と相互変換できます。

バージョン: 1.0.0
"""

import logging

from models.matrix import PolyMatrix, RationalMatrix
from models.polynomial import (
    AFFINE_VARIABLES,
    ExactPolynomial,
    PROJECTIVE_VARIABLES,
    merge_variables,
    monomials_of_degree,
)
from utils.errors import DegenerateInputError, DimensionError

logger = logging.getLogger(__name__)

LINE_ARITY = 1
AFFINE_ARITY = 2
PLANE_ARITY = 3


class RationalMap:
    """
    有理写像 (p0 : p1 : p2)。

    arity 1 は直線（一変数）からの写像、arity 2 は (x, y) のアフィン平面からの写像、
    arity 3 は x0, x1, x2 の斉次多項式による射影平面からの写像です。
    次数の低い成分は上位係数 0 として共通次数 degree まで補われます。
    """

    def __init__(self, p0, p1, p2, arity=None, degree=None):
        """
        RationalMapクラスのコンストラクタ。

        Args:
            p0, p1, p2 (ExactPolynomial | str): 成分の多項式
            arity (int): 1、2 または 3（省略時は使用変数から判定）
            degree (int): 共通次数（省略時は成分の最大次数）
        """
        components = [ExactPolynomial.parse(p) if isinstance(p, str) else p for p in (p0, p1, p2)]
        if all(p.is_zero() for p in components):
            raise DegenerateInputError("写像の成分がすべて 0 です")
        used = merge_variables(*(p.used_variables() for p in components))
        if arity is None:
            if set(used) <= set(PROJECTIVE_VARIABLES) and len(used) > 1:
                arity = PLANE_ARITY
            elif set(used) <= set(AFFINE_VARIABLES) and len(used) == 2:
                arity = AFFINE_ARITY
            else:
                arity = LINE_ARITY
        self.arity = arity
        if arity == LINE_ARITY:
            if len(used) > 1:
                raise DimensionError(f"直線からの写像は一変数でなければなりません: {used}")
            self.variable = used[0] if used else "t"
            self.components = tuple(p.with_variables((self.variable,)) for p in components)
        elif arity == AFFINE_ARITY:
            if set(used) - set(AFFINE_VARIABLES):
                raise DimensionError(f"アフィン写像の変数は x, y です: {used}")
            self.variable = None
            self.components = tuple(p.with_variables(AFFINE_VARIABLES) for p in components)
        elif arity == PLANE_ARITY:
            if set(used) - set(PROJECTIVE_VARIABLES):
                raise DimensionError(f"平面写像の変数は x0, x1, x2 です: {used}")
            self.variable = None
            self.components = tuple(p.with_variables(PROJECTIVE_VARIABLES) for p in components)
        else:
            raise DimensionError(f"arity は 1、2、3 のいずれかです: {arity}")

        natural = max(p.total_degree() for p in self.components)
        self.degree = natural if degree is None else int(degree)
        if self.degree < natural or self.degree < 1:
            raise DimensionError(f"次数 {self.degree} が成分の次数 {natural} と合いません")
        if arity == PLANE_ARITY:
            for p in self.components:
                if not p.is_zero() and (not p.is_homogeneous() or p.total_degree() != self.degree):
                    raise DimensionError(f"成分 {p} が次数 {self.degree} の斉次多項式ではありません")

    @property
    def p0(self):
        return self.components[0]

    @property
    def p1(self):
        return self.components[1]

    @property
    def p2(self):
        return self.components[2]

    @classmethod
    def identity(cls):
        return cls("x0", "x1", "x2", arity=PLANE_ARITY)

    @classmethod
    def inversion(cls):
        """標準二次 Cremona 変換 (x1·x2 : x0·x2 : x0·x1)。"""
        return cls("x1*x2", "x0*x2", "x0*x1", arity=PLANE_ARITY)

    @classmethod
    def degree3_example(cls, a, b):
        """
        次数 3 の写像 (x0·x1·x2, x1³ + a·x1·x2², x2³ + b·x1²·x2) を作成します。
        """
        x0, x1, x2 = (ExactPolynomial.variable(v, PROJECTIVE_VARIABLES) for v in PROJECTIVE_VARIABLES)
        return cls(x0 * x1 * x2, x1 ** 3 + x1 * x2 ** 2 * a, x2 ** 3 + x1 ** 2 * x2 * b, arity=PLANE_ARITY)

    def homogenized(self):
        """アフィン写像を x0, x1, x2 の斉次写像にします。"""
        if self.arity != AFFINE_ARITY:
            return self
        parts = [p.homogenize(self.degree) for p in self.components]
        return RationalMap(*parts, arity=PLANE_ARITY, degree=self.degree)

    def restrict_to_axis(self, axis):
        """
        アフィン写像を座標軸に制限した直線からの写像を返します。

        Args:
            axis (str): "x-axis"（y = 0、変数 x）または "y-axis"（x = 0、変数 y）
        """
        if self.arity != AFFINE_ARITY:
            raise DimensionError("軸への制限はアフィン写像にのみ使えます")
        if axis == "x-axis":
            var, other = "x", "y"
        elif axis == "y-axis":
            var, other = "y", "x"
        else:
            raise ValueError(f"不明な軸です: {axis}")
        parts = [p.substitute({other: 0}).with_variables((var,)) for p in self.components]
        return RationalMap(*parts, arity=LINE_ARITY, degree=self.degree)

    def to_dict(self):
        return {
            "p0": self.p0.to_string(),
            "p1": self.p1.to_string(),
            "p2": self.p2.to_string(),
            "arity": self.arity,
            "degree": self.degree,
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            data["p0"], data["p1"], data["p2"], arity=data.get("arity"), degree=data.get("degree")
        )

    def __repr__(self):
        return f"RationalMap({self.to_dict()})"


class DetRep:
    """
    行列式表現 det(x0·D0 + x1·D1 + x2·D2)。
    """

    def __init__(self, D0, D1, D2):
        """
        DetRepクラスのコンストラクタ。

        Args:
            D0, D1, D2 (RationalMatrix | list): 同じサイズの正方行列
        """
        matrices = [m if isinstance(m, RationalMatrix) else RationalMatrix(m) for m in (D0, D1, D2)]
        shapes = {(m.rows, m.cols) for m in matrices}
        if len(shapes) != 1:
            raise DimensionError(f"D0, D1, D2 のサイズが揃っていません: {sorted(shapes)}")
        rows, cols = shapes.pop()
        if rows != cols or rows == 0:
            raise DimensionError(f"行列式表現の行列は正方でなければなりません: {rows}x{cols}")
        self.D0, self.D1, self.D2 = matrices
        self.m = rows

    @property
    def matrices(self):
        return (self.D0, self.D1, self.D2)

    def pencil(self):
        return PolyMatrix.pencil(self.matrices, PROJECTIVE_VARIABLES)

    def is_symmetric(self):
        return all(m.is_symmetric() for m in self.matrices)

    @classmethod
    def from_printed_pencil(cls, printed_constant, printed_x, printed_y, slot_order=("y", "x", "1")):
        """
        印刷された (定数, x, y) の三つ組の行列を、規約台帳の並び順で D0, D1, D2 に割り当てます。

        Args:
            slot_order (tuple): 印刷された三つの行列それぞれが掛かるアフィン変数（"1" は定数項）
        """
        slots = {"1": None, "x": None, "y": None}
        for label, matrix in zip(slot_order, (printed_constant, printed_x, printed_y)):
            slots[label] = matrix
        return cls(slots["1"], slots["x"], slots["y"])

    def to_dict(self):
        return {
            "m": self.m,
            "D0": self.D0.to_lists(),
            "D1": self.D1.to_lists(),
            "D2": self.D2.to_lists(),
        }

    @classmethod
    def from_dict(cls, data):
        rep = cls(
            RationalMatrix.from_json(data["D0"]),
            RationalMatrix.from_json(data["D1"]),
            RationalMatrix.from_json(data["D2"]),
        )
        if "m" in data and int(data["m"]) != rep.m:
            raise DimensionError(f"m = {data['m']} が行列のサイズ {rep.m} と一致しません")
        return rep

    def __repr__(self):
        return f"DetRep(m={self.m})"


def slot_monomials(n):
    """
    W_n のスロット (i1, i2) を次数 n-1 の単項式の grlex 降順で返します。

    Returns:
        list: (i1, i2) のリスト（n = 2 なら (0,0), (1,0), (0,1)）
    """
    return [(e[1], e[2]) for e in monomials_of_degree(3, n - 1)]


class GeneralizedBezout:
    """
    一般化 Bezout 行列 β¹, β², β¹²（次数 n-1 の単項式で添字付けられた対称行列）。
    """

    def __init__(self, n, beta1, beta2, beta12):
        self.n = n
        self.beta1 = beta1
        self.beta2 = beta2
        self.beta12 = beta12
        self.size = n * (n + 1) // 2
        for name, matrix in (("beta1", beta1), ("beta2", beta2), ("beta12", beta12)):
            if (matrix.rows, matrix.cols) != (self.size, self.size):
                raise DimensionError(f"{name} のサイズは {self.size} でなければなりません")

    @property
    def monomials(self):
        return monomials_of_degree(3, self.n - 1)

    def is_symmetric(self):
        return self.beta1.is_symmetric() and self.beta2.is_symmetric() and self.beta12.is_symmetric()

    def is_zero(self):
        return self.beta1.is_zero() and self.beta2.is_zero() and self.beta12.is_zero()

    def __add__(self, other):
        return GeneralizedBezout(
            self.n, self.beta1 + other.beta1, self.beta2 + other.beta2, self.beta12 + other.beta12
        )

    def to_dict(self):
        return {
            "n": self.n,
            "monomials": [list(m) for m in self.monomials],
            "beta1": self.beta1.to_lists(),
            "beta2": self.beta2.to_lists(),
            "beta12": self.beta12.to_lists(),
        }


class PrincipalSubspace:
    """
    主部分空間 V_n ⊂ W_n の基底。ベクトルはスロット順に m 成分ずつ並びます。
    """

    def __init__(self, n, m, basis):
        self.n = n
        self.m = m
        self.slots = slot_monomials(n)
        self.basis = [list(v) for v in basis]
        for vector in self.basis:
            if len(vector) != self.m * len(self.slots):
                raise DimensionError("基底ベクトルの長さがスロット空間の次元と一致しません")

    @property
    def dimension(self):
        return len(self.basis)

    def basis_matrix(self):
        """基底ベクトルを列とする行列 K。"""
        rows = len(self.slots) * self.m
        return RationalMatrix(
            [[vector[i] for vector in self.basis] for i in range(rows)], cols=len(self.basis)
        )

    def to_dict(self):
        return {
            "n": self.n,
            "m": self.m,
            "slots": [list(s) for s in self.slots],
            "basis": [[str(v) for v in vector] for vector in self.basis],
        }
