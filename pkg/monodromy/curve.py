#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
アフィン曲線と臨界値モジュール

組紐モノドロミーの入力となるアフィン平面曲線 q(x, y) = 0 と、
x への射影の判別式・臨界値（誤差半径付き）・基点を扱います。

倍精度（十進 15 桁以下）では numpy、それを超える精度では mpmath を使います。

バージョン: 1.0.0
"""

import logging
from contextlib import nullcontext
from fractions import Fraction
from itertools import combinations

import mpmath as mp
import numpy as np

from algebra.exact import resultant_wrt, squarefree_part
from contact.two_lines import shear_sequence
from models.polynomial import AFFINE_VARIABLES, ExactPolynomial
from utils.errors import DegenerateInputError, DimensionError, PrecisionError

logger = logging.getLogger(__name__)

DOUBLE_DIGITS = 15
MAX_SUGGESTED_SHEAR = 20
BASE_OFFSET = 0.05


class NumericContext:
    """
    十進桁数に応じた数値演算（numpy の倍精度または mpmath）。
    """

    def __init__(self, digits=DOUBLE_DIGITS):
        self.digits = int(digits)

    @property
    def uses_mpmath(self):
        return self.digits > DOUBLE_DIGITS

    def workdps(self):
        return mp.workdps(self.digits) if self.uses_mpmath else nullcontext()

    def number(self, value):
        if self.uses_mpmath:
            if isinstance(value, Fraction):
                return mp.mpc(mp.mpf(value.numerator) / value.denominator)
            return mp.mpc(value)
        return complex(value)

    def roots(self, coefficients):
        """
        高次から並んだ係数の多項式の全根。

        Returns:
            list: 複素数（mpmath 使用時は mpc）のリスト
        """
        if self.uses_mpmath:
            return list(mp.polyroots(coefficients, maxsteps=200, extraprec=2 * self.digits))
        return [complex(r) for r in np.roots(np.array(coefficients, dtype=complex))]

    def tolerance(self):
        return 10.0 ** (-(self.digits - 3))


def horner(coefficients, value):
    """高次から並んだ係数の多項式の値。"""
    total = 0
    for c in coefficients:
        total = total * value + c
    return total


def derivative_coefficients(coefficients):
    degree = len(coefficients) - 1
    return [c * (degree - k) for k, c in enumerate(coefficients[:-1])]


class AffineCurve:
    """
    アフィン曲線 q(x, y) = 0（y^n の係数が 0 でない定数、n = 全次数）。
    """

    def __init__(self, q):
        """
        AffineCurveクラスのコンストラクタ。

        Args:
            q (ExactPolynomial | str): x, y の多項式
        """
        if isinstance(q, str):
            q = ExactPolynomial.parse(q)
        if set(q.used_variables()) - set(AFFINE_VARIABLES):
            raise DimensionError(f"曲線の変数は x, y です: {q.used_variables()}")
        self.q = q.with_variables(AFFINE_VARIABLES)
        self.n = self.q.degree_in("y")
        if self.n < 2:
            raise DegenerateInputError(f"y についての次数が 2 以上の曲線が必要です: {self.q}")
        parts = self.q.coefficients_in("y")
        lead = parts.get(self.n)
        if self.n != self.q.total_degree() or lead is None or not lead.is_constant():
            k = suggest_shear(self.q)
            hint = f"x ↦ x + {k}·y のシアを適用してください" if k is not None else "一般的なシアが見つかりません"
            raise DegenerateInputError(f"曲線が無限遠で一般的ではありません（y^n の係数が定数でない）。{hint}")
        self.leading = lead.constant_value()
        zero = ExactPolynomial.zero(AFFINE_VARIABLES)
        # y の冪の高い順、各係数は x の昇冪係数リスト
        self.fiber_polys = [parts.get(p, zero).univariate_coefficients("x") for p in range(self.n, -1, -1)]
        self._converted = {}

    def _prepared(self, context):
        key = context.digits
        if key not in self._converted:
            self._converted[key] = [
                [context.number(c) for c in reversed(coeffs)] or [context.number(0)]
                for coeffs in self.fiber_polys
            ]
        return self._converted[key]

    def fiber_coefficients(self, x, context):
        """x を固定した y の多項式の係数（高次から）。"""
        return [horner(coeffs, x) for coeffs in self._prepared(context)]

    def fiber_roots(self, x, context):
        """
        x 上のファイバーの n 個の根を (Re, Im) 昇順で返します。
        """
        roots = context.roots(self.fiber_coefficients(x, context))
        return sorted(roots, key=lambda r: (float(r.real), float(r.imag)))

    def to_dict(self):
        return {"q": self.q.to_string(), "n": self.n, "leading": str(self.leading)}


def _is_generic(q):
    n = q.degree_in("y")
    lead = q.coefficients_in("y").get(n)
    return n == q.total_degree() and lead is not None and lead.is_constant()


def suggest_shear(q):
    """
    x ↦ x + k·y で無限遠で一般的になる最小の |k|（0 を除く）。見つからなければ None。

    y ↦ y + k·x では y^n の係数は変わりません。
    """
    x, y = (ExactPolynomial.variable(v, AFFINE_VARIABLES) for v in AFFINE_VARIABLES)
    for k in shear_sequence():
        if k == 0:
            continue
        if abs(k) > MAX_SUGGESTED_SHEAR:
            return None
        if _is_generic(q.substitute({"x": x + y * k}).with_variables(AFFINE_VARIABLES)):
            return k


def discriminant_x(curve):
    """
    x への射影の判別式 res_y(q, ∂q/∂y) を計算します。

    Returns:
        ExactPolynomial: x の一変数多項式
    """
    discriminant = resultant_wrt(curve.q, curve.q.derivative("y"), "y")
    if discriminant.is_zero():
        raise DegenerateInputError(f"判別式が 0 です（被約でない曲線）: {curve.q}")
    return discriminant.with_variables(("x",))


class CriticalSet:
    """
    臨界値 x_1..x_p と誤差半径、ループの円の半径、基点 M。

    ループの始点はファイバーを読む点 M − iε（ε = BASE_OFFSET × ループの円の半径）です。
    実係数の曲線では実軸上のファイバーに共役な根の組があり Re が重なるため、
    実軸から少し下にずらします。
    """

    def __init__(self, points, radii, loop_radius, base_point, digits):
        self.points = list(points)
        self.radii = list(radii)
        self.loop_radius = float(loop_radius)
        self.base_point = float(base_point)
        self.digits = digits

    def __len__(self):
        return len(self.points)

    @property
    def base_offset(self):
        return BASE_OFFSET * self.loop_radius

    @property
    def base(self):
        """ループの始点 M − iε。"""
        return complex(self.base_point, -self.base_offset)

    def with_base_point(self, base_point):
        return CriticalSet(self.points, self.radii, self.loop_radius, base_point, self.digits)

    def to_dict(self):
        return {
            "points": [[p.real, p.imag] for p in self.points],
            "radii": self.radii,
            "loop_radius": self.loop_radius,
            "base_point": self.base_point,
            "base_offset": self.base_offset,
            "digits": self.digits,
        }


def _locate(coefficients, context):
    # 根と包含半径 deg·|f/f'|（高精度で評価）
    roots = context.roots([context.number(c) for c in coefficients])
    degree = len(coefficients) - 1
    derivative = derivative_coefficients(coefficients)
    points, radii = [], []
    with mp.workdps(max(2 * context.digits, 30)):
        exact = [mp.mpf(c.numerator) / c.denominator for c in coefficients]
        exact_derivative = [mp.mpf(c.numerator) / c.denominator for c in derivative]
        for root in roots:
            z = mp.mpc(root)
            slope = abs(mp.polyval(exact_derivative, z))
            value = abs(mp.polyval(exact, z))
            radius = float(degree * value / slope) if slope else float("inf")
            points.append(complex(root))
            radii.append(radius)
    return points, radii


def _disjoint(points, radii):
    return all(abs(points[i] - points[j]) > radii[i] + radii[j] for i, j in combinations(range(len(points)), 2))


def critical_values(curve, precision=DOUBLE_DIGITS, max_precision=60):
    """
    判別式の無平方部分の全根を互いに素な誤差円板で求め、基点を選びます。

    円板が分離できなければ精度を倍にして再計算します。

    Args:
        curve (AffineCurve): 曲線
        precision (int): 開始の十進桁数
        max_precision (int): 精度の上限

    Returns:
        CriticalSet: 臨界値の集合
    """
    discriminant = squarefree_part(discriminant_x(curve))
    coefficients = list(reversed(discriminant.univariate_coefficients("x")))
    if len(coefficients) <= 1:
        return CriticalSet([], [], 1.0, 1.0, precision)

    digits = precision
    while True:
        context = NumericContext(digits)
        points, radii = _locate(coefficients, context)
        certified = len(points) == len(coefficients) - 1 and _disjoint(points, radii)
        if certified:
            break
        if digits * 2 > max_precision:
            raise PrecisionError(f"{digits} 桁の精度で臨界値の円板を分離できません")
        logger.info(f"臨界値の円板が重なるため精度を {digits} から {digits * 2} 桁に上げます")
        digits *= 2

    distances = [abs(a - b) for a, b in combinations(points, 2)]
    loop_radius = min([0.4 * d for d in distances] + [1.0])
    if loop_radius <= max(radii):
        raise PrecisionError("ループの円が誤差円板を囲めません")
    base_point = max(p.real for p in points) + 1.0 + max(radii)
    logger.info(f"臨界値 {len(points)} 個を求めました（{digits} 桁、基点 M = {base_point:.6g}）")
    return CriticalSet(points, radii, loop_radius, base_point, digits)
