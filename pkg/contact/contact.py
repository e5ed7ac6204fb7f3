#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
接触次数モジュール

次数 2 の写像で座標軸の像となる二本の枝を原点の像で比較し、
D_i / E_i 列の一致の深さから交点の重複度を求めます。
あわせて、12 個の係数記号による記号的な条件式の再現と、
印刷された条件式との照合を提供します。

    D_1 = r2' / r1'、D_n = D_{n-1}' / r1'（x 軸の枝、y = 0）
    E_1 = r2' / r1'、E_n = E_{n-1}' / r1'（y 軸の枝、x = 0）

バージョン: 1.0.0
"""

import logging
from fractions import Fraction

import sympy as sp

from models.polynomial import ExactPolynomial, format_fraction
from models.rational_map import AFFINE_ARITY
from utils.errors import DegenerateInputError, DimensionError, IrregularParametrizationError

logger = logging.getLogger(__name__)

MAX_DEPTH = 3
MAX_MULTIPLICITY = MAX_DEPTH + 1

BRANCHES = {"x-axis": ("x", "y"), "y-axis": ("y", "x")}

SYMBOLS = (
    "a10", "a01", "a20", "a02",
    "b10", "b01", "b20", "b02",
    "c10", "c01", "c20", "c02",
)

# 係数記号と単項式の対応（a: p0、b: p1、c: p2）
_SYMBOL_MONOMIALS = {"10": (1, 0), "01": (0, 1), "20": (2, 0), "02": (0, 2)}

_PRINTED_CONDITIONS = (
    "c01*b10 - c10*b01",
    "b10^3*(c02*b01 - c01*b02) + b01^3*(c10*b20 - c20*b10)",
    "b10^5*(2*c02*b01*b02 + c01*b02*b01*a01 - 2*c01*b02^2 - c02*a01*b01^2)"
    " + b01^5*(2*c10*b20^2 - 2*c20*b10*b20 + c20*a10*b10^2 - c10*a10*b10*b20)",
)

# 前の条件式を順に解く記号
_SOLVE_FOR = ("c01", "c02")


class RationalFunction:
    """
    一変数の有理関数 numerator / denominator（既約、分母はモニック）。
    """

    __slots__ = ("numerator", "denominator", "variable")

    def __init__(self, numerator, denominator=None, variable=None):
        """
        RationalFunctionクラスのコンストラクタ。

        Args:
            numerator (ExactPolynomial): 分子
            denominator (ExactPolynomial): 分母（省略時は 1）
            variable (str): 変数名（省略時は分子・分母の使用変数）
        """
        if variable is None:
            used = set(numerator.used_variables())
            if denominator is not None:
                used |= set(denominator.used_variables())
            if len(used) > 1:
                raise DimensionError(f"一変数の有理関数ではありません: {sorted(used)}")
            variable = used.pop() if used else "t"
        self.variable = variable
        numerator = numerator.with_variables((variable,))
        if denominator is None:
            denominator = ExactPolynomial.constant(1, (variable,))
        denominator = denominator.with_variables((variable,))
        if denominator.is_zero():
            raise DegenerateInputError("有理関数の分母が 0 です")
        if numerator.is_zero():
            self.numerator = numerator
            self.denominator = ExactPolynomial.constant(1, (variable,))
            return
        reduced_num, reduced_den = numerator.poly.cancel(denominator.poly, include=True)
        lead = reduced_den.LC()
        self.numerator = ExactPolynomial.from_poly(reduced_num, (variable,)) / lead
        self.denominator = ExactPolynomial.from_poly(reduced_den, (variable,)) / lead

    def derivative(self):
        n, d, v = self.numerator, self.denominator, self.variable
        return RationalFunction(n.derivative(v) * d - n * d.derivative(v), d * d, v)

    def __mul__(self, other):
        return RationalFunction(
            self.numerator * other.numerator, self.denominator * other.denominator, self.variable
        )

    def __truediv__(self, other):
        if other.numerator.is_zero():
            raise ZeroDivisionError("零の有理関数で割ることはできません")
        return RationalFunction(
            self.numerator * other.denominator, self.denominator * other.numerator, self.variable
        )

    def value_at(self, point=0):
        """
        点での値を返します。分母が 0 になる点では ZeroDivisionError。
        """
        point = Fraction(point)
        den = Fraction(self.denominator.evaluate({self.variable: point}))
        if den == 0:
            raise ZeroDivisionError(f"{self} は {point} で定義されません")
        return Fraction(self.numerator.evaluate({self.variable: point})) / den

    def is_zero(self):
        return self.numerator.is_zero()

    def __str__(self):
        return f"({self.numerator}) / ({self.denominator})"

    def __repr__(self):
        return f"RationalFunction({self})"


class ContactReport:
    """
    一本の枝の D_i(0) または E_i(0) の列と、二本の枝の比較から決まる重複度。
    """

    def __init__(self, branch, sequence, multiplicity=None):
        """
        ContactReportクラスのコンストラクタ。

        Args:
            branch (str): "x-axis" または "y-axis"
            sequence (list): 原点での値（Fraction）のリスト
            multiplicity (int): 重複度 1..4（未比較なら None）
        """
        self.branch = branch
        self.sequence = list(sequence)
        self.multiplicity = multiplicity

    def to_dict(self):
        return {
            "branch": self.branch,
            "sequence": [format_fraction(v) for v in self.sequence],
            "multiplicity": self.multiplicity,
        }


def _check_map(rational_map):
    if rational_map.arity != AFFINE_ARITY:
        raise DimensionError("接触次数の解析には (x, y) のアフィン写像が必要です")
    if rational_map.degree != 2:
        raise DimensionError(f"接触次数の解析は次数 2 の写像のみ対応しています: 次数 {rational_map.degree}")
    if rational_map.p0.constant_term() == 0:
        raise DegenerateInputError("p0(0, 0) = 0 です。原点の像が定義されません")


def _branch_variable(branch):
    if branch not in BRANCHES:
        raise ValueError(f"不明な枝です: {branch}（x-axis または y-axis）")
    return BRANCHES[branch]


def branch_functions(rational_map, branch):
    """
    枝に制限した r1 = p1/p0 と r2 = p2/p0 を返します。

    Args:
        rational_map (RationalMap): 次数 2 のアフィン写像
        branch (str): "x-axis"（y = 0）または "y-axis"（x = 0）

    Returns:
        tuple: (r1, r2) の RationalFunction
    """
    var, other = _branch_variable(branch)
    p0, p1, p2 = (p.substitute({other: 0}).with_variables((var,)) for p in rational_map.components)
    return RationalFunction(p1, p0, var), RationalFunction(p2, p0, var)


def contact_sequence(rational_map, branch, depth=MAX_DEPTH):
    """
    枝の D_1(0)..D_depth(0)（y 軸なら E_i(0)）を計算します。

    Args:
        rational_map (RationalMap): 次数 2 のアフィン写像
        branch (str): "x-axis" または "y-axis"
        depth (int): 1 以上 3 以下

    Returns:
        list: Fraction のリスト
    """
    _check_map(rational_map)
    if not 1 <= depth <= MAX_DEPTH:
        raise ValueError(f"深さは 1 以上 {MAX_DEPTH} 以下です: {depth}")
    r1, r2 = branch_functions(rational_map, branch)
    slope = r1.derivative()
    try:
        if slope.value_at(0) == 0:
            raise IrregularParametrizationError(f"{branch} の枝で r1' が原点で 0 になります")
    except ZeroDivisionError as e:
        raise DegenerateInputError(f"{branch} の枝が原点で定義されません") from e

    values = []
    current = r2.derivative() / slope
    for n in range(1, depth + 1):
        values.append(current.value_at(0))
        if n < depth:
            current = current.derivative() / slope
    logger.debug(f"{branch} の接触列: {[format_fraction(v) for v in values]}")
    return values


def contact_numerators(p0, p1, p2, var, depth=MAX_DEPTH):
    """
    枝の多項式から D_n(0) = N_n(0) / W(0)^e_n の分子と指数を打ち切り展開で求めます。

    係数が記号を含む多項式でも動作します。

    Args:
        p0, p1, p2 (ExactPolynomial): 枝に制限した成分（var と係数記号の多項式）
        var (str): 枝の変数
        depth (int): 深さ

    Returns:
        tuple: (W(0), [(N_n(0), e_n), ...])
    """
    def d(poly):
        return poly.derivative(var)

    def at_zero(poly):
        return poly.substitute({var: 0})

    W = (d(p1) * p0 - p1 * d(p0)).truncate(var, depth)
    p0_squared = (p0 * p0).truncate(var, depth)
    N = (d(p2) * p0 - p2 * d(p0)).truncate(var, depth - 1)
    exponent = 1
    numerators = []
    for n in range(1, depth + 1):
        numerators.append((at_zero(N), exponent))
        if n < depth:
            N = ((d(N) * W - N * d(W) * exponent) * p0_squared).truncate(var, depth - n - 1)
            exponent += 2
    return at_zero(W), numerators


def contact_reports(rational_map, depth=MAX_DEPTH):
    """
    二本の枝の接触列を比較した ContactReport の組を返します。

    Returns:
        tuple: (x 軸の ContactReport, y 軸の ContactReport)
    """
    x_values = contact_sequence(rational_map, "x-axis", depth)
    y_values = contact_sequence(rational_map, "y-axis", depth)
    multiplicity = depth + 1
    for index, (d_value, e_value) in enumerate(zip(x_values, y_values), start=1):
        if d_value != e_value:
            multiplicity = index
            break
    return (
        ContactReport("x-axis", x_values, multiplicity),
        ContactReport("y-axis", y_values, multiplicity),
    )


def intersection_multiplicity_origin(rational_map):
    """
    原点の像での二本の像曲線の交点の重複度（1..4）を返します。

    D_i(0) ≠ E_i(0) となる最初の i が重複度で、i = 1..3 ですべて一致すれば 4 です。
    """
    x_report, _ = contact_reports(rational_map, MAX_DEPTH)
    logger.info(f"原点の像での重複度: {x_report.multiplicity}")
    return x_report.multiplicity


# ----------------------------------------------------------------------
# 記号的な条件式
# ----------------------------------------------------------------------
def _symbolic_component(prefix, constant=0):
    variables = ("x", "y") + SYMBOLS
    poly = ExactPolynomial.constant(constant, variables)
    for suffix, (ex, ey) in _SYMBOL_MONOMIALS.items():
        symbol = ExactPolynomial.variable(prefix + suffix, variables)
        monomial = ExactPolynomial(variables, {(ex, ey) + (0,) * len(SYMBOLS): 1})
        poly = poly + symbol * monomial
    return poly


def symbolic_map_components():
    """
    p0 = 1 + a10·x + a01·y + a20·x² + a02·y²、p1 = b10·x + ⋯、p2 = c10·x + ⋯ を返します。
    """
    return _symbolic_component("a", 1), _symbolic_component("b"), _symbolic_component("c")


def symbolic_conditions_degree2(depth=MAX_DEPTH):
    """
    D_i(0) − E_i(0) の分子を 12 個の係数記号の多項式として計算します。

    分母 W(0)^e を払った N_x(0)·W_y(0)^e − N_y(0)·W_x(0)^e から
    共通の単項式因子を取り除いたものを返します。

    Returns:
        list: i = 1..depth の ExactPolynomial
    """
    components = symbolic_map_components()
    per_branch = {}
    for branch, (var, other) in BRANCHES.items():
        restricted = [p.substitute({other: 0}) for p in components]
        per_branch[branch] = contact_numerators(*restricted, var, depth)
    w_x, numerators_x = per_branch["x-axis"]
    w_y, numerators_y = per_branch["y-axis"]
    conditions = []
    for (n_x, exponent), (n_y, _) in zip(numerators_x, numerators_y):
        cleared = n_x * w_y ** exponent - n_y * w_x ** exponent
        conditions.append(cleared.with_variables(SYMBOLS).strip_monomial_content())
    return conditions


def printed_conditions():
    """印刷された 3 つの条件式を係数記号の多項式として返します。"""
    return [ExactPolynomial.parse(text, SYMBOLS) for text in _PRINTED_CONDITIONS]


def _solve_earlier(earlier):
    # 前の条件式 k 個目を _SOLVE_FOR[k] について解く（一次でなければ None）
    solved = {}
    for condition, name in zip(earlier, _SOLVE_FOR):
        symbol = sp.Symbol(name)
        numerator, _ = sp.fraction(sp.together(condition.as_expr().xreplace(solved)))
        poly = sp.Poly(sp.expand(numerator), symbol)
        if poly.degree() != 1:
            return None
        slope, rest = poly.all_coeffs()
        solved[symbol] = sp.cancel(-rest / slope)
    return solved


def _is_monomial_unit(expr):
    numerator, denominator = sp.fraction(sp.cancel(expr))
    if numerator == 0:
        return False
    gens = [sp.Symbol(s) for s in SYMBOLS]
    return all(sp.Poly(part, *gens).is_monomial for part in (numerator, denominator))


def ratio_modulo_earlier(ours, theirs, earlier):
    """
    前の条件式が消えるという関係のもとで ours / theirs を約分します。

    前の条件式を c01、c02 について順に解いて代入し、比が係数記号の
    単項式の商（0 でない定数を含む）になるときだけその比を返します。

    Args:
        ours (ExactPolynomial): 計算した条件式
        theirs (ExactPolynomial): 印刷された条件式
        earlier (list): それより前の印刷された条件式

    Returns:
        sympy.Expr | None: 単項式の比、または一致しなければ None
    """
    solved = _solve_earlier(earlier)
    if solved is None:
        logger.debug("前の条件式を係数記号について一次で解けません")
        return None
    theirs_reduced = sp.cancel(theirs.as_expr().xreplace(solved))
    if theirs_reduced == 0:
        return None
    ours_reduced = sp.cancel(ours.as_expr().xreplace(solved))
    ratio = sp.cancel(ours_reduced / theirs_reduced)
    return ratio if _is_monomial_unit(ratio) else None


def conditions_match(computed=None):
    """
    記号的に計算した条件式と印刷された条件式を照合します。

    直接の定数倍で一致しない場合は、前の条件式を解いて代入した上で
    比が単項式の商になるかを厳密に調べます。

    Args:
        computed (list): 照合する条件式（省略時は symbolic_conditions_degree2 の結果）

    Returns:
        list: 各 i についての {"index", "match", "method", "ratio"} の辞書
    """
    if computed is None:
        computed = symbolic_conditions_degree2()
    printed = printed_conditions()
    results = []
    for index, (ours, theirs) in enumerate(zip(computed, printed), start=1):
        if ours.is_proportional_to(theirs):
            ratio = ours.leading_coefficient() / theirs.leading_coefficient()
            results.append({"index": index, "match": True, "method": "direct", "ratio": format_fraction(ratio)})
            continue
        ratio = ratio_modulo_earlier(ours, theirs, printed[:index - 1])
        match = ratio is not None
        results.append({
            "index": index,
            "match": match,
            "method": "reduced",
            "ratio": str(ratio) if match else None,
        })
        if not match:
            logger.warning(f"条件式 {index} が印刷された式と一致しません")
    return results


def coefficient_values(rational_map):
    """
    写像の係数を記号 a10..c02 の値として取り出します（p0(0) = 1 に正規化）。

    Returns:
        dict: 記号名から Fraction への辞書
    """
    _check_map(rational_map)
    p0, p1, p2 = rational_map.components
    if p1.constant_term() != 0 or p2.constant_term() != 0:
        raise DegenerateInputError("原点の像が (1 : 0 : 0) ではありません（p1、p2 の定数項が 0 でない）")
    scale = p0.constant_term()
    values = {}
    for prefix, poly in zip("abc", (p0, p1, p2)):
        for suffix, exps in _SYMBOL_MONOMIALS.items():
            values[prefix + suffix] = poly.terms.get(exps, Fraction(0)) / scale
    return values


def evaluate_conditions(rational_map):
    """写像の係数を印刷された条件式に代入した値のリスト。"""
    point = coefficient_values(rational_map)
    return [Fraction(c.evaluate(point)) for c in printed_conditions()]


def multiplicity_from_conditions(rational_map):
    """最初に 0 でない条件式の番号（すべて 0 なら 4）。"""
    for index, value in enumerate(evaluate_conditions(rational_map), start=1):
        if value != 0:
            return index
    return MAX_MULTIPLICITY
