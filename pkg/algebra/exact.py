#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
厳密代数演算モジュール

多項式行列の行列式、終結式、核の基底、無平方分解、Sturm 列による
実根の個数、多変数の厳密な割り算を提供します。
計算は sympy（QQ 上の Poly と DomainMatrix）に委ね、
結果は ExactPolynomial と Fraction で返します。入力は変更しません。

バージョン: 1.0.0
"""

import logging
from fractions import Fraction

import sympy as sp
from sympy import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.polyerrors import ExactQuotientFailed

from models.matrix import RationalMatrix
from models.polynomial import ExactPolynomial, merge_variables, symbols_of, to_qq, to_rational
from utils.errors import DegenerateInputError, DimensionError, NotSquarefreeError

logger = logging.getLogger(__name__)

MAX_DETERMINANT_SIZE = 32


def _fraction(value):
    return Fraction(int(value.numerator), int(value.denominator))


def _qq_matrix(rows, cols):
    return DomainMatrix([[to_qq(v) for v in row] for row in rows], (len(rows), cols), QQ)


# ----------------------------------------------------------------------
# 行列式
# ----------------------------------------------------------------------
def bareiss_determinant(rows):
    """
    有理数の正方行列の行列式を計算します（QQ 上の DomainMatrix）。

    Args:
        rows (list): 有理数の行のリスト

    Returns:
        Fraction: 行列式
    """
    n = len(rows)
    if n == 0:
        return Fraction(1)
    return _fraction(_qq_matrix(rows, n).det())


def determinant(matrix):
    """
    多項式行列（または有理数行列）の厳密な行列式を計算します。

    定数行列は QQ 上で、それ以外は多項式環 QQ[x0, x1, ...] 上の
    DomainMatrix で分数なし消去を行います。

    Args:
        matrix (PolyMatrix | RationalMatrix): 正方行列（32×32 以下）

    Returns:
        ExactPolynomial: 行列式
    """
    if isinstance(matrix, RationalMatrix):
        matrix = matrix.to_poly_matrix()
    if not matrix.is_square():
        raise DimensionError(f"正方行列ではありません: {matrix.rows}x{matrix.cols}")
    if matrix.rows > MAX_DETERMINANT_SIZE:
        raise DimensionError(f"行列が大きすぎます: {matrix.rows}x{matrix.rows}")
    if matrix.rows == 0:
        return ExactPolynomial.constant(1, matrix.variables)
    if matrix.is_constant():
        value = bareiss_determinant(matrix.to_rational().entries)
        return ExactPolynomial.constant(value, matrix.variables)
    ring = QQ.poly_ring(*symbols_of(matrix.variables))
    rows = [[ring.from_sympy(p.as_expr()) for p in row] for row in matrix.entries]
    logger.debug(f"{matrix.rows}x{matrix.rows} の多項式行列の行列式を計算します")
    value = DomainMatrix(rows, (matrix.rows, matrix.cols), ring).det()
    return ExactPolynomial.from_expr(ring.to_sympy(value), matrix.variables)


# ----------------------------------------------------------------------
# 終結式
# ----------------------------------------------------------------------
def resultant_wrt(p, q, var):
    """
    var を消去する終結式を計算します。

    Args:
        p (ExactPolynomial): 第 1 多項式
        q (ExactPolynomial): 第 2 多項式
        var (str): 消去する変数

    Returns:
        ExactPolynomial: 残りの変数の多項式（共通根で消える）
    """
    if p.is_zero() or q.is_zero():
        raise DegenerateInputError("零多項式の終結式は定義されません")
    if p.degree_in(var) <= 0 and q.degree_in(var) <= 0:
        raise DegenerateInputError(f"変数 {var} がどちらの多項式にも現れません")
    rest = tuple(v for v in merge_variables(p.variables, q.variables) if v != var)
    value = sp.resultant(p.as_expr(), q.as_expr(), sp.Symbol(var))
    return ExactPolynomial.from_expr(sp.expand(value), rest)


# ----------------------------------------------------------------------
# 核と階数
# ----------------------------------------------------------------------
def rref(matrix):
    """
    既約行階段形と主元列のリストを返します。

    Args:
        matrix (RationalMatrix): 入力行列

    Returns:
        tuple: (行のリスト, 主元列のリスト)
    """
    if matrix.rows == 0 or matrix.cols == 0:
        return [list(row) for row in matrix.entries], []
    reduced, pivots = _qq_matrix(matrix.entries, matrix.cols).rref()
    return [[_fraction(v) for v in row] for row in reduced.to_list()], list(pivots)


def kernel_basis(matrix):
    """
    右零空間の基底を返します。自由変数は列の順に並びます。

    Args:
        matrix (RationalMatrix): 入力行列

    Returns:
        list: 有理数ベクトル（Fraction のリスト）のリスト
    """
    if matrix.rows == 0:
        return [[Fraction(int(i == j)) for j in range(matrix.cols)] for i in range(matrix.cols)]
    reduced, pivots = _qq_matrix(matrix.entries, matrix.cols).rref()
    if len(pivots) == matrix.cols:
        return []
    basis = reduced.nullspace_from_rref(pivots)
    return [[_fraction(v) for v in row] for row in basis.to_list()]


def solve_linear(matrix, rhs):
    """
    matrix·v = rhs の特解（自由変数は 0）を返します。解がなければ None。
    """
    augmented = matrix.hstack(RationalMatrix([[v] for v in rhs], cols=1))
    reduced, pivots = rref(augmented)
    if matrix.cols in pivots:
        return None
    solution = [Fraction(0)] * matrix.cols
    for r, col in enumerate(pivots):
        solution[col] = reduced[r][matrix.cols]
    return solution


# ----------------------------------------------------------------------
# 一変数多項式
# ----------------------------------------------------------------------
def _univariate(poly):
    if poly.is_zero():
        raise DegenerateInputError("零多項式は扱えません")
    used = poly.used_variables()
    if len(used) > 1:
        raise DimensionError(f"一変数多項式ではありません: {poly}")
    var = used[0] if used else (poly.variables[0] if poly.variables else "t")
    return var, _in_variable(poly, var)


def _in_variable(poly, var):
    coeffs = [to_qq(c) for c in reversed(poly.univariate_coefficients())]
    return sp.Poly.from_list(coeffs or [QQ.zero], sp.Symbol(var), domain=QQ)


def _wrap(poly, var):
    return ExactPolynomial.from_poly(poly, (var,))


def univariate_gcd(p, q):
    """二つの一変数多項式のモニックな最大公約多項式。"""
    var_p, _ = _univariate(p)
    var_q, _ = _univariate(q)
    var = var_p if p.used_variables() else var_q
    return _wrap(_in_variable(p, var).gcd(_in_variable(q, var)), var)


def squarefree_decompose(poly):
    """
    無平方分解します。

    Args:
        poly (ExactPolynomial): 0 でない一変数多項式

    Returns:
        list: (モニックな因子, 重複度) のリスト（重複度の昇順）
    """
    var, f = _univariate(poly)
    if f.degree() <= 0:
        return []
    _, factors = f.sqf_list()
    return [(_wrap(factor.monic(), var), multiplicity) for factor, multiplicity in factors]


def squarefree_part(poly):
    """重複度を落とした積（モニック）。"""
    var, f = _univariate(poly)
    if f.degree() <= 0:
        return ExactPolynomial.constant(1, (var,))
    return _wrap(f.sqf_part().monic(), var)


def real_root_count(poly, interval=None):
    """
    無平方な一変数多項式の相異なる実根の個数を Sturm 列で数えます。

    Args:
        poly (ExactPolynomial): 無平方な一変数多項式
        interval (tuple): (lo, hi) の区間 (lo, hi]。None は無限大

    Returns:
        int: 実根の個数
    """
    _, f = _univariate(poly)
    if f.degree() <= 0:
        return 0
    if f.gcd(f.diff()).degree() > 0:
        raise NotSquarefreeError(f"無平方ではない多項式です: {poly}")
    lo, hi = interval if interval else (None, None)
    lo = to_rational(lo) if lo is not None else None
    hi = to_rational(hi) if hi is not None else None
    if lo is not None and hi is not None and lo >= hi:
        return 0
    count = int(f.count_roots(lo, hi))
    # count_roots は閉区間 [lo, hi] で数える
    if lo is not None and f.eval(lo) == 0:
        count -= 1
    return count


# ----------------------------------------------------------------------
# 多変数の割り算
# ----------------------------------------------------------------------
def exact_divide(num, den):
    """
    num を den で割り切ります。

    Args:
        num (ExactPolynomial): 被除数
        den (ExactPolynomial): 除数（0 でない）

    Returns:
        ExactPolynomial | None: 割り切れるときは商、割り切れなければ None
    """
    if den.is_zero():
        raise DegenerateInputError("零多項式で割ることはできません")
    variables = merge_variables(num.variables, den.variables)
    num = num.with_variables(variables)
    den = den.with_variables(variables)
    try:
        quotient = num.poly.exquo(den.poly)
    except ExactQuotientFailed:
        return None
    return ExactPolynomial.from_poly(quotient, variables)
