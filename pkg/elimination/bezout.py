#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Bezout 消去モジュール

一変数 Bezout 行列、一般化 Bezout 行列、主部分空間を用いて、
直線と平面曲線の有理写像による像を行列式として計算します。
像の検証には代入と割り算による独立なオラクルを用います。

行列束の組み合わせ規約（utils.conventions に記録）:
    B(p, q) = β¹² ⊗ D0 + β² ⊗ D1 − β¹ ⊗ D2
    β¹ ↔ (x1·y0 − x0·y1), β² ↔ (x2·y0 − x0·y2), β¹² ↔ (x1·y2 − x2·y1)

バージョン: 1.0.0
"""

import logging
from fractions import Fraction

from algebra.exact import (
    determinant,
    exact_divide,
    kernel_basis,
    resultant_wrt,
    solve_linear,
    univariate_gcd,
)
from models.matrix import PolyMatrix, RationalMatrix
from models.polynomial import ExactPolynomial, PROJECTIVE_VARIABLES, monomials_of_degree
from models.rational_map import (
    LINE_ARITY,
    PLANE_ARITY,
    DetRep,
    GeneralizedBezout,
    PrincipalSubspace,
    RationalMap,
    slot_monomials,
)
from utils.errors import (
    BasepointOnCurveError,
    DegenerateInputError,
    DimensionError,
    InternalConsistencyError,
)

logger = logging.getLogger(__name__)

_CAYLEY_VARIABLES = ("u", "v")
_BIHOMOGENEOUS_VARIABLES = ("x0", "x1", "x2", "y0", "y1", "y2")


# ----------------------------------------------------------------------
# 一変数 Bezout 行列
# ----------------------------------------------------------------------
def bezout_matrix(p, q, size=None):
    """
    一変数 Bezout 行列を計算します。

    p(x)q(y) − q(x)p(y) = Σ b_ij x^i (x − y) y^j を満たす n×n 行列
    (i, j = 0..n−1) を、Cayley 商を (x − y) で厳密に割って求めます。

    Args:
        p (ExactPolynomial): 一変数多項式
        q (ExactPolynomial): 同じ変数の一変数多項式
        size (int): 行列のサイズ n（省略時は max(deg p, deg q)）

    Returns:
        RationalMatrix: n×n の Bezout 行列
    """
    used = set(p.used_variables()) | set(q.used_variables())
    if len(used) > 1:
        raise DimensionError(f"同じ一変数の多項式が必要です: {sorted(used)}")
    var = used.pop() if used else None
    natural = max(p.total_degree(), q.total_degree())
    n = natural if size is None else int(size)
    if var is None or natural < 1:
        raise DegenerateInputError("両方の多項式が定数です")
    if n < natural:
        raise DimensionError(f"サイズ {n} が次数 {natural} より小さいです")

    u, v = _CAYLEY_VARIABLES
    pu, qu = p.rename({var: u}).with_variables(_CAYLEY_VARIABLES), q.rename({var: u}).with_variables(_CAYLEY_VARIABLES)
    pv, qv = p.rename({var: v}).with_variables(_CAYLEY_VARIABLES), q.rename({var: v}).with_variables(_CAYLEY_VARIABLES)
    cayley = pu * qv - qu * pv
    difference = ExactPolynomial(_CAYLEY_VARIABLES, {(1, 0): 1, (0, 1): -1})
    quotient = exact_divide(cayley, difference)
    if quotient is None:
        raise InternalConsistencyError("Cayley 商が (x − y) で割り切れません")
    entries = [[Fraction(0)] * n for _ in range(n)]
    for (i, j), coeff in quotient.terms.items():
        entries[i][j] = coeff
    return RationalMatrix(entries, cols=n)


def line_image(rational_map):
    """
    直線の像 q = det(x0·B(p1,p2) + x1·B(p2,p0) + x2·B(p0,p1)) を計算します。

    Args:
        rational_map (RationalMap): arity 1 の写像

    Returns:
        ExactPolynomial: 先頭係数 1 に正規化された次数 n の斉次多項式
    """
    if rational_map.arity != LINE_ARITY:
        raise DimensionError("line_image には直線からの写像が必要です")
    n = rational_map.degree
    p0, p1, p2 = rational_map.components
    matrices = [_bezout_or_zero(p1, p2, n), _bezout_or_zero(p2, p0, n), _bezout_or_zero(p0, p1, n)]
    if all(m.is_zero() for m in matrices):
        raise DegenerateInputError("三つの Bezout 行列がすべて 0 です")
    image = determinant(PolyMatrix.pencil(matrices, PROJECTIVE_VARIABLES))
    if image.is_zero():
        raise DegenerateInputError("行列式が恒等的に 0 です（退化した写像）")
    logger.info(f"直線の像を計算しました: 次数 {image.total_degree()}")
    return image.normalized()


def _bezout_or_zero(p, q, n):
    if p.is_constant() and q.is_constant():
        return RationalMatrix.zeros(n, n)
    return bezout_matrix(p, q, size=n)


# ----------------------------------------------------------------------
# 一般化 Bezout 行列
# ----------------------------------------------------------------------
def _bihomogeneous_unit(exps_x, exps_y):
    return ExactPolynomial(_BIHOMOGENEOUS_VARIABLES, {tuple(exps_x) + tuple(exps_y): 1})


def _brackets():
    x0, x1, x2, y0, y1, y2 = (
        ExactPolynomial.variable(name, _BIHOMOGENEOUS_VARIABLES) for name in _BIHOMOGENEOUS_VARIABLES
    )
    return {
        "beta12": x1 * y2 - x2 * y1,
        "beta1": x1 * y0 - x0 * y1,
        "beta2": x2 * y0 - x0 * y2,
    }


def _unknowns(n):
    # β¹² ブロック、β¹ ブロック、β² ブロックの順に上三角を行優先で並べる
    size = n * (n + 1) // 2
    pairs = [(a, b) for a in range(size) for b in range(a, size)]
    return [(name, a, b) for name in ("beta12", "beta1", "beta2") for a, b in pairs]


def _expansion_columns(n):
    monomials = monomials_of_degree(3, n - 1)
    brackets = _brackets()
    columns = []
    for name, a, b in _unknowns(n):
        basis = _bihomogeneous_unit(monomials[a], (0, 0, 0)) * brackets[name] * _bihomogeneous_unit((0, 0, 0), monomials[b])
        if a != b:
            basis = basis + _bihomogeneous_unit(monomials[b], (0, 0, 0)) * brackets[name] * _bihomogeneous_unit((0, 0, 0), monomials[a])
        columns.append(basis)
    return columns


def _system_matrix(columns):
    rows_index = {}
    for column in columns:
        for exps in column.terms:
            rows_index.setdefault(exps, len(rows_index))
    grid = [[Fraction(0)] * len(columns) for _ in rows_index]
    for j, column in enumerate(columns):
        for exps, coeff in column.terms.items():
            grid[rows_index[exps]][j] = coeff
    return RationalMatrix(grid, cols=len(columns)), rows_index


def _beta_from_vector(n, vector):
    size = n * (n + 1) // 2
    blocks = {name: [[Fraction(0)] * size for _ in range(size)] for name in ("beta12", "beta1", "beta2")}
    for value, (name, a, b) in zip(vector, _unknowns(n)):
        blocks[name][a][b] = value
        blocks[name][b][a] = value
    return GeneralizedBezout(
        n,
        RationalMatrix(blocks["beta1"], cols=size),
        RationalMatrix(blocks["beta2"], cols=size),
        RationalMatrix(blocks["beta12"], cols=size),
    )


def _split_xy(p):
    p = p.with_variables(PROJECTIVE_VARIABLES)
    px = ExactPolynomial(_BIHOMOGENEOUS_VARIABLES, {e + (0, 0, 0): c for e, c in p.terms.items()})
    py = ExactPolynomial(_BIHOMOGENEOUS_VARIABLES, {(0, 0, 0) + e: c for e, c in p.terms.items()})
    return px, py


def bezout_expansion(bezout):
    """一般化 Bezout 行列の展開 Σ β x^i [bracket] y^j を返します。"""
    monomials = bezout.monomials
    brackets = _brackets()
    total = ExactPolynomial.zero(_BIHOMOGENEOUS_VARIABLES)
    for name, matrix in (("beta12", bezout.beta12), ("beta1", bezout.beta1), ("beta2", bezout.beta2)):
        for a in range(bezout.size):
            for b in range(bezout.size):
                if matrix[a, b]:
                    term = _bihomogeneous_unit(monomials[a], (0, 0, 0)) * brackets[name]
                    total = total + term * _bihomogeneous_unit((0, 0, 0), monomials[b]) * matrix[a, b]
    return total


def generalized_bezout(p, q, n=None):
    """
    一般化 Bezout 行列を対称性を課した線形方程式系の解として計算します。

    自由変数は 0 とし、解は展開式で再検証します。

    Args:
        p (ExactPolynomial): x0, x1, x2 の次数 n の斉次多項式
        q (ExactPolynomial): 同じ次数の斉次多項式
        n (int): 次数（片方が 0 のときに指定）

    Returns:
        GeneralizedBezout: 対称な β¹, β², β¹²
    """
    if n is None:
        n = max(p.total_degree(), q.total_degree())
    for poly in (p, q):
        if not poly.is_zero() and (not poly.is_homogeneous() or poly.total_degree() != n):
            raise DimensionError(f"{poly} は次数 {n} の斉次多項式ではありません")
    if n < 1:
        raise DegenerateInputError("次数 1 以上の多項式が必要です")
    px, py = _split_xy(p)
    qx, qy = _split_xy(q)
    target = px * qy - qx * py
    columns = _expansion_columns(n)
    matrix, rows_index = _system_matrix(columns)
    for exps in target.terms:
        if exps not in rows_index:
            raise InternalConsistencyError("展開式の単項式に含まれない項があります")
    rhs = [Fraction(0)] * matrix.rows
    for exps, coeff in target.terms.items():
        rhs[rows_index[exps]] = coeff
    solution = solve_linear(matrix, rhs)
    if solution is None:
        raise InternalConsistencyError("一般化 Bezout の方程式系が解を持ちません")
    bezout = _beta_from_vector(n, solution)
    if bezout_expansion(bezout) != target:
        raise InternalConsistencyError("一般化 Bezout 行列の展開が一致しません")
    return bezout


def generalized_bezout_syzygies(n):
    """
    展開方程式系の核（三つ組 β の間のシジジー）を GeneralizedBezout のリストで返します。
    """
    matrix, _ = _system_matrix(_expansion_columns(n))
    return [_beta_from_vector(n, vector) for vector in kernel_basis(matrix)]


# ----------------------------------------------------------------------
# 主部分空間と曲線の像
# ----------------------------------------------------------------------
def principal_subspace(rep, n):
    """
    主部分空間 V_n を計算します。

    i1 + i2 ≤ n − 2 の各スロットについて
    D0·v_{i1,i2} + D1·v_{i1+1,i2} + D2·v_{i1,i2+1} = 0 を課した核の基底です。

    Args:
        rep (DetRep): 行列式表現
        n (int): 写像の次数

    Returns:
        PrincipalSubspace: V_n の基底
    """
    if n < 1:
        raise DimensionError(f"n は 1 以上でなければなりません: {n}")
    slots = slot_monomials(n)
    m = rep.m
    width = m * len(slots)
    if n == 1:
        basis = [[Fraction(1) if i == j else Fraction(0) for i in range(width)] for j in range(width)]
        return PrincipalSubspace(n, m, basis)
    index = {slot: k for k, slot in enumerate(slots)}
    rows = []
    for (i1, i2) in slots:
        if i1 + i2 > n - 2:
            continue
        block = [[Fraction(0)] * width for _ in range(m)]
        for matrix, slot in ((rep.D0, (i1, i2)), (rep.D1, (i1 + 1, i2)), (rep.D2, (i1, i2 + 1))):
            offset = index[slot] * m
            for r in range(m):
                for c in range(m):
                    block[r][offset + c] += matrix[r, c]
        rows.extend(block)
    basis = kernel_basis(RationalMatrix(rows, cols=width))
    logger.debug(f"主部分空間 V_{n}: 次元 {len(basis)} / {width}")
    return PrincipalSubspace(n, m, basis)


def block_pencil_matrix(bezout, rep):
    """
    B(p, q) = β¹² ⊗ D0 + β² ⊗ D1 − β¹ ⊗ D2 を W_n 上の行列として返します。
    """
    m = rep.m
    size = bezout.size
    grid = [[Fraction(0)] * (size * m) for _ in range(size * m)]
    parts = ((bezout.beta12, rep.D0, 1), (bezout.beta2, rep.D1, 1), (bezout.beta1, rep.D2, -1))
    for a in range(size):
        for b in range(size):
            for beta, matrix, sign in parts:
                weight = beta[a, b]
                if not weight:
                    continue
                for r in range(m):
                    for c in range(m):
                        grid[a * m + r][b * m + c] += sign * weight * matrix[r, c]
    return RationalMatrix(grid, cols=size * m)


def restricted_pencil(rep, rational_map, bezouts=None, subspace=None):
    """
    主部分空間に制限した行列束 Kᵀ(x0·B(p1,p2) + x1·B(p2,p0) + x2·B(p0,p1))K を返します。

    Args:
        rep (DetRep): 行列式表現
        rational_map (RationalMap): arity 3 の写像
        bezouts (tuple): (B(p1,p2), B(p2,p0), B(p0,p1)) の一般化 Bezout 行列（省略時は計算）
        subspace (PrincipalSubspace): V_n（省略時は計算）
    """
    n = rational_map.degree
    p0, p1, p2 = rational_map.components
    if bezouts is None:
        bezouts = (
            generalized_bezout(p1, p2, n),
            generalized_bezout(p2, p0, n),
            generalized_bezout(p0, p1, n),
        )
    if subspace is None:
        subspace = principal_subspace(rep, n)
    basis = subspace.basis_matrix()
    basis_t = basis.transpose()
    restricted = [basis_t * block_pencil_matrix(bezout, rep) * basis for bezout in bezouts]
    return PolyMatrix.pencil(restricted, PROJECTIVE_VARIABLES)


def _eliminating_variable(curve):
    for var in ("x2", "x1", "x0"):
        if curve.degree_in(var) > 0:
            return var
    raise DegenerateInputError("曲線が定数です")


def _forms_share_root(forms, variables):
    # 二変数斉次形式の共通根を、第 1 変数 = 1 の一変数 gcd と無限遠点で調べる
    # 零の形式は曲線の成分上で消える成分に当たり、どの点にも制約を課さない
    first, second = variables
    forms = [form for form in forms if not form.is_zero()]
    if not forms:
        return True
    at_infinity = all(
        form.substitute({first: 0}).is_zero() for form in forms
    )
    if at_infinity:
        return True
    common = None
    for form in forms:
        affine = form.substitute({first: 1}).with_variables((second,))
        if affine.is_constant():
            return False
        common = affine if common is None else univariate_gcd(common, affine)
        if common.total_degree() < 1:
            return False
    return True


def check_basepoints(rep, rational_map, curve=None):
    """
    写像の基点が曲線上にないことを確かめます。あれば BasepointOnCurveError。
    """
    curve = determinant(rep.pencil()) if curve is None else curve
    if _is_inversion(rational_map):
        for k, matrix in enumerate(rep.matrices):
            if determinant(matrix).is_zero():
                raise BasepointOnCurveError(f"座標点 e{k} が曲線上にあります")
        return
    var = _eliminating_variable(curve)
    rest = tuple(v for v in PROJECTIVE_VARIABLES if v != var)
    forms = []
    for component in rational_map.components:
        if component.is_zero():
            continue
        if component.is_constant():
            return
        forms.append(resultant_wrt(component, curve, var).with_variables(rest))
    if _forms_share_root(forms, rest):
        raise BasepointOnCurveError("写像の成分と曲線に共通零点がある可能性があります")


def _is_inversion(rational_map):
    reference = RationalMap.inversion()
    return rational_map.arity == PLANE_ARITY and all(
        a == b for a, b in zip(rational_map.components, reference.components)
    )


def curve_image(rep, rational_map, bezouts=None):
    """
    平面曲線 det(x0·D0 + x1·D1 + x2·D2) = 0 の有理写像による像を計算します。

    Args:
        rep (DetRep): 曲線の行列式表現
        rational_map (RationalMap): arity 3（またはアフィン）の写像
        bezouts (tuple): 一般化 Bezout 行列の三つ組（省略時は計算）

    Returns:
        ExactPolynomial: 次数 m·n の像の多項式（先頭係数 1）
    """
    rational_map = rational_map.homogenized()
    if rational_map.arity != PLANE_ARITY:
        raise DimensionError("curve_image には平面からの写像が必要です")
    check_basepoints(rep, rational_map)
    image = determinant(restricted_pencil(rep, rational_map, bezouts))
    if image.is_zero():
        raise DegenerateInputError("制限した行列束の行列式が恒等的に 0 です")
    logger.info(f"曲線の像を計算しました: 次数 {image.total_degree()}")
    return image.normalized()


def inversion_image(rep):
    """
    反転 (x1·x2 : x0·x2 : x0·x1) による曲線の像を、W_2 上のブロック対角な
    行列束 diag(−x0·D0, −x1·D1, −x2·D2) を V_2 に制限して計算します。

    Args:
        rep (DetRep): 座標点を通らない曲線の行列式表現

    Returns:
        ExactPolynomial: 次数 2m の像の多項式（先頭係数 1）
    """
    for k, matrix in enumerate(rep.matrices):
        if determinant(matrix).is_zero():
            raise BasepointOnCurveError(f"座標点 e{k} が曲線上にあります")
    m = rep.m
    blocks = []
    for k, matrix in enumerate(rep.matrices):
        grid = [[Fraction(0)] * (3 * m) for _ in range(3 * m)]
        for r in range(m):
            for c in range(m):
                grid[k * m + r][k * m + c] = -matrix[r, c]
        blocks.append(RationalMatrix(grid, cols=3 * m))
    basis = principal_subspace(rep, 2).basis_matrix()
    basis_t = basis.transpose()
    restricted = [basis_t * block * basis for block in blocks]
    image = determinant(PolyMatrix.pencil(restricted, PROJECTIVE_VARIABLES))
    if image.is_zero():
        raise DegenerateInputError("反転の行列束の行列式が恒等的に 0 です")
    return image.normalized()


def detrep_verify(rep, target):
    """
    行列束の行列式が target の 0 でない定数倍であるかを判定します。

    アフィンの target（x, y）は D0 を定数項とする規約で次数 m に斉次化されます。
    """
    if target.is_zero():
        return False
    if set(target.used_variables()) <= {"x", "y"} and target.used_variables():
        try:
            target = target.homogenize(rep.m)
        except DimensionError:
            return False
    if not target.is_homogeneous() or target.total_degree() != rep.m:
        return False
    return determinant(rep.pencil()).is_proportional_to(target)


def image_oracle(rational_map, curve, candidate):
    """
    像の候補を写像への代入で独立に検証します。

    Args:
        rational_map (RationalMap): 写像
        curve (ExactPolynomial | str): 平面写像のときの元の曲線 Δ（直線なら "line"）
        candidate (ExactPolynomial): 斉次な候補多項式

    Returns:
        bool: 直線なら q(p0,p1,p2) ≡ 0、平面なら Δ | q(p0,p1,p2)
    """
    if candidate.is_zero():
        raise DegenerateInputError("候補の多項式が 0 です")
    rational_map = rational_map.homogenized()
    substitution = dict(zip(PROJECTIVE_VARIABLES, rational_map.components))
    composed = candidate.with_variables(PROJECTIVE_VARIABLES).substitute(substitution)
    if rational_map.arity == LINE_ARITY or curve == "line" or curve is None:
        return composed.is_zero()
    return exact_divide(composed, curve) is not None
