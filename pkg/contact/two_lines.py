#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
二直線分類モジュール

次数 2 の写像で二本の座標軸が写る二つの二次曲線の交点を、
シア後の終結式の無平方分解と Sturm 列で数え、
実交点の重複度の組から 7 つのケースのいずれかに分類します。

    ケース 1: 1,1,1,1   ケース 2: 2,1,1   ケース 3: 2,2   ケース 4: 3,1
    ケース 5: 4         ケース 6: 1,1     ケース 7: 2

バージョン: 1.0.0
"""

import logging
from fractions import Fraction
from itertools import count

import numpy as np

from algebra.exact import (
    bareiss_determinant,
    real_root_count,
    resultant_wrt,
    squarefree_decompose,
    univariate_gcd,
)
from contact.contact import _check_map, intersection_multiplicity_origin
from elimination.bezout import line_image
from models.fixture import FixtureManager
from models.polynomial import ExactPolynomial, PROJECTIVE_VARIABLES, format_fraction
from utils.errors import ClassificationError, DegenerateInputError, InternalConsistencyError

logger = logging.getLogger(__name__)

CASE_TABLE = {
    (1, 1, 1, 1): 1,
    (2, 1, 1): 2,
    (2, 2): 3,
    (3, 1): 4,
    (4,): 5,
    (1, 1): 6,
    (2,): 7,
}

MAX_SHEAR_ATTEMPTS = 41
TOTAL_MULTIPLICITY = 4


def shear_sequence():
    """0, 1, −1, 2, −2, ⋯ の整数列。"""
    yield 0
    for k in count(1):
        yield k
        yield -k


class TwoLinesClassification:
    """
    二直線の像の交点による分類結果。
    """

    def __init__(self, case, real_points, complex_pairs, shear, conics,
                 origin_multiplicity, origin_resultant_multiplicity,
                 reference_factorization=None, reference_tables=()):
        """
        TwoLinesClassificationクラスのコンストラクタ。

        Args:
            case (int): ケース番号 1..7
            real_points (list): {"x", "y", "multiplicity", "at_infinity"} の辞書のリスト
            complex_pairs (list): 共役な複素交点の組ごとの重複度
            shear (int): 使用したシア x1 ↦ x1 + k·x2 の k
            conics (tuple): x 軸と y 軸の像の二次曲線
            origin_multiplicity (int): 接触列から求めた原点の像の重複度
            origin_resultant_multiplicity (int): 終結式から求めた原点の像の重複度
            reference_factorization (Factorization): ケースの代表となる表の分解
            reference_tables (tuple): 参照した表のラベル
        """
        self.case = case
        self.real_points = real_points
        self.complex_pairs = complex_pairs
        self.shear = shear
        self.conics = conics
        self.origin_multiplicity = origin_multiplicity
        self.origin_resultant_multiplicity = origin_resultant_multiplicity
        self.reference_factorization = reference_factorization
        self.reference_tables = tuple(reference_tables)

    @property
    def real_multiplicities(self):
        return sorted((p["multiplicity"] for p in self.real_points), reverse=True)

    @property
    def total_multiplicity(self):
        return sum(self.real_multiplicities) + 2 * sum(self.complex_pairs)

    @property
    def origin_consistent(self):
        return self.origin_multiplicity == self.origin_resultant_multiplicity

    def to_dict(self):
        return {
            "case": self.case,
            "real_points": self.real_points,
            "complex_pairs": self.complex_pairs,
            "shear": self.shear,
            "conics": [c.to_string() for c in self.conics],
            "origin_multiplicity": self.origin_multiplicity,
            "origin_resultant_multiplicity": self.origin_resultant_multiplicity,
            "reference_factorization": (
                self.reference_factorization.to_dict() if self.reference_factorization else None
            ),
            "reference_tables": list(self.reference_tables),
        }


def conic_matrix(conic):
    """二次形式の対称行列（有理数の行のリスト）。"""
    poly = conic.with_variables(PROJECTIVE_VARIABLES)
    rows = [[Fraction(0)] * 3 for _ in range(3)]
    for exps, coeff in poly.terms.items():
        indices = [i for i, e in enumerate(exps) for _ in range(e)]
        if len(indices) != 2:
            raise DegenerateInputError(f"二次形式ではありません: {conic}")
        i, j = indices
        if i == j:
            rows[i][i] += coeff
        else:
            rows[i][j] += coeff / 2
            rows[j][i] += coeff / 2
    return rows


def image_conics(rational_map):
    """
    二本の座標軸の像の二次曲線を計算し、退化や一致を検査します。

    Returns:
        tuple: (x 軸の像, y 軸の像)
    """
    conics = tuple(line_image(rational_map.restrict_to_axis(axis)) for axis in ("x-axis", "y-axis"))
    for axis, conic in zip(("x 軸", "y 軸"), conics):
        if conic.total_degree() != 2 or bareiss_determinant(conic_matrix(conic)) == 0:
            raise DegenerateInputError(f"{axis}の像が非退化な二次曲線ではありません: {conic}")
    if conics[0].is_proportional_to(conics[1]):
        raise DegenerateInputError("二つの像の二次曲線が一致します")
    return conics


class _ShearData:
    # シア後の終結式と x2 を決める一次式
    def __init__(self, k, resultant, numerator, denominator):
        self.k = k
        self.resultant = resultant
        self.numerator = numerator
        self.denominator = denominator

    def affine(self, poly):
        return poly.substitute({"x0": 1}).with_variables(("x1",))


def _sheared(conic, k):
    x1, x2 = (ExactPolynomial.variable(v, PROJECTIVE_VARIABLES) for v in ("x1", "x2"))
    return conic.substitute({"x1": x1 + x2 * k}).with_variables(PROJECTIVE_VARIABLES)


def _try_shear(first, second, k):
    sheared_first, sheared_second = _sheared(first, k), _sheared(second, k)
    f = sheared_first.coefficients_in("x2")
    g = sheared_second.coefficients_in("x2")
    zero = ExactPolynomial.zero(PROJECTIVE_VARIABLES)
    f2, f1, f0 = (f.get(i, zero) for i in (2, 1, 0))
    g2, g1, g0 = (g.get(i, zero) for i in (2, 1, 0))
    if f2.is_zero() or g2.is_zero():
        return None
    resultant = resultant_wrt(sheared_first, sheared_second, "x2")
    # g2·F − f2·G = −(a·x2 + b) なので x2 = −b/a
    a = f2 * g1 - g2 * f1
    b = f2 * g0 - g2 * f0
    data = _ShearData(k, resultant, b, a)
    affine_resultant = data.affine(resultant)
    if affine_resultant.is_zero():
        raise DegenerateInputError("終結式が恒等的に 0 です（共通成分があります）")
    affine_a = data.affine(a)
    if affine_a.is_zero():
        return None
    for factor, _ in squarefree_decompose(affine_resultant):
        if univariate_gcd(factor, affine_a).total_degree() > 0:
            return None
    deficit = TOTAL_MULTIPLICITY - affine_resultant.degree_in("x1")
    if deficit > 0 and a.evaluate({"x0": 0, "x1": 1, "x2": 0}) == 0:
        return None
    return data


def choose_shear(first, second):
    """
    交点ごとに x1 の値が異なり x2 が一意に決まる最初のシアを選びます。

    Returns:
        _ShearData: シアの k と終結式
    """
    for attempt, k in enumerate(shear_sequence()):
        if attempt >= MAX_SHEAR_ATTEMPTS:
            break
        data = _try_shear(first, second, k)
        if data is not None:
            logger.info(f"シア k = {k} を使用します")
            return data
    raise ClassificationError(f"{MAX_SHEAR_ATTEMPTS} 回のシアで一般的な座標が見つかりませんでした")


def _real_roots(factor, real_count):
    coeffs = [float(c) for c in reversed(factor.univariate_coefficients("x1"))]
    roots = np.roots(coeffs)
    ordered = sorted(roots, key=lambda r: abs(r.imag))
    return sorted(float(r.real) for r in ordered[:real_count])


def _point(data, s):
    a = float(data.denominator.evaluate({"x0": 1, "x1": s, "x2": 0}))
    b = float(data.numerator.evaluate({"x0": 1, "x1": s, "x2": 0}))
    x2 = -b / a
    return s + data.k * x2, x2


def _origin_root(rational_map, k):
    # 原点の像 (p0(0) : p1(0) : p2(0)) をシア後の座標で x0 = 1 に正規化した x1
    p0, p1, p2 = (Fraction(p.constant_term()) for p in rational_map.components)
    return (p1 - k * p2) / p0


def classify_two_lines(rational_map, references=None):
    """
    二本の座標軸の像の交点から 7 つのケースのいずれかに分類します。

    Args:
        rational_map (RationalMap): 実係数で次数 2 のアフィン写像
        references (dict): ケース番号から [(表のラベル, Factorization), ...] への辞書。
            省略時はフィクスチャの appendix スイートから読み込みます

    Returns:
        TwoLinesClassification: 分類結果
    """
    _check_map(rational_map)
    first, second = image_conics(rational_map)
    data = choose_shear(first, second)
    affine_resultant = data.affine(data.resultant)
    origin_value = _origin_root(rational_map, data.k)

    real_points = []
    complex_pairs = []
    origin_resultant_multiplicity = 0
    for factor, multiplicity in squarefree_decompose(affine_resultant):
        real_count = real_root_count(factor)
        if factor.evaluate({"x1": origin_value}) == 0:
            origin_resultant_multiplicity = multiplicity
        for s in _real_roots(factor, real_count):
            x, y = _point(data, s)
            real_points.append({"x": x, "y": y, "multiplicity": multiplicity, "at_infinity": False})
        complex_pairs.extend([multiplicity] * ((factor.total_degree() - real_count) // 2))

    deficit = TOTAL_MULTIPLICITY - affine_resultant.degree_in("x1")
    if deficit > 0:
        a = data.denominator.evaluate({"x0": 0, "x1": 1, "x2": 0})
        b = data.numerator.evaluate({"x0": 0, "x1": 1, "x2": 0})
        t = -Fraction(b) / Fraction(a)
        real_points.append({
            "x": None,
            "y": None,
            "multiplicity": deficit,
            "at_infinity": True,
            "direction": [format_fraction(1 + data.k * t), format_fraction(t)],
        })

    total = sum(p["multiplicity"] for p in real_points) + 2 * sum(complex_pairs)
    if total != TOTAL_MULTIPLICITY:
        raise InternalConsistencyError(f"交点の重複度の総和が {total} です（4 であるべき）")

    key = tuple(sorted((p["multiplicity"] for p in real_points), reverse=True))
    case = CASE_TABLE.get(key)
    if case is None:
        raise ClassificationError(f"実交点の重複度の組 {list(key)} はどのケースにも該当しません")

    origin_multiplicity = intersection_multiplicity_origin(rational_map)
    if origin_multiplicity != origin_resultant_multiplicity:
        logger.warning(
            f"原点の像の重複度が一致しません: 接触列 {origin_multiplicity}、"
            f"終結式 {origin_resultant_multiplicity}"
        )

    if references is None:
        found = FixtureManager().reference_factorizations(case)
    else:
        found = list(references.get(case, []))
    reference = found[0][1] if found else None

    logger.info(f"二直線の分類: ケース {case}（実交点の重複度 {list(key)}）")
    return TwoLinesClassification(
        case=case,
        real_points=sorted(real_points, key=lambda p: (p["at_infinity"], p["x"] or 0.0, p["y"] or 0.0)),
        complex_pairs=complex_pairs,
        shear=data.k,
        conics=(first, second),
        origin_multiplicity=origin_multiplicity,
        origin_resultant_multiplicity=origin_resultant_multiplicity,
        reference_factorization=reference,
        reference_tables=[table for table, _ in found],
    )
