#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
厳密多項式モデルモジュール

このモジュールは、有理数係数の多変数多項式 ExactPolynomial と、
そのテキスト表現の読み込みを提供します。
多項式の本体は有理数体 QQ 上の sympy.Poly で、生成元は変数名の記号です。
単項式順序は次数付き辞書式順序（grlex）に統一されています。

テキストは sympy の parse_expr で読み込みます。冪は '^' または '**'、
小数は厳密な有理数になります。暗黙の乗算（"2x" や "x y"）と、
定数以外での割り算は使用できません。

バージョン: 1.0.0
"""

import logging
from fractions import Fraction
from itertools import combinations_with_replacement
from numbers import Rational

import sympy as sp
from sympy import QQ
from sympy.parsing.sympy_parser import (
    convert_xor,
    parse_expr,
    rationalize,
    standard_transformations,
)

from utils.errors import DimensionError, ParseError

logger = logging.getLogger(__name__)

# 既知の変数の正準順序
KNOWN_VARIABLES = ("x0", "x1", "x2", "x", "y", "t")
PROJECTIVE_VARIABLES = ("x0", "x1", "x2")
AFFINE_VARIABLES = ("x", "y")

# 変数を持たない定数多項式の生成元
_GROUND = sp.Dummy("ground")

_TRANSFORMATIONS = standard_transformations + (convert_xor, rationalize)
_PARSER_GLOBALS = {
    "__builtins__": {},
    "Integer": sp.Integer,
    "Float": sp.Float,
    "Rational": sp.Rational,
    "Symbol": sp.Symbol,
    "Function": sp.Function,
}


def variable_rank(name):
    """変数名の正準順序キーを返します。"""
    if name in KNOWN_VARIABLES:
        return (0, KNOWN_VARIABLES.index(name), name)
    return (1, 0, name)


def merge_variables(*variable_lists):
    """
    複数の変数リストを正準順序で併合します。

    Returns:
        tuple: 重複のない変数名のタプル
    """
    names = set()
    for variables in variable_lists:
        names.update(variables)
    return tuple(sorted(names, key=variable_rank))


def grlex_key(exponents):
    return (sum(exponents), tuple(exponents))


def monomials_of_degree(nvars, degree):
    """
    nvars 変数の次数 degree の単項式の指数ベクトルを grlex 降順で返します。

    Args:
        nvars (int): 変数の個数
        degree (int): 全次数

    Returns:
        list: 指数タプルのリスト（例: 3 変数・次数 1 なら x0, x1, x2 の順）
    """
    if degree < 0:
        return []
    result = []
    for combo in combinations_with_replacement(range(nvars), degree):
        exps = [0] * nvars
        for index in combo:
            exps[index] += 1
        result.append(tuple(exps))
    result.sort(key=grlex_key, reverse=True)
    return result


def _as_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, float):
        return Fraction(value)
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        # QQ の元と sympy の有理数
        return Fraction(int(value.numerator), int(value.denominator))
    raise TypeError(f"有理数に変換できない係数です: {value!r}")


def format_fraction(value):
    """有理数を 'a' または 'a/b' 形式の文字列にします。"""
    value = _as_fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def symbols_of(variables):
    """変数名の並びに対応する生成元（変数がなければ定数用の生成元）。"""
    return tuple(sp.Symbol(v) for v in variables) or (_GROUND,)


def to_qq(value):
    """有理数を QQ の元にします。"""
    value = _as_fraction(value)
    return QQ(value.numerator, value.denominator)


def to_rational(value):
    """有理数を sympy.Rational にします。"""
    value = _as_fraction(value)
    return sp.Rational(value.numerator, value.denominator)


class ExactPolynomial:
    """
    有理数係数の多変数多項式（QQ 上の sympy.Poly）。

    値は構築後に変更されないものとして扱います。
    terms は指数タプルから Fraction への辞書で、係数が 0 の項は含みません。
    """

    __slots__ = ("variables", "poly", "_terms", "_hash")

    def __init__(self, variables=(), terms=None):
        """
        ExactPolynomialクラスのコンストラクタ。

        Args:
            variables (tuple): 変数名の並び
            terms (dict): 指数タプルから係数への辞書
        """
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise DimensionError(f"変数名が重複しています: {self.variables}")
        clean = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(self.variables):
                raise DimensionError(
                    f"指数ベクトルの長さ {len(exps)} が変数の個数 {len(self.variables)} と一致しません"
                )
            if any(e < 0 for e in exps):
                raise DimensionError(f"負の指数は使用できません: {exps}")
            coeff = _as_fraction(coeff)
            if coeff:
                total = clean.get(exps, 0) + coeff
                if total:
                    clean[exps] = total
                else:
                    clean.pop(exps, None)
        rep = {(exps or (0,)): to_qq(c) for exps, c in clean.items()}
        self.poly = sp.Poly.from_dict(rep, *symbols_of(self.variables), domain=QQ)
        self._terms = clean
        self._hash = None

    # ------------------------------------------------------------------
    # 構築
    # ------------------------------------------------------------------
    @classmethod
    def from_poly(cls, poly, variables):
        """
        生成元が variables の記号である sympy.Poly から作成します。
        """
        result = cls.__new__(cls)
        result.variables = tuple(variables)
        result.poly = poly if poly.domain == QQ else poly.set_domain(QQ)
        result._terms = None
        result._hash = None
        return result

    @classmethod
    def from_expr(cls, expr, variables):
        """
        sympy の式を variables 上の多項式として読み込みます。
        """
        variables = tuple(variables)
        return cls.from_poly(sp.Poly(expr, *symbols_of(variables), domain=QQ), variables)

    @classmethod
    def zero(cls, variables=()):
        return cls(variables, {})

    @classmethod
    def constant(cls, value, variables=()):
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): value})

    @classmethod
    def variable(cls, name, variables=None):
        """
        単一の変数からなる多項式を作成します。

        Args:
            name (str): 変数名
            variables (tuple): 埋め込む変数リスト（省略時は (name,)）
        """
        variables = tuple(variables) if variables else (name,)
        if name not in variables:
            raise DimensionError(f"変数 {name} が変数リスト {variables} にありません")
        exps = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, {exps: 1})

    @classmethod
    def from_coefficients(cls, coefficients, var="t"):
        """
        昇冪順の係数リストから一変数多項式を作成します。
        """
        return cls((var,), {(k,): c for k, c in enumerate(coefficients)})

    @classmethod
    def parse(cls, text, variables=None):
        """
        テキストから多項式を読み込みます。

        Args:
            text (str): 多項式テキスト（例: "x^3*y - x*y^3 + 2*x^3 - y^3"）
            variables (tuple): 結果の変数リスト（省略時は使用された変数）

        Returns:
            ExactPolynomial: 読み込んだ多項式
        """
        return parse_polynomial(text, variables)

    # ------------------------------------------------------------------
    # sympy との変換
    # ------------------------------------------------------------------
    @property
    def terms(self):
        if self._terms is None:
            raw = self.poly.as_dict(native=True)
            if self.variables:
                self._terms = {tuple(exps): _as_fraction(c) for exps, c in raw.items() if c}
            else:
                self._terms = {(): _as_fraction(c) for c in raw.values() if c}
        return self._terms

    def as_expr(self):
        return self.poly.as_expr()

    # ------------------------------------------------------------------
    # 変数の整列
    # ------------------------------------------------------------------
    def used_variables(self):
        used = set()
        for exps in self.terms:
            for name, e in zip(self.variables, exps):
                if e:
                    used.add(name)
        return tuple(v for v in self.variables if v in used)

    def with_variables(self, variables):
        """
        別の変数リストへ埋め込みます。使われている変数が欠けていれば DimensionError。
        """
        variables = tuple(variables)
        if variables == self.variables:
            return self
        positions = []
        for name in variables:
            positions.append(self.variables.index(name) if name in self.variables else None)
        missing = set(self.used_variables()) - set(variables)
        if missing:
            raise DimensionError(f"変数 {sorted(missing)} を {variables} に埋め込めません")
        terms = {}
        for exps, coeff in self.terms.items():
            terms[tuple(exps[p] if p is not None else 0 for p in positions)] = coeff
        return ExactPolynomial(variables, terms)

    def _coerce(self, other):
        if isinstance(other, ExactPolynomial):
            return other
        if isinstance(other, (int, Fraction, Rational)):
            return ExactPolynomial.constant(other, self.variables)
        return None

    def _aligned(self, other):
        if self.variables == other.variables:
            return self, other
        variables = merge_variables(self.variables, other.variables)
        return self.with_variables(variables), other.with_variables(variables)

    # ------------------------------------------------------------------
    # 算術
    # ------------------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._aligned(other)
        return ExactPolynomial.from_poly(a.poly + b.poly, a.variables)

    __radd__ = __add__

    def __neg__(self):
        return ExactPolynomial.from_poly(-self.poly, self.variables)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._aligned(other)
        return ExactPolynomial.from_poly(a.poly - b.poly, a.variables)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Rational)) and not isinstance(other, bool):
            return ExactPolynomial.from_poly(self.poly.mul_ground(to_qq(other)), self.variables)
        if not isinstance(other, ExactPolynomial):
            return NotImplemented
        a, b = self._aligned(other)
        return ExactPolynomial.from_poly(a.poly * b.poly, a.variables)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, ExactPolynomial):
            if not other.is_constant():
                return NotImplemented
            other = other.constant_value()
        other = _as_fraction(other)
        if other == 0:
            raise ZeroDivisionError("多項式を 0 で割ることはできません")
        return self * (1 / other)

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"指数は非負整数でなければなりません: {exponent}")
        return ExactPolynomial.from_poly(self.poly ** exponent, self.variables)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._aligned(other)
        return a.poly == b.poly

    def __hash__(self):
        if self._hash is None:
            items = []
            for exps, coeff in self.terms.items():
                key = tuple((v, e) for v, e in zip(self.variables, exps) if e)
                items.append((key, coeff))
            self._hash = hash(frozenset(items))
        return self._hash

    def __bool__(self):
        return not self.poly.is_zero

    # ------------------------------------------------------------------
    # 問い合わせ
    # ------------------------------------------------------------------
    def is_zero(self):
        return self.poly.is_zero

    def is_constant(self):
        return self.poly.is_ground

    def constant_value(self):
        """定数多項式の値を返します。定数でなければ ValueError。"""
        if not self.is_constant():
            raise ValueError(f"定数ではない多項式です: {self}")
        return next(iter(self.terms.values()), Fraction(0))

    def constant_term(self):
        return self.terms.get((0,) * len(self.variables), Fraction(0))

    def total_degree(self):
        """全次数を返します。零多項式は -1。"""
        if self.is_zero():
            return -1
        return int(self.poly.total_degree())

    def degree_in(self, var):
        if self.is_zero():
            return -1
        if var not in self.variables:
            return 0
        return int(self.poly.degree(sp.Symbol(var)))

    def sorted_terms(self):
        """grlex 降順の (指数, 係数) のリスト。"""
        return sorted(self.terms.items(), key=lambda item: grlex_key(item[0]), reverse=True)

    def leading_monomial(self):
        if self.is_zero():
            return None
        return max(self.terms, key=grlex_key)

    def leading_coefficient(self):
        if self.is_zero():
            return Fraction(0)
        return self.terms[self.leading_monomial()]

    def normalized(self):
        """grlex 先頭係数で割って正規化した多項式（スカラー倍を除いた比較用）。"""
        if self.is_zero():
            return self
        return self / self.leading_coefficient()

    def is_homogeneous(self):
        return self.is_zero() or bool(self.poly.is_homogeneous)

    def is_proportional_to(self, other):
        """0 でないスカラー倍で一致するかどうか。"""
        if self.is_zero() or other.is_zero():
            return False
        return self.normalized() == other.normalized()

    # ------------------------------------------------------------------
    # 変換
    # ------------------------------------------------------------------
    def derivative(self, var):
        if var not in self.variables:
            return ExactPolynomial.zero(self.variables)
        return ExactPolynomial.from_poly(self.poly.diff(sp.Symbol(var)), self.variables)

    def coefficients_in(self, var):
        """
        var の冪ごとの係数多項式を返します。

        Returns:
            dict: 冪から係数多項式（同じ変数リスト、var の指数は 0）への辞書
        """
        if var not in self.variables:
            return {0: self} if not self.is_zero() else {}
        index = self.variables.index(var)
        grouped = {}
        for exps, coeff in self.terms.items():
            power = exps[index]
            rest = list(exps)
            rest[index] = 0
            grouped.setdefault(power, {})[tuple(rest)] = coeff
        return {k: ExactPolynomial(self.variables, t) for k, t in grouped.items()}

    def univariate_coefficients(self, var=None):
        """
        一変数多項式の係数を昇冪順のリストで返します。

        Args:
            var (str): 変数名（省略時は唯一の使用変数）
        """
        used = self.used_variables()
        if var is None:
            if len(used) > 1:
                raise DimensionError(f"一変数多項式ではありません: {self}")
            var = used[0] if used else (self.variables[0] if self.variables else "t")
        elif set(used) - {var}:
            raise DimensionError(f"{var} 以外の変数を含みます: {self}")
        if self.is_zero():
            return []
        degree = self.degree_in(var)
        coeffs = [Fraction(0)] * (degree + 1)
        index = self.variables.index(var) if var in self.variables else None
        for exps, coeff in self.terms.items():
            coeffs[exps[index] if index is not None else 0] = coeff
        return coeffs

    def truncate(self, var, order):
        """var の次数が order を超える項を捨てます。"""
        if var not in self.variables:
            return self
        index = self.variables.index(var)
        return ExactPolynomial(
            self.variables, {e: c for e, c in self.terms.items() if e[index] <= order}
        )

    def monomial_content(self):
        """全項に共通する単項式の指数ベクトル。"""
        if self.is_zero():
            return (0,) * len(self.variables)
        return tuple(min(e[i] for e in self.terms) for i in range(len(self.variables)))

    def strip_monomial_content(self):
        content = self.monomial_content()
        return ExactPolynomial(
            self.variables,
            {tuple(x - y for x, y in zip(e, content)): c for e, c in self.terms.items()},
        )

    def substitute(self, mapping):
        """
        変数に多項式または有理数を代入します。

        Args:
            mapping (dict): 変数名から ExactPolynomial または数値への辞書

        Returns:
            ExactPolynomial: 代入結果（代入されなかった変数は残ります）
        """
        replacements = {}
        variables = [v for v in self.variables if v not in mapping]
        for name, value in mapping.items():
            if name not in self.variables:
                continue
            if isinstance(value, ExactPolynomial):
                variables = merge_variables(variables, value.variables)
                replacements[sp.Symbol(name)] = value.as_expr()
            else:
                replacements[sp.Symbol(name)] = to_rational(value)
        variables = merge_variables(variables)
        if not replacements:
            return self.with_variables(merge_variables(self.variables, variables))
        return ExactPolynomial.from_expr(self.as_expr().xreplace(replacements), variables)

    def evaluate(self, point):
        """
        数値を代入して値を返します。

        Args:
            point (dict): 変数名から数値（Fraction、int、complex など）への辞書
        """
        total = 0
        for exps, coeff in self.terms.items():
            value = coeff
            for name, e in zip(self.variables, exps):
                if e:
                    value = value * point[name] ** e
            total = total + value
        return total

    def homogenize(self, degree=None, source=AFFINE_VARIABLES, target=PROJECTIVE_VARIABLES):
        """
        アフィン多項式を斉次化します（x ↦ x1/x0、y ↦ x2/x0）。

        Args:
            degree (int): 斉次次数（省略時は全次数）
            source (tuple): アフィン変数
            target (tuple): 斉次変数（先頭が追加される変数）
        """
        poly = self.with_variables(merge_variables(self.variables, source)).with_variables(source)
        if degree is None:
            degree = max(poly.total_degree(), 0)
        terms = {}
        for exps, coeff in poly.terms.items():
            pad = degree - sum(exps)
            if pad < 0:
                raise DimensionError(f"斉次次数 {degree} が全次数より小さいです")
            terms[(pad,) + exps] = coeff
        return ExactPolynomial(target, terms)

    def dehomogenize(self, source=PROJECTIVE_VARIABLES, target=AFFINE_VARIABLES):
        """x0 ↦ 1、x1 ↦ x、x2 ↦ y として非斉次化します。"""
        poly = self.with_variables(merge_variables(self.variables, source)).with_variables(source)
        terms = {}
        for exps, coeff in poly.terms.items():
            key = exps[1:]
            terms[key] = terms.get(key, 0) + coeff
        return ExactPolynomial(target, terms)

    def rename(self, mapping):
        """変数名を付け替えます。"""
        names = [mapping.get(v, v) for v in self.variables]
        return ExactPolynomial(names, self.terms).with_variables(merge_variables(names))

    # ------------------------------------------------------------------
    # 表示
    # ------------------------------------------------------------------
    def to_string(self):
        """grlex 降順で 'x^3*y - x*y^3 + 2*x^3 - y^3' 形式の文字列にします。"""
        if self.is_zero():
            return "0"
        pieces = []
        for position, (exps, coeff) in enumerate(self.sorted_terms()):
            factors = []
            for name, e in zip(self.variables, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            magnitude = abs(coeff)
            if not factors:
                body = format_fraction(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = format_fraction(magnitude) + "*" + "*".join(factors)
            if position == 0:
                pieces.append(("-" if coeff < 0 else "") + body)
            else:
                pieces.append((" - " if coeff < 0 else " + ") + body)
        return "".join(pieces)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"ExactPolynomial({self.to_string()!r}, variables={self.variables})"


def parse_polynomial(text, variables=None):
    """
    多項式テキストを sympy の parse_expr で読み込みます。

    Args:
        text (str): 多項式テキスト
        variables (tuple): 結果の変数リスト（省略時は使用された変数）

    Returns:
        ExactPolynomial: 読み込んだ多項式
    """
    if not isinstance(text, str) or not text.strip():
        raise ParseError("空の多項式テキストです")
    allowed = set(KNOWN_VARIABLES) | set(variables or ())
    local = {name: sp.Symbol(name) for name in allowed}
    try:
        expr = parse_expr(text.strip(), local_dict=local, global_dict=dict(_PARSER_GLOBALS),
                          transformations=_TRANSFORMATIONS)
    except Exception as e:
        raise ParseError(f"多項式として解釈できません: {text!r}（{type(e).__name__}）") from e
    if not isinstance(expr, sp.Expr):
        raise ParseError(f"多項式として解釈できません: {text!r}")
    names = {s.name for s in expr.free_symbols}
    unknown = sorted(names - allowed)
    if unknown:
        raise ParseError(f"変数 {unknown} は使用できません: {text!r}")
    used = merge_variables(names)
    try:
        poly = ExactPolynomial.from_expr(expr, used)
    except Exception as e:
        raise ParseError(f"有理数係数の多項式ではありません: {text!r}（{type(e).__name__}）") from e
    if variables is not None:
        return poly.with_variables(tuple(variables))
    return poly
