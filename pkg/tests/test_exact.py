# -*- coding: utf-8 -*-

"""
厳密代数（行列式・終結式・核・無平方分解・Sturm 列・割り算）のテスト
"""

import random
from fractions import Fraction

import numpy as np
import pytest

from algebra.exact import (
    bareiss_determinant,
    determinant,
    exact_divide,
    kernel_basis,
    real_root_count,
    resultant_wrt,
    solve_linear,
    squarefree_decompose,
    squarefree_part,
    univariate_gcd,
)
from models.matrix import PolyMatrix, RationalMatrix
from models.polynomial import ExactPolynomial, PROJECTIVE_VARIABLES
from utils.errors import DegenerateInputError, DimensionError, NotSquarefreeError


def test_constant_determinant():
    assert bareiss_determinant([[Fraction(1), Fraction(2)], [Fraction(3), Fraction(4)]]) == -2
    assert determinant(RationalMatrix([[2, 0, 0], [0, 3, 0], [0, 0, 5]])).constant_value() == 30


def test_determinant_matches_numpy_on_random_matrices():
    rng = random.Random(7)
    for size in range(1, 6):
        grid = [[rng.randint(-5, 5) for _ in range(size)] for _ in range(size)]
        exact = determinant(RationalMatrix(grid)).constant_value()
        assert float(exact) == pytest.approx(np.linalg.det(np.array(grid, dtype=float)), abs=1e-6)


def test_pencil_determinant():
    identity = RationalMatrix.identity(2)
    zero = RationalMatrix.zeros(2, 2)
    pencil = PolyMatrix.pencil([identity, zero, zero], PROJECTIVE_VARIABLES)
    assert determinant(pencil) == ExactPolynomial.parse("x0^2", PROJECTIVE_VARIABLES)


def test_determinant_rejects_non_square():
    with pytest.raises(DimensionError):
        determinant(RationalMatrix([[1, 2, 3], [4, 5, 6]]))


def test_resultant_of_circle_and_derivative():
    circle = ExactPolynomial.parse("x^2+y^2-1")
    resultant = resultant_wrt(circle, circle.derivative("y"), "y")
    assert resultant == ExactPolynomial.parse("4*x^2-4")


def test_resultant_vanishes_on_common_root():
    p = ExactPolynomial.parse("y^2-x")
    q = ExactPolynomial.parse("y-x")
    resultant = resultant_wrt(p, q, "y")
    # 共通根は x = 0 と x = 1
    assert resultant.evaluate({"x": 0}) == 0
    assert resultant.evaluate({"x": 1}) == 0


def test_resultant_rejects_zero():
    with pytest.raises(DegenerateInputError):
        resultant_wrt(ExactPolynomial.parse("0"), ExactPolynomial.parse("y"), "y")


def test_kernel_and_solve():
    assert kernel_basis(RationalMatrix([[1, 1]])) == [[Fraction(-1), Fraction(1)]]
    matrix = RationalMatrix([[1, 2], [3, 4]])
    assert solve_linear(matrix, [5, 6]) == [Fraction(-4), Fraction(9, 2)]
    assert solve_linear(RationalMatrix([[1, 1], [1, 1]]), [1, 2]) is None


def test_squarefree_decomposition():
    poly = ExactPolynomial.parse("(t-1)^2*(t+2)")
    factors = squarefree_decompose(poly)
    assert factors == [(ExactPolynomial.parse("t+2"), 1), (ExactPolynomial.parse("t-1"), 2)]
    assert squarefree_part(poly) == ExactPolynomial.parse("(t-1)*(t+2)")


def test_univariate_gcd_is_monic():
    gcd = univariate_gcd(ExactPolynomial.parse("2*t^2-2"), ExactPolynomial.parse("t^2-2*t+1"))
    assert gcd == ExactPolynomial.parse("t-1")


def test_sturm_real_root_count():
    assert real_root_count(ExactPolynomial.parse("t^3-t")) == 3
    assert real_root_count(ExactPolynomial.parse("t^2+1")) == 0
    assert real_root_count(ExactPolynomial.parse("t^3-t"), (Fraction(-1, 2), 2)) == 2


def test_sturm_requires_squarefree():
    with pytest.raises(NotSquarefreeError):
        real_root_count(ExactPolynomial.parse("(t-1)^2"))


def test_exact_divide():
    assert exact_divide(ExactPolynomial.parse("x^2-y^2"), ExactPolynomial.parse("x-y")) == ExactPolynomial.parse("x+y")
    assert exact_divide(ExactPolynomial.parse("x^2+1"), ExactPolynomial.parse("x-1")) is None


def test_resultant_of_mixed_curves():
    p = ExactPolynomial.parse("x^3*y-2*x+y^2")
    q = ExactPolynomial.parse("x^2+y^3-1")
    expected = ExactPolynomial.parse("-x^11 + x^9 - 6*x^6 + 7*x^4 - 8*x^3 - 2*x^2 + 1")
    assert resultant_wrt(p, q, "y") == expected


def test_half_open_interval_excludes_left_endpoint():
    poly = ExactPolynomial.parse("t^3-t")
    assert real_root_count(poly, (Fraction(-1), Fraction(1))) == 2
    assert real_root_count(poly, (Fraction(0), Fraction(0))) == 0
