# -*- coding: utf-8 -*-

"""
ExactPolynomial とパーサのテスト
"""

from fractions import Fraction

import pytest

from models.braid_word import Factorization, FreeGroupWord, parse_braid
from models.matrix import RationalMatrix
from models.polynomial import ExactPolynomial, PROJECTIVE_VARIABLES
from models.rational_map import DetRep, RationalMap
from utils.errors import DegenerateInputError, DimensionError, ParseError


def test_parse_and_print():
    text = "x^3*y - x*y^3 + 2*x^3 - y^3"
    poly = ExactPolynomial.parse(text)
    assert poly.variables == ("x", "y")
    assert poly.to_string() == text
    assert ExactPolynomial.parse(poly.to_string()) == poly


def test_decimal_coefficients_are_exact():
    poly = ExactPolynomial.parse("1.5*x+2*y")
    assert poly.terms[(1, 0)] == Fraction(3, 2)


def test_implicit_multiplication_is_rejected():
    with pytest.raises(ParseError):
        ExactPolynomial.parse("2x")


def test_arithmetic():
    x, y = ExactPolynomial.parse("x"), ExactPolynomial.parse("y")
    assert (x + y) ** 2 == ExactPolynomial.parse("x^2+2*x*y+y^2")
    assert (x - y) * (x + y) == ExactPolynomial.parse("x^2-y^2")
    assert ExactPolynomial.parse("(x+1)/2") == ExactPolynomial.parse("x/2+1/2")


def test_homogenize_round_trip():
    poly = ExactPolynomial.parse("x^2+y+1")
    homogeneous = poly.homogenize(2)
    assert homogeneous == ExactPolynomial.parse("x1^2+x0*x2+x0^2", PROJECTIVE_VARIABLES)
    assert homogeneous.is_homogeneous()
    assert homogeneous.dehomogenize() == poly


def test_derivative_and_coefficients():
    poly = ExactPolynomial.parse("x^2*y+3*y^2")
    assert poly.derivative("y") == ExactPolynomial.parse("x^2+6*y")
    assert poly.degree_in("y") == 2
    assert poly.coefficients_in("y")[1] == ExactPolynomial.parse("x^2", ("x", "y"))


def test_proportionality_ignores_scale():
    a = ExactPolynomial.parse("2*x^2-4*y")
    b = ExactPolynomial.parse("-x^2+2*y")
    assert a.is_proportional_to(b)
    assert not a.is_proportional_to(ExactPolynomial.parse("x^2+2*y"))


def test_with_variables_rejects_missing():
    with pytest.raises(DimensionError):
        ExactPolynomial.parse("x*y").with_variables(("x",))


def test_rational_map_and_axis_restriction():
    rational_map = RationalMap("1+x^2+y^2", "2*x+4*y", "2*x^2+3*x+y^2")
    assert rational_map.arity == 2
    assert rational_map.degree == 2
    line = rational_map.restrict_to_axis("x-axis")
    assert line.arity == 1
    assert line.p2 == ExactPolynomial.parse("2*x^2+3*x")
    homogeneous = rational_map.homogenized()
    assert homogeneous.p0 == ExactPolynomial.parse("x0^2+x1^2+x2^2", PROJECTIVE_VARIABLES)


def test_rational_map_rejects_zero():
    with pytest.raises(DegenerateInputError):
        RationalMap("0", "0", "0")


def test_detrep_dict_round_trip():
    rep = DetRep([[1, 0], [0, 1]], [[1, 0], [0, -1]], [[0, 1], [1, 0]])
    again = DetRep.from_dict(rep.to_dict())
    assert again.matrices == rep.matrices
    assert rep.is_symmetric()


def test_detrep_requires_square_matrices():
    with pytest.raises(DimensionError):
        DetRep(RationalMatrix([[1, 2]]), RationalMatrix([[1, 2]]), RationalMatrix([[1, 2]]))


def test_braid_word_parsing():
    word = parse_braid("s1 s2^-1 s1^2", 3)
    assert word.to_string() == "s1 s2^-1 s1^2"
    assert word.exponent_sum() == 2
    assert len(word.inverse()) == len(word)
    with pytest.raises(DimensionError):
        parse_braid("s3", 3)


def test_factorization_dict_round_trip():
    factorization = Factorization.parse(["s1^2", "s2 s1 s2^-1"], 3)
    assert Factorization.from_dict(factorization.to_dict()) == factorization


def test_free_group_word_reduces():
    g1 = FreeGroupWord.generator(1, 3)
    g2 = FreeGroupWord.generator(2, 3)
    assert (g1 * g2 * g2.inverse() * g1.inverse()).is_identity()
    assert FreeGroupWord.parse("g1 g2^-1", 3) == g1 * g2.inverse()


def test_polynomial_is_backed_by_rational_poly():
    poly = ExactPolynomial.parse("x^2/3+y")
    assert poly.poly.domain.is_QQ
    assert poly.terms == {(2, 0): Fraction(1, 3), (0, 1): Fraction(1)}
    assert ExactPolynomial.parse("7").is_constant()
    assert ExactPolynomial.parse("0").total_degree() == -1


@pytest.mark.parametrize("text", ["x/y", "x^-1", "sin(x)", "z+1", "x^(1/2)", "", "x +* y"])
def test_non_polynomial_text_is_rejected(text):
    with pytest.raises(ParseError):
        ExactPolynomial.parse(text)
