# -*- coding: utf-8 -*-

"""
原点の像での交点の重複度（接触列と条件式）のテスト
"""

import pytest

from contact.contact import (
    contact_numerators,
    contact_reports,
    contact_sequence,
    conditions_match,
    evaluate_conditions,
    intersection_multiplicity_origin,
    multiplicity_from_conditions,
    printed_conditions,
    RationalFunction,
    SYMBOLS,
)
from models.polynomial import ExactPolynomial
from models.rational_map import RationalMap
from utils.errors import DegenerateInputError, DimensionError, IrregularParametrizationError

EXPECTED_MULTIPLICITIES = {
    "appendix-ex1": 1,
    "appendix-ex2": 2,
    "appendix-ex3": 2,
    "appendix-ex4": 3,
    "appendix-ex5": 4,
    "appendix-ex6": 1,
    "appendix-ex7": 2,
    "appendix-ex8": 2,
}


@pytest.mark.parametrize("record_id, expected", sorted(EXPECTED_MULTIPLICITIES.items()))
def test_origin_multiplicity(appendix, record_id, expected):
    rational_map = appendix[record_id].map
    assert intersection_multiplicity_origin(rational_map) == expected
    assert multiplicity_from_conditions(rational_map) == expected


def test_contact_reports_share_multiplicity(appendix):
    x_report, y_report = contact_reports(appendix["appendix-ex4"].map)
    assert x_report.multiplicity == y_report.multiplicity == 3
    assert x_report.sequence[:2] == y_report.sequence[:2]
    assert x_report.sequence[2] != y_report.sequence[2]
    assert x_report.to_dict()["branch"] == "x-axis"


def test_full_agreement_gives_four(appendix):
    rational_map = appendix["appendix-ex5"].map
    assert contact_sequence(rational_map, "x-axis") == contact_sequence(rational_map, "y-axis")
    assert all(value == 0 for value in evaluate_conditions(rational_map))


def test_numerators_match_sequence(appendix):
    rational_map = appendix["appendix-ex1"].map
    restricted = [p.substitute({"y": 0}) for p in rational_map.components]
    w, numerators = contact_numerators(*restricted, "x")
    values = contact_sequence(rational_map, "x-axis")
    for (numerator, exponent), value in zip(numerators, values):
        assert numerator.constant_value() / w.constant_value() ** exponent == value


def test_symbolic_conditions_match_printed():
    results = conditions_match()
    assert [r["index"] for r in results] == [1, 2, 3]
    assert all(r["match"] for r in results)


def test_condition_matches_up_to_monomial_modulo_earlier():
    printed = printed_conditions()
    b10 = ExactPolynomial.variable("b10", SYMBOLS)
    a20 = ExactPolynomial.variable("a20", SYMBOLS)
    # 二つ目は b10^2 倍に一つ目の倍数を足したもの
    computed = [printed[0], b10 ** 2 * printed[1] + a20 * printed[0], printed[2]]
    results = conditions_match(computed)
    assert [r["method"] for r in results] == ["direct", "reduced", "direct"]
    assert all(r["match"] for r in results)
    assert results[1]["ratio"] == "b10**2"


def test_condition_with_extra_term_does_not_match():
    printed = printed_conditions()
    a20 = ExactPolynomial.variable("a20", SYMBOLS)
    results = conditions_match([printed[0], printed[1] + a20, printed[2]])
    assert results[1]["method"] == "reduced"
    assert not results[1]["match"]
    assert results[1]["ratio"] is None


def test_rational_function_is_reduced_with_monic_denominator():
    t = ExactPolynomial.variable("t")
    function = RationalFunction(t * t - 1, t * t * 2 - t * 2)
    assert function.numerator == ExactPolynomial.parse("t/2+1/2")
    assert function.denominator == t
    assert function.value_at(1) == 1


def test_depth_limits(appendix):
    rational_map = appendix["appendix-ex1"].map
    assert len(contact_sequence(rational_map, "x-axis", depth=1)) == 1
    with pytest.raises(ValueError):
        contact_sequence(rational_map, "x-axis", depth=4)


def test_irregular_parametrization():
    rational_map = RationalMap("1+x^2+y^2", "x^2+y", "x+y^2")
    with pytest.raises(IrregularParametrizationError):
        intersection_multiplicity_origin(rational_map)


def test_origin_must_be_defined():
    with pytest.raises(DegenerateInputError):
        intersection_multiplicity_origin(RationalMap("x^2+y", "x", "y^2"))


def test_degree_must_be_two():
    with pytest.raises(DimensionError):
        intersection_multiplicity_origin(RationalMap("1+x^3", "x", "y"))
