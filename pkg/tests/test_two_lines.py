# -*- coding: utf-8 -*-

"""
二直線の像の交点による 7 ケース分類のテスト
"""

import pytest

from contact.two_lines import CASE_TABLE, choose_shear, classify_two_lines, image_conics, shear_sequence


@pytest.fixture(scope="module")
def references(fixtures):
    return {case: fixtures.reference_factorizations(case) for case in sorted(set(CASE_TABLE.values()))}


@pytest.mark.parametrize("number", range(1, 9))
def test_appendix_cases(appendix, references, number):
    record = appendix[f"appendix-ex{number}"]
    result = classify_two_lines(record.map, references)
    assert result.case == record.case
    assert result.total_multiplicity == 4
    assert result.reference_factorization is not None


def test_case_seven_prefers_type_a(appendix, references):
    result = classify_two_lines(appendix["appendix-ex7"].map, references)
    assert result.reference_tables == ("1m2-a", "1m2-b")
    assert result.reference_factorization == appendix["appendix-ex7"].factorization


def test_real_points_reported(appendix, references):
    result = classify_two_lines(appendix["appendix-ex1"].map, references)
    assert result.real_multiplicities == [1, 1, 1, 1]
    assert result.complex_pairs == []
    data = result.to_dict()
    assert data["case"] == 1
    assert len(data["conics"]) == 2


def test_complex_pairs_in_case_six(appendix, references):
    result = classify_two_lines(appendix["appendix-ex6"].map, references)
    assert result.real_multiplicities == [1, 1]
    assert result.complex_pairs == [1]


def test_shear_sequence_order():
    sequence = shear_sequence()
    assert [next(sequence) for _ in range(5)] == [0, 1, -1, 2, -2]


def test_chosen_shear_separates_points(appendix):
    first, second = image_conics(appendix["appendix-ex2"].map)
    data = choose_shear(first, second)
    assert data.k in range(-20, 21)
    assert not data.resultant.is_zero()


def test_missing_references_give_none(appendix):
    result = classify_two_lines(appendix["appendix-ex3"].map, references={})
    assert result.case == 3
    assert result.reference_factorization is None
    assert result.reference_tables == ()
