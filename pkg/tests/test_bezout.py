# -*- coding: utf-8 -*-

"""
Bezout 消去（一変数・一般化 Bezout 行列、直線と曲線の像、行列式表現）のテスト
"""

import random

import pytest

from algebra.exact import determinant
from elimination.bezout import (
    bezout_expansion,
    bezout_matrix,
    check_basepoints,
    curve_image,
    detrep_verify,
    generalized_bezout,
    generalized_bezout_syzygies,
    image_oracle,
    inversion_image,
    line_image,
    principal_subspace,
)
from models.matrix import RationalMatrix
from models.polynomial import ExactPolynomial, PROJECTIVE_VARIABLES
from models.rational_map import DetRep, RationalMap
from utils.errors import BasepointOnCurveError, DegenerateInputError, DimensionError

APPENDIX_IDS = [f"appendix-ex{k}" for k in range(1, 9)]


def _random_univariate(rng, degree):
    coefficients = [rng.randint(-4, 4) for _ in range(degree + 1)]
    coefficients[-1] = coefficients[-1] or 1
    return ExactPolynomial.from_coefficients(coefficients, "t")


def _random_symmetric_detrep(rng, m, invertible_slots=False):
    while True:
        matrices = []
        for _ in range(3):
            grid = [[0] * m for _ in range(m)]
            for i in range(m):
                for j in range(i, m):
                    grid[i][j] = grid[j][i] = rng.randint(-3, 3)
            matrices.append(RationalMatrix(grid))
        rep = DetRep(*matrices)
        if determinant(rep.pencil()).is_zero():
            continue
        if invertible_slots and any(determinant(matrix).is_zero() for matrix in matrices):
            continue
        return rep


def test_small_bezout_matrix():
    matrix = bezout_matrix(ExactPolynomial.parse("t"), ExactPolynomial.parse("t^2"))
    assert matrix == RationalMatrix([[0, 0], [0, -1]])


def test_bezout_rejects_constants():
    with pytest.raises(DegenerateInputError):
        bezout_matrix(ExactPolynomial.parse("2"), ExactPolynomial.parse("3"))


def test_bezout_rejects_small_size():
    with pytest.raises(DimensionError):
        bezout_matrix(ExactPolynomial.parse("t^3"), ExactPolynomial.parse("t"), size=2)


def test_bezout_properties_on_random_pairs():
    rng = random.Random(11)
    for _ in range(100):
        size = rng.randint(1, 4)
        p = _random_univariate(rng, rng.randint(1, size))
        q = _random_univariate(rng, rng.randint(1, size))
        r = _random_univariate(rng, rng.randint(1, size))
        bpq = bezout_matrix(p, q, size)
        assert bpq.is_symmetric()
        assert bezout_matrix(q, p, size) == -bpq
        assert bezout_matrix(p + r, q, size) == bpq + bezout_matrix(r, q, size)
        assert bezout_matrix(p * 3, q, size) == bpq.scaled(3)


@pytest.mark.parametrize("record_id", APPENDIX_IDS)
def test_axis_images_match_printed_conics(appendix, record_id):
    record = appendix[record_id]
    matched = set()
    for axis in ("x-axis", "y-axis"):
        line = record.map.restrict_to_axis(axis)
        image = line_image(line)
        assert image.total_degree() == 2
        assert image_oracle(line, "line", image)
        affine = image.dehomogenize()
        hits = [k for k, factor in enumerate(record.image_factors) if affine.is_proportional_to(factor)]
        assert len(hits) == 1
        matched.update(hits)
    assert matched == {0, 1}


def test_line_image_of_example_one_x_axis():
    line = RationalMap("1+x^2", "2*x", "2*x^2+3*x")
    image = line_image(line).dehomogenize()
    assert image.is_proportional_to(ExactPolynomial.parse("13*x^2-12*x*y+4*y^2+12*x-8*y"))


def test_generalized_bezout_is_symmetric():
    p = ExactPolynomial.parse("x0^2+x1*x2", PROJECTIVE_VARIABLES)
    q = ExactPolynomial.parse("x1^2-x0*x2", PROJECTIVE_VARIABLES)
    bezout = generalized_bezout(p, q)
    assert bezout.size == 3
    assert bezout.is_symmetric()
    assert not bezout.is_zero()
    assert generalized_bezout(p, p).is_zero()


def test_generalized_bezout_requires_homogeneous():
    with pytest.raises(DimensionError):
        generalized_bezout(
            ExactPolynomial.parse("x0^2+x1", PROJECTIVE_VARIABLES),
            ExactPolynomial.parse("x1^2", PROJECTIVE_VARIABLES),
        )


def test_identity_map_reproduces_curve():
    rng = random.Random(3)
    identity = RationalMap.identity()
    for m in (1, 2, 3):
        rep = _random_symmetric_detrep(rng, m)
        assert curve_image(rep, identity).is_proportional_to(determinant(rep.pencil()))


@pytest.mark.parametrize("rep, line", [
    (DetRep([[1]], [[0]], [[0]]), "x0"),
    (DetRep([[0]], [[1]], [[0]]), "x1"),
    (DetRep([[0]], [[0]], [[1]]), "x2"),
    (DetRep([[-3]], [[0]], [[0]]), "x0"),
])
def test_identity_map_on_coordinate_lines(rep, line):
    expected = ExactPolynomial.parse(line, PROJECTIVE_VARIABLES)
    check_basepoints(rep, RationalMap.identity())
    assert curve_image(rep, RationalMap.identity()).is_proportional_to(expected)


def test_basepoint_on_line_is_rejected():
    # (x1·x2 : x0·x2 : x1²) は x1 = x2 = 0 の点 (1:0:0) で未定義
    rational_map = RationalMap("x1*x2", "x0*x2", "x1^2", arity=3)
    with pytest.raises(BasepointOnCurveError):
        check_basepoints(DetRep([[0]], [[0]], [[1]]), rational_map)


def test_inversion_of_line():
    rep = DetRep([[1]], [[1]], [[1]])
    expected = ExactPolynomial.parse("x0*x1+x0*x2+x1*x2", PROJECTIVE_VARIABLES)
    assert inversion_image(rep).is_proportional_to(expected)
    assert curve_image(rep, RationalMap.inversion()).is_proportional_to(expected)


def test_inversion_passes_divisibility_oracle():
    rng = random.Random(5)
    inversion = RationalMap.inversion()
    for k in range(5):
        rep = _random_symmetric_detrep(rng, 1 + k % 2, invertible_slots=True)
        image = inversion_image(rep)
        assert image.total_degree() == 2 * rep.m
        assert image_oracle(inversion, determinant(rep.pencil()), image)


def test_inversion_rejects_coordinate_point_on_curve():
    rep = DetRep([[0]], [[1]], [[0]])
    with pytest.raises(BasepointOnCurveError):
        inversion_image(rep)


def test_real_conic_detrep_and_oracle():
    x0, x1, x2 = (ExactPolynomial.variable(v, PROJECTIVE_VARIABLES) for v in PROJECTIVE_VARIABLES)
    rep = DetRep([[1, 0], [0, 1]], [[1, 0], [0, -1]], [[0, 1], [1, 0]])
    conic = x0 ** 2 - x1 ** 2 - x2 ** 2
    assert detrep_verify(rep, conic)
    image = inversion_image(rep)
    assert image_oracle(RationalMap.inversion(), conic, image)


def test_principal_subspace_dimensions():
    rep = DetRep([[1]], [[2]], [[3]])
    assert principal_subspace(rep, 1).dimension == 1
    # n = 2 ではスロット (0, 0) の一つの条件だけが課される
    assert principal_subspace(rep, 2).dimension == 2


def test_printed_pencils_verify(fixtures):
    pencils = fixtures.section4_pencils()
    assert [record_id for record_id, _, _ in pencils] == ["section4-quartic", "section4-cubic"]
    for _, rep, target in pencils:
        assert detrep_verify(rep, target)


def test_detrep_verify_rejects_wrong_target(fixtures):
    _, rep, target = fixtures.section4_pencils()[1]
    assert not detrep_verify(rep, target + ExactPolynomial.parse("x"))
    assert not detrep_verify(rep, ExactPolynomial.parse("x^2+y^2"))


def test_image_oracle_rejects_wrong_candidate():
    line = RationalMap("1+x^2", "2*x", "2*x^2+3*x")
    wrong = ExactPolynomial.parse("x0^2-x1*x2", PROJECTIVE_VARIABLES)
    assert not image_oracle(line, "line", wrong)


@pytest.mark.parametrize("n", [1, 2])
def test_syzygies_expand_to_zero(n):
    for syzygy in generalized_bezout_syzygies(n):
        assert bezout_expansion(syzygy).is_zero()


def test_degree3_example_map():
    rational_map = RationalMap.degree3_example(1, 2)
    assert rational_map.degree == 3
    assert rational_map.p0 == ExactPolynomial.parse("x0*x1*x2", PROJECTIVE_VARIABLES)
    assert rational_map.p2 == ExactPolynomial.parse("x2^3+2*x1^2*x2", PROJECTIVE_VARIABLES)
