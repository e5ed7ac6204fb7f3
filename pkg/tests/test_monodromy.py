# -*- coding: utf-8 -*-

"""
数値的な組紐モノドロミー（臨界値・標準ループ・追跡）のテスト
"""

from functools import reduce

import pytest

from monodromy.curve import AffineCurve, NumericContext, critical_values, suggest_shear
from monodromy.loops import loop_order, standard_loops, winding_number
from monodromy.plot import CSV_HEADER, plot_traces, write_trace_csv
from monodromy.tracker import braid_monodromy
from models.polynomial import ExactPolynomial
from utils.errors import DegenerateInputError

CIRCLE = "x^2+y^2-1"


def _exponent_sums(result):
    return sorted(f.exponent_sum() for f in result.factorization)


def test_circle_critical_values():
    critical_set = critical_values(AffineCurve(CIRCLE))
    assert len(critical_set) == 2
    assert sorted(round(complex(p).real, 9) for p in critical_set.points) == [-1.0, 1.0]
    assert critical_set.base_point > 1.0


def test_loops_wind_once_around_their_point():
    critical_set = critical_values(AffineCurve("x^3-2*y^3+x^2-y^2"))
    order = loop_order(critical_set)
    loops = standard_loops(critical_set)
    assert sorted(order) == list(range(len(critical_set)))
    for j, path in zip(order, loops):
        assert path[0] == path[-1]
        for k, point in enumerate(critical_set.points):
            assert winding_number(path, complex(point)) == (1 if k == j else 0)


def test_loop_order_by_decreasing_real_part():
    critical_set = critical_values(AffineCurve(CIRCLE))
    reals = [complex(critical_set.points[j]).real for j in loop_order(critical_set)]
    assert reals == sorted(reals, reverse=True)


def test_base_fiber_strands_are_ordered_by_real_part():
    curve = AffineCurve(CIRCLE)
    critical_set = critical_values(curve)
    assert critical_set.base.real == critical_set.base_point
    assert critical_set.base.imag < 0
    roots = curve.fiber_roots(critical_set.base, NumericContext())
    assert roots[1].real - roots[0].real > 1e-6
    for path in standard_loops(critical_set):
        assert path[0] == path[-1] == critical_set.base


def test_circle_monodromy():
    result = braid_monodromy(CIRCLE)
    assert [f.to_string() for f in result.factorization] == ["s1", "s1"]
    assert _exponent_sums(result) == [1, 1]
    assert result.invariants["product_is_full_twist"]
    assert result.to_dict()["factors"] == [f.to_string() for f in result.factorization]


def test_non_generic_curve_is_rejected():
    with pytest.raises(DegenerateInputError):
        AffineCurve("x*y^2+y^2+x^3")
    assert suggest_shear(ExactPolynomial.parse("x*y^2+y^2+x^3")) is not None


def test_curve_needs_degree_two_in_y():
    with pytest.raises(DegenerateInputError):
        AffineCurve("x*y+1")


def test_non_reduced_curve_is_rejected():
    with pytest.raises(DegenerateInputError):
        braid_monodromy("(y-x)^2")


def test_trace_outputs(tmp_path):
    result = braid_monodromy(CIRCLE, record_trace=True)
    csv_path = write_trace_csv(result.loops, tmp_path / "circle.csv")
    lines = csv_path.read_text().splitlines()
    assert lines[0] == CSV_HEADER
    assert len(lines) > 1
    png_path = plot_traces(result.loops, tmp_path / "circle.png")
    assert png_path.stat().st_size > 0


@pytest.mark.slow
def test_node_curve_monodromy(fixtures):
    record = fixtures.node_bm()
    result = braid_monodromy(record.raw["curve"])
    assert len(result.factorization) == 5
    assert _exponent_sums(result) == [1, 1, 1, 1, 2]
    assert result.invariants["total_exponent_sum"] == 6
    assert result.invariants["product_is_full_twist"]


@pytest.mark.slow
def test_example_one_image_curve_monodromy(appendix):
    curve = reduce(lambda a, b: a * b, appendix["appendix-ex1"].image_factors)
    result = braid_monodromy(curve)
    assert len(result.factorization) == 8
    assert result.invariants["total_exponent_sum"] == 12
    assert result.invariants["product_is_full_twist"]
