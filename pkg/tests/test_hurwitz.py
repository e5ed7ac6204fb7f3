# -*- coding: utf-8 -*-

"""
Hurwitz 移動と BMT 比較のテスト
"""

import random

import pytest

from braids.builders import full_twist
from braids.garside import equals
from braids.hurwitz import (
    HurwitzMove,
    apply_moves,
    bmt_compare,
    factorization_invariants,
    factorization_product,
    hurwitz_move,
    parse_moves,
)
from models.braid_word import BraidWord, Factorization
from utils.errors import DimensionError, ParseError


def _same_factors(first, second):
    return len(first) == len(second) and all(equals(a, b) for a, b in zip(first, second))


def _random_factorization(rng):
    n = rng.randint(2, 4)
    factors = []
    for _ in range(rng.randint(2, 6)):
        conjugator = BraidWord(n, [(rng.randint(1, n - 1), rng.choice((1, -1))) for _ in range(rng.randint(0, 3))])
        core = BraidWord.generator(rng.randint(1, n - 1), n, rng.choice((1, 2, 3)))
        factors.append(core.conjugate(conjugator))
    return Factorization(n, factors)


def test_parse_moves():
    assert parse_moves("R1^-1 R5 R4") == [HurwitzMove(1, True), HurwitzMove(5), HurwitzMove(4)]
    assert parse_moves("R2^-2") == [HurwitzMove(2, True), HurwitzMove(2, True)]
    assert parse_moves("") == []
    assert [m.to_string() for m in parse_moves("R3 R3^-1")] == ["R3", "R3^-1"]
    with pytest.raises(ParseError):
        parse_moves("X1")
    with pytest.raises(ParseError):
        parse_moves("R2^0")


def test_single_move():
    factorization = Factorization.parse(["s1", "s2"], 3)
    moved = hurwitz_move(factorization, 1)
    assert moved[0] == BraidWord(3, [(1, 1), (2, 1), (1, -1)])
    assert moved[1] == factorization[0]
    assert _same_factors(hurwitz_move(moved, 1, inverse=True), factorization)


def test_move_position_out_of_range():
    factorization = Factorization.parse(["s1", "s2"], 3)
    with pytest.raises(DimensionError):
        hurwitz_move(factorization, 2)
    with pytest.raises(DimensionError):
        hurwitz_move(factorization, 0)


def test_printed_moves_relate_tables(fixtures):
    first, second, moves = fixtures.lemma_he()
    assert _same_factors(apply_moves(first, parse_moves(moves)), second)


def test_moves_preserve_product():
    rng = random.Random(23)
    for _ in range(200):
        factorization = _random_factorization(rng)
        moves = [HurwitzMove(rng.randint(1, len(factorization) - 1), rng.random() < 0.5) for _ in range(rng.randint(1, 6))]
        moved = apply_moves(factorization, moves)
        assert equals(factorization_product(moved), factorization_product(factorization))
        assert sorted(f.exponent_sum() for f in moved) == sorted(f.exponent_sum() for f in factorization)
        assert _same_factors(apply_moves(moved, [m.reversed() for m in reversed(moves)]), factorization)


def test_node_bm_invariants(fixtures):
    invariants = factorization_invariants(fixtures.node_bm().factorization)
    assert invariants["factor_count"] == 5
    assert invariants["total_exponent_sum"] == invariants["expected_exponent_sum"] == 6
    assert invariants["product_is_full_twist"]


def test_table_exponent_sums(fixtures):
    for record in fixtures.appendix_records():
        invariants = factorization_invariants(record.factorization)
        assert invariants["total_exponent_sum"] == 12, record.id


def test_bmt_finds_move_certificate(fixtures):
    first, second, _ = fixtures.lemma_he()
    result = bmt_compare(first, second, depth=5)
    assert result.found
    assert result.conjugator is None
    assert len(result.moves) <= 5
    assert _same_factors(apply_moves(first, result.moves), second)


def test_bmt_identical_factorizations():
    factorization = Factorization.parse(["s1^2", "s1 s1"], 2)
    result = bmt_compare(factorization, Factorization.parse(["s1 s1", "s1^2"], 2))
    assert result.found
    assert result.moves == ()


def test_bmt_reports_unknown_on_invariant_mismatch():
    first = Factorization.parse(["s1^2", "s2"], 3)
    second = Factorization.parse(["s1", "s2"], 3)
    result = bmt_compare(first, second)
    assert result.status == "unknown"
    assert not result.found
    assert bmt_compare(first, Factorization.parse(["s1^2"], 3)).status == "unknown"


def test_bmt_uses_conjugator():
    first = Factorization.parse(["s1^2", "s2"], 3)
    conjugator = BraidWord.generator(2, 3)
    second = first.conjugated(conjugator)
    result = bmt_compare(first, second, depth=2, conjugator_letters=1)
    assert result.found
    assert result.to_dict()["status"] == "equivalent"


def test_bmt_rejects_strand_mismatch():
    with pytest.raises(DimensionError):
        bmt_compare(Factorization.parse(["s1"], 2), Factorization.parse(["s1"], 3))


def test_full_twist_factorization():
    factorization = Factorization.parse(["s1^2", "s2", "s2 s1 s2^-1"], 3)
    # s1^2 s2 s2 s1 s2^-1 は Δ² と積が一致しない
    assert not factorization_invariants(factorization)["product_is_full_twist"]
    assert factorization_product(Factorization(3, [full_twist(3)])) == full_twist(3)
