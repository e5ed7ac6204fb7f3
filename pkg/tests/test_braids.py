# -*- coding: utf-8 -*-

"""
組紐語の標準形・Artin 作用・全ひねりのテスト
"""

import random

import pytest

from braids.artin import artin_action, artin_images
from braids.builders import full_twist, half_twist, local_monodromy_word
from braids.garside import canonical_word, equals, from_normal_form, normal_form
from models.braid_word import BraidWord, FreeGroupWord, parse_braid
from utils.errors import DimensionError


def _random_word(rng, n, max_length=12):
    letters = [(rng.randint(1, n - 1), rng.choice((1, -1))) for _ in range(rng.randint(0, max_length))]
    return BraidWord(n, letters)


def _relation_rewrite(rng, word):
    """関係式の挿入で、等しいが綴りの異なる語を作る。"""
    n = word.strands
    letters = list(word.letters)
    for _ in range(rng.randint(1, 3)):
        i = rng.randint(1, n - 1)
        at = rng.randint(0, len(letters))
        if n > 2 and rng.random() < 0.5:
            j = i + 1 if i < n - 1 else i - 1
            # σ_i σ_j σ_i (σ_j σ_i σ_j)⁻¹ は単位元
            inserted = [(i, 1), (j, 1), (i, 1), (j, -1), (i, -1), (j, -1)]
        else:
            inserted = [(i, 1), (i, -1)]
        letters[at:at] = inserted
    return BraidWord(n, letters)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_braid_relations(n):
    for i in range(1, n - 1):
        a = BraidWord.generator(i, n)
        b = BraidWord.generator(i + 1, n)
        assert equals(a * b * a, b * a * b)
    for i in range(1, n - 1):
        for j in range(i + 2, n):
            a = BraidWord.generator(i, n)
            b = BraidWord.generator(j, n)
            assert equals(a * b, b * a)


def test_distinct_words_are_different():
    assert not equals(parse_braid("s1", 3), parse_braid("s2", 3))
    assert not equals(parse_braid("s1 s2", 3), parse_braid("s2 s1", 3))
    assert equals(parse_braid("s1 s1^-1", 3), BraidWord.identity(3))


def test_equals_requires_same_strands():
    with pytest.raises(DimensionError):
        equals(BraidWord.identity(3), BraidWord.identity(4))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_twists_normal_form(n):
    assert normal_form(full_twist(n)).inf == 2
    assert normal_form(full_twist(n)).factors == ()
    assert normal_form(half_twist(n)).inf == 1
    assert equals(half_twist(n) ** 2, full_twist(n))
    assert full_twist(n).exponent_sum() == n * (n - 1)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_full_twist_is_central(n):
    twist = full_twist(n)
    assert twist.permutation() == tuple(range(n))
    for i in range(1, n):
        generator = BraidWord.generator(i, n)
        assert equals(twist * generator, generator * twist)


def test_normal_form_round_trip():
    rng = random.Random(17)
    for _ in range(100):
        word = _random_word(rng, rng.randint(2, 5))
        form = normal_form(word)
        assert equals(from_normal_form(form), word)
        assert normal_form(canonical_word(word)) == form


def test_artin_action_on_generators():
    g1, g2 = FreeGroupWord.generator(1, 2), FreeGroupWord.generator(2, 2)
    sigma = BraidWord.generator(1, 2)
    images = artin_images(sigma)
    # σ_i は g_i g_{i+1} の積を保つ
    assert images[0] * images[1] == g1 * g2
    assert artin_action(sigma.inverse(), artin_action(sigma, g1)) == g1
    assert artin_action(sigma, g2) != g2


def test_artin_action_rejects_rank_mismatch():
    with pytest.raises(DimensionError):
        artin_action(BraidWord.identity(3), FreeGroupWord.generator(1, 4))


def test_normal_form_agrees_with_artin_oracle():
    rng = random.Random(20240601)
    for k in range(500):
        n = rng.randint(2, 5)
        first = _random_word(rng, n)
        second = _relation_rewrite(rng, first) if k % 2 == 0 else _random_word(rng, n)
        assert equals(first, second) == (artin_images(first) == artin_images(second))


def test_local_monodromy_word():
    assert local_monodromy_word(3, 2, 4) == parse_braid("s2^6", 4)
    with pytest.raises(DimensionError):
        local_monodromy_word(5, 1, 3)
    with pytest.raises(DimensionError):
        local_monodromy_word(1, 3, 3)
