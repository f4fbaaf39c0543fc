import itertools

import pytest

from ghzcc.game.boolean import (
    TABLE1_ORDER,
    TwoBitBoolean,
    all_functions,
    eval_g,
    even_class,
    odd_class,
    symmetry_image,
)
from ghzcc.game.errors import ValidationError

g = TwoBitBoolean.from_index


@pytest.mark.parametrize("u,v", itertools.product((0, 1), repeat=2))
def test_constant_zero(u, v):
    assert eval_g(g(0), u, v) == 0


def test_named_functions():
    assert g(12)(1, 1) == 0
    assert g(14)(0, 1) == 1
    assert g(12).name == "u⊕v"
    assert g(13).name == "¬(u⊕v)"


@pytest.mark.parametrize("m", range(16))
def test_truth_table_round_trip(m):
    f = g(m)
    assert TwoBitBoolean.from_truth_table(f.truth_table) == f
    assert f.index == m


def test_bad_inputs():
    with pytest.raises(ValidationError):
        g(16)
    with pytest.raises(ValidationError):
        eval_g(g(3), 2, 0)
    with pytest.raises(ValidationError):
        TwoBitBoolean(0, 0, 2, 0)


def test_classes_partition_by_negation():
    assert [f.index for f in even_class()] == list(range(0, 16, 2))
    assert [f.negation() for f in even_class()] == odd_class()
    assert sorted(TABLE1_ORDER) == [f.index for f in even_class()]


def test_symmetry_examples():
    assert symmetry_image(g(12), 1, 0) == g(13)
    assert symmetry_image(g(12), 1, 0).coefficients == (1, 1, 0, 1)
    assert symmetry_image(g(4), 0, 1) == g(5)
    assert symmetry_image(g(9), 0, 0) == g(9)


@pytest.mark.parametrize("flips", [(0, 1), (1, 0), (1, 1)])
def test_symmetry_image_matches_truth_table(flips):
    a, b = flips
    for f in all_functions():
        image = symmetry_image(f, a, b)
        for u, v in itertools.product((0, 1), repeat=2):
            assert image(u ^ a, v ^ b) == f(u, v)


@pytest.mark.parametrize("k", range(8))
def test_odd_index_negates_even_neighbour(k):
    even, odd = g(2 * k), g(2 * k + 1)
    assert odd.truth_table == tuple(1 - bit for bit in even.truth_table)
    for u, v in itertools.product((0, 1), repeat=2):
        assert eval_g(odd, u, v) == 1 ^ eval_g(even, u, v)
