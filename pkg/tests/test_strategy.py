from fractions import Fraction

import numpy as np
import pytest

from ghzcc.game.boolean import TwoBitBoolean
from ghzcc.game.errors import LimitError, ValidationError
from ghzcc.game.search import exhaustive_search_cc2
from ghzcc.game.strategy import (
    ClassicalStrategyCC2,
    GeneralClassicalStrategy,
    correctness,
    mixed_protocol_success,
    shared_randomness_success,
    strategy_success,
    strategy_success_cc2,
)
from ghzcc.game.task import enumerate_instances

S = ClassicalStrategyCC2.from_indices


@pytest.mark.parametrize(
    "indices,expected",
    [
        ((4, 4, 0, 13), Fraction(3, 4)),
        ((0, 0, 0, 0), Fraction(1, 2)),
        ((4, 12, 12, 0), Fraction(3, 4)),
    ],
)
def test_cc2_success(indices, expected):
    assert strategy_success_cc2(S(*indices)) == expected


def test_strategy_repr_and_indices():
    strategy = S(4, 4, 0, 13)
    assert repr(strategy) == "S(4,4,0,13)"
    assert strategy.indices == (4, 4, 0, 13)
    assert strategy.to_general().decoding_functions() == (strategy.d0, strategy.d1)


def test_general_strategy_validation():
    e = TwoBitBoolean.from_index(4)
    with pytest.raises(ValidationError):
        GeneralClassicalStrategy(n=2, encodings=(e,), decodings=((0,) * 4, (0,) * 4))
    with pytest.raises(ValidationError):
        GeneralClassicalStrategy(n=2, encodings=(e, e), decodings=((0,) * 3, (0,) * 4))
    with pytest.raises(ValidationError):
        GeneralClassicalStrategy(n=2, encodings=(e, e), decodings=((0, 1, 2, 0), (0,) * 4))


def test_success_is_mean_of_correctness():
    strategy = S(14, 2, 12, 13).to_general()
    ensemble = enumerate_instances(2)
    hits = correctness(strategy, ensemble)
    assert strategy_success(strategy, ensemble) == Fraction(int(hits.sum()), 32)


def test_ensemble_mismatch():
    with pytest.raises(ValidationError):
        correctness(S(0, 0, 0, 0).to_general(), enumerate_instances(3))


def test_shared_randomness_is_convex():
    best, worst = S(4, 4, 0, 13), S(0, 0, 0, 0)
    weights = [Fraction(1, 4), Fraction(3, 4)]
    mixed = shared_randomness_success([best.to_general(), worst.to_general()], weights)
    assert mixed == Fraction(1, 4) * Fraction(3, 4) + Fraction(3, 4) * Fraction(1, 2)


def test_shared_randomness_weights():
    strategies = [S(0, 0, 0, 0).to_general()]
    with pytest.raises(ValidationError):
        shared_randomness_success(strategies, [Fraction(1, 2)])
    with pytest.raises(ValidationError):
        shared_randomness_success(strategies, [])


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_mixed_protocol_is_exact(n):
    assert mixed_protocol_success(n) == 1
    assert mixed_protocol_success(n, short_party=1) == 1


def test_mixed_protocol_limits():
    with pytest.raises(LimitError):
        mixed_protocol_success(9)
    with pytest.raises(ValidationError):
        mixed_protocol_success(3, short_party=4)
    with pytest.raises(ValidationError):
        mixed_protocol_success(3, short_party=0)


@pytest.fixture(scope="module")
def cc2_optimum():
    return exhaustive_search_cc2().optimum


@pytest.mark.parametrize("seed", [0, 1, 2, 3])
def test_random_mixtures_never_beat_deterministic(seed, cc2_optimum):
    rng = np.random.default_rng(seed)
    size = int(rng.integers(2, 7))
    strategies = [S(*(int(i) for i in rng.integers(0, 16, 4))) for _ in range(size)]
    raw = [int(w) for w in rng.integers(1, 20, size)]
    weights = [Fraction(w, sum(raw)) for w in raw]

    mixed = shared_randomness_success([s.to_general() for s in strategies], weights)
    average = sum(w * strategy_success_cc2(s) for w, s in zip(weights, strategies))
    assert mixed == average
    assert mixed <= cc2_optimum
