"""Classical strategies with 1-bit channels and how well they compute f_n.

Bob's output convention: he answers D_{y^0}(c) ⊕ y^1, where c is the tuple of received bits.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from ghzcc import LOGGER
from ghzcc.config import get_config
from ghzcc.game.boolean import TwoBitBoolean
from ghzcc.game.errors import LimitError, ValidationError
from ghzcc.game.task import InstanceEnsemble, enumerate_instances


@dataclass(frozen=True)
class ClassicalStrategyCC2:
    """S(p, q, r, s): Alice encodings E^p_1, E^q_2 and Bob decodings D^r_0, D^s_1"""

    e1: TwoBitBoolean
    e2: TwoBitBoolean
    d0: TwoBitBoolean
    d1: TwoBitBoolean

    @classmethod
    def from_indices(cls, p: int, q: int, r: int, s: int) -> "ClassicalStrategyCC2":
        return cls(*(TwoBitBoolean.from_index(m) for m in (p, q, r, s)))

    @property
    def indices(self) -> Tuple[int, int, int, int]:
        return self.e1.index, self.e2.index, self.d0.index, self.d1.index

    def __repr__(self) -> str:
        return "S({},{},{},{})".format(*self.indices)

    def to_general(self) -> "GeneralClassicalStrategy":
        return GeneralClassicalStrategy(
            n=2,
            encodings=(self.e1, self.e2),
            decodings=(self.d0.truth_table, self.d1.truth_table),
        )


@dataclass(frozen=True)
class GeneralClassicalStrategy:
    """Encodings for n Alices plus one decoding truth table per value of y^0.

    Table position for a message tuple c is Σ c_i 2^(n-i), so Alice-1 is the leading bit.
    """

    n: int
    encodings: Tuple[TwoBitBoolean, ...]
    decodings: Tuple[Tuple[int, ...], Tuple[int, ...]]

    def __post_init__(self):
        object.__setattr__(self, "encodings", tuple(self.encodings))
        tables = tuple(tuple(int(b) for b in t) for t in self.decodings)
        object.__setattr__(self, "decodings", tables)
        if len(self.encodings) != self.n:
            raise ValidationError(f"Expected {self.n} encodings, got {len(self.encodings)}")
        if len(self.decodings) != 2:
            raise ValidationError("Bob needs one decoding table per value of y^0")
        for table in self.decodings:
            if len(table) != 2**self.n or any(b not in (0, 1) for b in table):
                raise ValidationError(f"Decoding tables must hold 2^{self.n} bits")

    @property
    def encoding_indices(self) -> Tuple[int, ...]:
        return tuple(e.index for e in self.encodings)

    def decoding_functions(self) -> Tuple[TwoBitBoolean, TwoBitBoolean]:
        """Decodings as g^m functions; only meaningful for two Alices"""
        if self.n != 2:
            raise ValidationError("Decodings are two-bit functions only when n = 2")
        return tuple(TwoBitBoolean.from_truth_table(t) for t in self.decodings)


@dataclass
class SearchReport:
    optimum: Fraction
    optimal_strategies: List[Union[ClassicalStrategyCC2, GeneralClassicalStrategy]]
    strategies_examined: int
    optimal_count: int = 0
    evaluated: int = 0

    @property
    def witnesses_truncated(self) -> bool:
        return self.optimal_count > len(self.optimal_strategies)


def encoding_table(encodings: Sequence[TwoBitBoolean]) -> np.ndarray:
    """Shape (n, 4): message sent by each Alice for input code 2*x^0 + x^1"""
    return np.array([e.truth_table for e in encodings], dtype=np.int64)


def message_codes(ensemble: InstanceEnsemble, encodings: Sequence[TwoBitBoolean]) -> np.ndarray:
    """Received tuple c for each instance, packed with Alice-1 as the leading bit"""
    tables = encoding_table(encodings)
    codes = ensemble.input_codes()
    bits = tables[np.arange(ensemble.n)[None, :], codes]
    weights = 1 << np.arange(ensemble.n - 1, -1, -1, dtype=np.int64)
    return bits @ weights


def correctness(
    strategy: GeneralClassicalStrategy, ensemble: Optional[InstanceEnsemble] = None
) -> np.ndarray:
    """Boolean vector: does Bob answer f_n on each instance?"""
    if ensemble is None:
        ensemble = enumerate_instances(strategy.n)
    if ensemble.n != strategy.n:
        raise ValidationError(f"Strategy is for n={strategy.n}, ensemble for n={ensemble.n}")
    c = message_codes(ensemble, strategy.encodings)
    tables = np.array(strategy.decodings, dtype=np.uint8)
    answers = tables[ensemble.bob[:, 0], c] ^ ensemble.bob[:, 1]
    return answers == ensemble.targets()


def strategy_success(
    strategy: GeneralClassicalStrategy, ensemble: Optional[InstanceEnsemble] = None
) -> Fraction:
    hits = correctness(strategy, ensemble)
    return Fraction(int(hits.sum()), len(hits))


def strategy_success_cc2(s: ClassicalStrategyCC2) -> Fraction:
    """Exact success of S(p, q, r, s) on the 32-instance CC_2 ensemble"""
    return strategy_success(s.to_general(), enumerate_instances(2))


def shared_randomness_success(
    strategies: Sequence[GeneralClassicalStrategy],
    weights: Sequence[Union[Fraction, float]],
    ensemble: Optional[InstanceEnsemble] = None,
) -> Fraction:
    """Success of a mixture where shared randomness picks strategy k with weights[k]"""
    if not strategies or len(strategies) != len(weights):
        raise ValidationError("Need one weight per strategy")
    weights = [Fraction(w) for w in weights]
    if any(w < 0 for w in weights) or sum(weights) != 1:
        raise ValidationError("Mixture weights must be non-negative and sum to 1")

    if ensemble is None:
        ensemble = enumerate_instances(strategies[0].n)
    total = Fraction(0)
    for strategy, weight in zip(strategies, weights):
        total += weight * int(correctness(strategy, ensemble).sum())
    return total / len(ensemble)


def mixed_protocol_success(
    n: int, short_party: Optional[int] = None, max_n: int = None
) -> Fraction:
    """Run the exact classical protocol with 2n - 1 bits of communication.

    Every Alice but one sends her whole string; the remaining one sends only x^1. Bob recovers
    the missing first bit from the promise and evaluates f_n directly.
    """
    max_n = max_n or get_config().limits.mixed_protocol_max_n
    if not 2 <= n <= max_n:
        raise LimitError(f"mixed_protocol_success supports 2 <= n <= {max_n}, got {n}")
    short_party = n if short_party is None else short_party
    if not 1 <= short_party <= n:
        raise ValidationError(f"short_party must be in 1..{n}, got {short_party}")

    ensemble = enumerate_instances(n, max_n=max_n)
    others = [i for i in range(n) if i != short_party - 1]

    # What reaches Bob
    full_strings = ensemble.alice[:, others, :].astype(np.int64)
    short_bit = ensemble.alice[:, short_party - 1, 1].astype(np.int64)
    y0 = ensemble.bob[:, 0].astype(np.int64)
    y1 = ensemble.bob[:, 1].astype(np.int64)

    known_first = full_strings[:, :, 0].sum(axis=1)
    recovered_first = (known_first + y0) % 2
    sz = known_first + recovered_first + y0
    answer = (full_strings[:, :, 1].sum(axis=1) + short_bit + y1 + sz // 2) % 2

    hits = int((answer == ensemble.targets()).sum())
    LOGGER.debug(f"Mixed protocol n={n}: {hits}/{len(ensemble)} correct")
    return Fraction(hits, len(ensemble))
