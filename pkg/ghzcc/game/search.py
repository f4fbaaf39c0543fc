"""Exhaustive and majority-optimal searches over 1-bit classical strategies."""

import itertools
import math
import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from ghzcc import LOGGER
from ghzcc.config import get_config
from ghzcc.game.boolean import TwoBitBoolean, all_functions, even_class
from ghzcc.game.errors import LimitError, ValidationError
from ghzcc.game.strategy import (
    ClassicalStrategyCC2,
    GeneralClassicalStrategy,
    SearchReport,
    message_codes,
)
from ghzcc.game.task import InstanceEnsemble, enumerate_instances, restrict_to_subtask

# Truth tables of all 16 g^m, row m, column 2u + v
ALL_TABLES = np.array([f.truth_table for f in all_functions()], dtype=np.int64)


def _check_n(n: int, max_n: Optional[int]) -> int:
    max_n = max_n or get_config().limits.search_max_n
    if not 2 <= n <= max_n:
        raise LimitError(f"Classical search supports 2 <= n <= {max_n}, got {n}")
    return max_n


def decoding_labels(ensemble: InstanceEnsemble) -> np.ndarray:
    """The bit D_{y^0}(c) has to produce on each instance: f_n ⊕ y^1"""
    return (ensemble.targets() ^ ensemble.bob[:, 1]).astype(np.int64)


def majority_counts(keys: np.ndarray, labels: np.ndarray, size: int) -> Tuple[int, np.ndarray]:
    """Best achievable hits when each bucket answers its majority label.

    Returns the hit count and the chosen bit per bucket; ties and empty buckets answer 0.
    """
    totals = np.bincount(keys, minlength=size)
    ones = np.bincount(keys[labels == 1], minlength=size)
    zeros = totals - ones
    decisions = (ones > zeros).astype(np.uint8)
    return int(np.maximum(ones, zeros).sum()), decisions


def optimal_decoding_for_encodings(
    n: int,
    encodings: Sequence[TwoBitBoolean],
    ensemble: Optional[InstanceEnsemble] = None,
    max_n: int = None,
) -> Tuple[GeneralClassicalStrategy, Fraction]:
    """Complete fixed encodings with Bob's majority decoding and return its exact success"""
    _check_n(n, max_n)
    if len(encodings) != n:
        raise ValidationError(f"Expected {n} encodings, got {len(encodings)}")
    if ensemble is None:
        ensemble = enumerate_instances(n)
    elif ensemble.n != n:
        raise ValidationError(f"Strategy is for n={n}, ensemble for n={ensemble.n}")

    size = 2**n
    keys = ensemble.bob[:, 0].astype(np.int64) * size + message_codes(ensemble, encodings)
    hits, decisions = majority_counts(keys, decoding_labels(ensemble), 2 * size)

    strategy = GeneralClassicalStrategy(
        n=n,
        encodings=tuple(encodings),
        decodings=(tuple(decisions[:size]), tuple(decisions[size:])),
    )
    return strategy, Fraction(hits, len(ensemble))


def exhaustive_search_cc2(restrict_even: bool = False, witness_cap: int = None) -> SearchReport:
    """Score every S(p, q, r, s) on the CC_2 ensemble.

    With `restrict_even` the encodings range over G_E only (8·8·16·16 strategies);
    otherwise all 16^4 strategies are scored.
    """
    witness_cap = witness_cap or get_config().limits.witness_cap
    started = time.perf_counter()

    ensemble = enumerate_instances(2)
    labels = decoding_labels(ensemble)
    codes = ensemble.input_codes()
    y0 = ensemble.bob[:, 0].astype(np.int64)

    candidates = list(range(0, 16, 2)) if restrict_even else list(range(16))
    width = len(candidates)
    scores = np.zeros((width, width, 16, 16), dtype=np.int64)

    for a, p in enumerate(candidates):
        for b, q in enumerate(candidates):
            c = 2 * ALL_TABLES[p][codes[:, 0]] + ALL_TABLES[q][codes[:, 1]]
            keys = y0 * 4 + c
            totals = np.bincount(keys, minlength=8).reshape(2, 4)
            ones = np.bincount(keys[labels == 1], minlength=8).reshape(2, 4)
            zeros = totals - ones
            # hits per (decoding, y^0)
            per_decoding = ALL_TABLES @ ones.T + (1 - ALL_TABLES) @ zeros.T
            scores[a, b] = per_decoding[:, 0][:, None] + per_decoding[:, 1][None, :]

    best = int(scores.max())
    hits = np.argwhere(scores == best)
    witnesses = [
        ClassicalStrategyCC2.from_indices(candidates[a], candidates[b], int(r), int(s))
        for a, b, r, s in hits[:witness_cap]
    ]
    LOGGER.info(
        f"CC_2 search ({'even' if restrict_even else 'full'}): {scores.size} strategies, "
        f"optimum {best}/{len(ensemble)}, {len(hits)} optimal, "
        f"{time.perf_counter() - started:.2f}s"
    )
    return SearchReport(
        optimum=Fraction(best, len(ensemble)),
        optimal_strategies=witnesses,
        strategies_examined=int(scores.size),
        optimal_count=int(len(hits)),
        evaluated=int(scores.size),
    )


def _distinct_permutations(combo: Tuple[int, ...]) -> int:
    count = math.factorial(len(combo))
    for repeat in Counter(combo).values():
        count //= math.factorial(repeat)
    return count


def _run_chunks(
    worker: Callable[[List[Tuple[int, ...]]], Tuple[int, List[Tuple[int, ...]]]],
    tuples: List[Tuple[int, ...]],
    threads: int,
) -> Tuple[int, List[Tuple[int, ...]]]:
    """Evaluate tuple chunks, then merge by max with witness union"""
    chunks = [list(chunk) for chunk in np.array_split(np.arange(len(tuples)), max(threads, 1))]
    chunks = [[tuples[i] for i in chunk] for chunk in chunks if chunk]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(worker, chunks))
    else:
        results = [worker(chunk) for chunk in chunks]

    best = max(score for score, _ in results)
    winners = [t for score, found in results if score == best for t in found]
    return best, winners


def classical_optimum(
    n: int,
    use_symmetry: bool = True,
    threads: int = 1,
    max_n: int = None,
    witness_cap: int = None,
) -> SearchReport:
    """Best 1-bit-per-Alice strategy over even encodings with majority decodings.

    f_n is symmetric under permuting the Alices, so by default one representative per
    multiset of encodings is scored and the optimal ones are expanded back into ordered
    tuples. `use_symmetry=False` scores all 8^n ordered tuples.
    """
    _check_n(n, max_n)
    witness_cap = witness_cap or get_config().limits.witness_cap
    started = time.perf_counter()

    ensemble = enumerate_instances(n)
    labels = decoding_labels(ensemble)
    codes = ensemble.input_codes()
    size = 2**n
    base = ensemble.bob[:, 0].astype(np.int64) * size

    even = even_class()
    even_tables = np.array([f.truth_table for f in even], dtype=np.int64)
    # shifted[i, e] is Alice-i's bit under encoding e, already in its place value
    shifted = np.stack(
        [even_tables[:, codes[:, i]] << (n - 1 - i) for i in range(n)]
    )

    def worker(chunk: List[Tuple[int, ...]]) -> Tuple[int, List[Tuple[int, ...]]]:
        best, found = -1, []
        for combo in chunk:
            keys = base + sum(shifted[i, e] for i, e in enumerate(combo))
            hits, _ = majority_counts(keys, labels, 2 * size)
            if hits > best:
                best, found = hits, [combo]
            elif hits == best:
                found.append(combo)
        return best, found

    if use_symmetry:
        tuples = list(itertools.combinations_with_replacement(range(len(even)), n))
    else:
        tuples = list(itertools.product(range(len(even)), repeat=n))

    best, winners = _run_chunks(worker, tuples, threads)

    if use_symmetry:
        ordered = sorted({p for combo in winners for p in itertools.permutations(combo)})
    else:
        ordered = sorted(winners)

    witnesses = [
        optimal_decoding_for_encodings(
            n, [even[e] for e in combo], ensemble=ensemble, max_n=max_n or n
        )[0]
        for combo in ordered[:witness_cap]
    ]
    examined = sum(_distinct_permutations(t) for t in tuples) if use_symmetry else len(tuples)

    LOGGER.info(
        f"Classical optimum n={n}: {best}/{len(ensemble)} over {examined} encoding tuples "
        f"({len(tuples)} scored), {len(ordered)} optimal, {time.perf_counter() - started:.2f}s"
    )
    return SearchReport(
        optimum=Fraction(best, len(ensemble)),
        optimal_strategies=witnesses,
        strategies_examined=examined,
        optimal_count=len(ordered),
        evaluated=len(tuples),
    )


def subtask_optimum(n: int, max_n: int = None) -> SearchReport:
    """Optimum on the sub-task where Alices 3..n hold 00 and sit in Bob's laboratory.

    Alices 1 and 2 keep 1-bit channels with any of the 16 encodings; Bob reads the other
    strings directly and decodes by majority. Witnesses are (p, q) encoding index pairs.
    """
    _check_n(n, max_n)
    pinned = {j: (0, 0) for j in range(3, n + 1)}
    ensemble = restrict_to_subtask(enumerate_instances(n), pinned)
    labels = decoding_labels(ensemble)
    codes = ensemble.input_codes()

    local = 4 ** (n - 2)
    local_code = np.zeros(len(ensemble), dtype=np.int64)
    for i in range(2, n):
        local_code = local_code * 4 + codes[:, i]
    size = 4 * local
    base = ensemble.bob[:, 0].astype(np.int64) * size + local_code

    best, found = -1, []
    for p in range(16):
        for q in range(16):
            c = 2 * ALL_TABLES[p][codes[:, 0]] + ALL_TABLES[q][codes[:, 1]]
            hits, _ = majority_counts(base + c * local, labels, 2 * size)
            if hits > best:
                best, found = hits, [(p, q)]
            elif hits == best:
                found.append((p, q))

    LOGGER.info(f"Sub-task optimum n={n}: {best}/{len(ensemble)}")
    return SearchReport(
        optimum=Fraction(best, len(ensemble)),
        optimal_strategies=found,
        strategies_examined=256,
        optimal_count=len(found),
        evaluated=256,
    )
