"""Closed-form bounds, noise thresholds, noise sweeps and the CC_2 optimum table."""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from ghzcc import LOGGER
from ghzcc.config import get_config
from ghzcc.game.boolean import TABLE1_ORDER, TwoBitBoolean
from ghzcc.game.errors import ValidationError
from ghzcc.game.search import classical_optimum, optimal_decoding_for_encodings

CLASSICAL_UPPER = Fraction(3, 4)

GENUINE = "genuinely entangled"
INTERMEDIATE = "intermediate/biseparable"
SEPARABLE = "fully separable"

_HALF, _FIVE_EIGHTHS, _THREE_QUARTERS = Fraction(1, 2), Fraction(5, 8), Fraction(3, 4)
_LOW_ROW = (_HALF,) * 8
_LINEAR_ROW = (_HALF, _HALF) + (_THREE_QUARTERS,) * 6
_AND_ROW = (_HALF, _HALF, _THREE_QUARTERS, _THREE_QUARTERS) + (_FIVE_EIGHTHS,) * 4

# Known optimum per even encoding pair; rows and columns follow TABLE1_ORDER
TABLE1_EXPECTED: Dict[int, Tuple[Fraction, ...]] = {
    0: _LOW_ROW,
    8: _LOW_ROW,
    4: _LINEAR_ROW,
    12: _LINEAR_ROW,
    14: _AND_ROW,
    2: _AND_ROW,
    6: _AND_ROW,
    10: _AND_ROW,
}


def _check_n(n: int):
    if n < 2:
        raise ValidationError(f"CC_n needs at least two Alices, got {n}")


def _check_p(p: float):
    if not 0.0 <= p <= 1.0:
        raise ValidationError(f"Noise p must be in [0, 1], got {p}")


def mermin_lower_bound(n: int, printed: bool = False) -> Fraction:
    """Classical value 1/2 + 2^-ceil((n+1)/2) of the (n+1)-player Mermin game.

    `printed=True` gives the variant 1/2 + 1/ceil(2^((n+1)/2)) instead, which exceeds the
    3/4 upper bound at n = 2 and is kept for diagnostics only.
    """
    _check_n(n)
    if printed:
        if (n + 1) % 2 == 0:
            denominator = 2 ** ((n + 1) // 2)
        else:
            denominator = math.isqrt(2 ** (n + 1) - 1) + 1
        return _HALF + Fraction(1, denominator)
    return _HALF + Fraction(1, 2 ** ((n + 2) // 2))


@dataclass
class BoundsRecord:
    n: int
    lower: Fraction
    upper: Fraction
    tight: bool
    searched: Optional[Fraction] = None
    printed_lower: Optional[Fraction] = None


def bounds_record(n: int, search: bool = False) -> BoundsRecord:
    lower = mermin_lower_bound(n)
    if lower > CLASSICAL_UPPER:
        raise ValidationError(f"Lower bound {lower} exceeds the upper bound at n={n}")
    searched = searched_optimum(n) if search else None
    return BoundsRecord(
        n=n,
        lower=lower,
        upper=CLASSICAL_UPPER,
        tight=lower == CLASSICAL_UPPER,
        searched=searched,
        printed_lower=mermin_lower_bound(n, printed=True),
    )


@lru_cache(maxsize=None)
def searched_optimum(n: int) -> Fraction:
    return classical_optimum(n).optimum


def quantum_success(n: int, p: float) -> float:
    """(2 - p) / 2, the noisy GHZ protocol's success"""
    _check_n(n)
    _check_p(p)
    return (2 - p) / 2


def advantage_threshold(n: int) -> Fraction:
    """Noise level where (2 - p)/2 meets the classical upper bound"""
    _check_n(n)
    return 2 - 2 * CLASSICAL_UPPER


def separability_thresholds(n: int) -> Tuple[Fraction, Fraction]:
    """(full_sep, genuine): fully separable iff p >= full_sep, genuine iff p < genuine"""
    _check_n(n)
    full_sep = Fraction(2**n, 2**n + 1)
    genuine = Fraction(2**n, 2 ** (n + 1) - 1)
    return full_sep, genuine


def entanglement_class(n: int, p: float) -> str:
    _check_p(p)
    full_sep, genuine = separability_thresholds(n)
    if p < genuine:
        return GENUINE
    if p < full_sep:
        return INTERMEDIATE
    return SEPARABLE


@dataclass
class SweepRow:
    n: int
    p: float
    quantum_success: float
    classical_upper: Fraction
    advantage: bool
    entanglement_class: str
    classical_optimum: Optional[Fraction] = None
    advantage_vs_optimum: Optional[bool] = None


def noise_sweep(n: int, p_grid: Sequence[float], with_search: bool = True) -> List[SweepRow]:
    """One row per grid point; rows also compare against the searched optimum for small n"""
    _check_n(n)
    for p in p_grid:
        _check_p(p)

    optimum = None
    if with_search and n <= get_config().limits.search_max_n:
        optimum = searched_optimum(n)

    rows = []
    for p in p_grid:
        success = quantum_success(n, p)
        rows.append(
            SweepRow(
                n=n,
                p=p,
                quantum_success=success,
                classical_upper=CLASSICAL_UPPER,
                advantage=success > CLASSICAL_UPPER,
                entanglement_class=entanglement_class(n, p),
                classical_optimum=optimum,
                advantage_vs_optimum=None if optimum is None else success > optimum,
            )
        )
    LOGGER.debug(f"Sweep n={n}: {len(rows)} rows")
    return rows


@dataclass
class Table1Cell:
    encoding_1: int
    encoding_2: int
    decoding_0: int
    decoding_1: int
    success: Fraction
    expected: Fraction

    @property
    def highlight(self) -> bool:
        return self.success == _THREE_QUARTERS

    @property
    def matches(self) -> bool:
        return self.success == self.expected


@dataclass
class Table1Report:
    order: Tuple[int, ...] = TABLE1_ORDER
    cells: Dict[Tuple[int, int], Table1Cell] = field(default_factory=dict)

    @property
    def mismatches(self) -> List[Table1Cell]:
        return [cell for cell in self.cells.values() if not cell.matches]

    @property
    def matches(self) -> bool:
        return len(self.cells) == len(self.order) ** 2 and not self.mismatches

    def row(self, p: int) -> List[Table1Cell]:
        return [self.cells[(p, q)] for q in self.order]


def table1_reproduce() -> Table1Report:
    """Majority-optimal decodings for all 64 even encoding pairs of CC_2"""
    report = Table1Report()
    for p in TABLE1_ORDER:
        for column, q in enumerate(TABLE1_ORDER):
            encodings = [TwoBitBoolean.from_index(p), TwoBitBoolean.from_index(q)]
            strategy, success = optimal_decoding_for_encodings(2, encodings)
            d0, d1 = strategy.decoding_functions()
            report.cells[(p, q)] = Table1Cell(
                encoding_1=p,
                encoding_2=q,
                decoding_0=d0.index,
                decoding_1=d1.index,
                success=success,
                expected=TABLE1_EXPECTED[p][column],
            )
    if report.mismatches:
        LOGGER.error(f"Even-encoding grid mismatches in {len(report.mismatches)} cells")
    return report
