from fractions import Fraction

import pytest

from ghzcc.game.analysis import (
    CLASSICAL_UPPER,
    GENUINE,
    INTERMEDIATE,
    SEPARABLE,
    TABLE1_EXPECTED,
    advantage_threshold,
    bounds_record,
    entanglement_class,
    mermin_lower_bound,
    noise_sweep,
    quantum_success,
    separability_thresholds,
    table1_reproduce,
)
from ghzcc.game.boolean import TABLE1_ORDER
from ghzcc.game.errors import ValidationError
from ghzcc.game.search import classical_optimum
from ghzcc.game.strategy import ClassicalStrategyCC2, strategy_success_cc2


@pytest.mark.parametrize(
    "n,expected",
    [(2, Fraction(3, 4)), (3, Fraction(3, 4)), (4, Fraction(5, 8)), (5, Fraction(5, 8))],
)
def test_mermin_lower_bound(n, expected):
    assert mermin_lower_bound(n) == expected


def test_printed_variant_overshoots_at_two():
    assert mermin_lower_bound(2, printed=True) == Fraction(5, 6)
    assert mermin_lower_bound(3, printed=True) == Fraction(3, 4)
    assert mermin_lower_bound(2, printed=True) > CLASSICAL_UPPER


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_bounds_bracket_the_optimum(n):
    optimum = classical_optimum(n).optimum
    assert mermin_lower_bound(n) <= optimum <= CLASSICAL_UPPER
    if n <= 3:
        assert mermin_lower_bound(n) == optimum == CLASSICAL_UPPER


def test_bounds_record():
    record = bounds_record(2, search=True)
    assert record.tight
    assert record.searched == CLASSICAL_UPPER
    assert not bounds_record(4).tight


@pytest.mark.parametrize("p,expected", [(0.0, 1.0), (1.0, 0.5), (0.5, 0.75)])
def test_quantum_success(p, expected):
    assert quantum_success(3, p) == expected


def test_quantum_success_validation():
    with pytest.raises(ValidationError):
        quantum_success(2, -0.1)
    with pytest.raises(ValidationError):
        quantum_success(1, 0.5)


@pytest.mark.parametrize("n", [2, 3, 7])
def test_advantage_threshold(n):
    assert advantage_threshold(n) == Fraction(1, 2)


def test_separability_thresholds():
    assert separability_thresholds(2) == (Fraction(4, 5), Fraction(4, 7))
    assert separability_thresholds(3) == (Fraction(8, 9), Fraction(8, 15))
    for n in range(2, 11):
        full_sep, genuine = separability_thresholds(n)
        assert Fraction(1, 2) < genuine < full_sep
    full_sep, genuine = separability_thresholds(40)
    assert float(full_sep) == pytest.approx(1.0)
    assert float(genuine) == pytest.approx(0.5)


@pytest.mark.parametrize(
    "p,advantage,label",
    [(0.3, True, GENUINE), (0.6, False, INTERMEDIATE), (0.9, False, SEPARABLE)],
)
def test_sweep_rows(p, advantage, label):
    (row,) = noise_sweep(2, [p])
    assert row.advantage is advantage
    assert row.entanglement_class == label
    assert entanglement_class(2, p) == label


def test_sweep_boundary_is_strict():
    (row,) = noise_sweep(5, [0.5])
    assert row.quantum_success == 0.75
    assert row.advantage is False
    assert row.classical_optimum is not None


def test_sweep_grid_advantage():
    grid = [i / 10 for i in range(11)]
    rows = noise_sweep(2, grid)
    assert [row.advantage for row in rows] == [p < 0.5 for p in grid]
    assert all(row.classical_optimum == CLASSICAL_UPPER for row in rows)


def test_sweep_skips_search_for_large_n():
    (row,) = noise_sweep(8, [0.1])
    assert row.classical_optimum is None
    assert row.advantage_vs_optimum is None


def test_table1_matches():
    report = table1_reproduce()
    assert report.matches
    assert len(report.cells) == 64
    assert report.order == TABLE1_ORDER


@pytest.mark.parametrize(
    "p,q,expected",
    [(4, 12, Fraction(3, 4)), (14, 14, Fraction(5, 8)), (0, 6, Fraction(1, 2))],
)
def test_table1_cells(p, q, expected):
    cell = table1_reproduce().cells[(p, q)]
    assert cell.success == expected
    assert cell.highlight is (expected == Fraction(3, 4))
    witness = ClassicalStrategyCC2.from_indices(p, q, cell.decoding_0, cell.decoding_1)
    assert strategy_success_cc2(witness) == expected


def test_case_study_cell():
    cell = table1_reproduce().cells[(4, 4)]
    assert (cell.decoding_0, cell.decoding_1) == (0, 13)


def test_table1_reports_mismatch(monkeypatch):
    broken = dict(TABLE1_EXPECTED)
    broken[0] = (Fraction(3, 4),) + TABLE1_EXPECTED[0][1:]
    monkeypatch.setattr("ghzcc.game.analysis.TABLE1_EXPECTED", broken)
    report = table1_reproduce()
    assert not report.matches
    assert [(c.encoding_1, c.encoding_2) for c in report.mismatches] == [(0, 0)]
