"""Self-check suite: every identity the library relies on, re-derived at desk scale."""

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional, Tuple

import click
import numpy as np

from ghzcc import LOGGER
from ghzcc.config import get_config
from ghzcc.game.analysis import (
    CLASSICAL_UPPER,
    advantage_threshold,
    mermin_lower_bound,
    separability_thresholds,
    table1_reproduce,
)
from ghzcc.game.boolean import all_functions, symmetry_image
from ghzcc.game.quantum import (
    MeasurementSetting,
    NoisyGHZ,
    ghz_property_report,
    joint_distribution_analytic,
    joint_distribution_oracle,
    run_protocol_exact,
)
from ghzcc.game.search import classical_optimum, exhaustive_search_cc2, subtask_optimum
from ghzcc.game.strategy import (
    ClassicalStrategyCC2,
    mixed_protocol_success,
    shared_randomness_success,
    strategy_success_cc2,
)
from ghzcc.game.task import enumerate_instances, promise_holds, target_function
from ghzcc.utils import (
    CheckFailed,
    Report,
    format_fraction,
    output_options,
    validating,
    write_report,
)

COLUMNS = ["check", "passed", "detail"]

ORACLE_MAX_K = 6
PROTOCOL_MAX_N = 5
NOISE_LEVELS = (0.0, 0.3, 1.0)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def check_ghz_phases() -> Tuple[bool, str]:
    failures = []
    for k in range(2, ORACLE_MAX_K + 1):
        failures += [f"K={k} {row.setting}" for row in ghz_property_report(k) if not row.matches]
    return not failures, ", ".join(failures) or f"all settings for K=2..{ORACLE_MAX_K}"


def check_analytic_vs_oracle() -> Tuple[bool, str]:
    worst = 0.0
    for k in range(1, ORACLE_MAX_K + 1):
        for code in range(2**k):
            setting = MeasurementSetting.from_first_bits([(code >> i) & 1 for i in range(k)])
            for p in NOISE_LEVELS:
                oracle = joint_distribution_oracle(NoisyGHZ(k, p), setting).probabilities
                analytic = joint_distribution_analytic(k, p, setting).probabilities
                worst = max(worst, float(np.abs(oracle - analytic).max()))
    return worst < get_config().tolerances.oracle, f"max deviation {worst:.3e}"


def check_protocol_curve() -> Tuple[bool, str]:
    worst = 0.0
    for n in range(2, PROTOCOL_MAX_N + 1):
        for p in np.linspace(0, 1, 11):
            worst = max(worst, abs(run_protocol_exact(n, float(p)) - (2 - p) / 2))
    return worst < 1e-12, f"max |exact - (2-p)/2| = {worst:.3e}"


def check_mixed_protocol() -> Tuple[bool, str]:
    failures = [
        f"n={n} short={short}"
        for n in range(2, PROTOCOL_MAX_N + 1)
        for short in (1, n)
        if mixed_protocol_success(n, short_party=short) != 1
    ]
    return not failures, ", ".join(failures) or "2n - 1 bits always suffice"


def check_cc2_optimum() -> Tuple[bool, str]:
    report = exhaustive_search_cc2()
    perfect = report.optimum == 1
    return (
        report.optimum == CLASSICAL_UPPER and not perfect,
        f"optimum {format_fraction(report.optimum)} over {report.strategies_examined} strategies",
    )


def check_table1() -> Tuple[bool, str]:
    result = table1_reproduce()
    return result.matches, f"{len(result.mismatches)} of {len(result.cells)} cells off"


def check_bounds() -> Tuple[bool, str]:
    values = []
    passed = True
    for n in range(2, PROTOCOL_MAX_N + 1):
        lower, optimum = mermin_lower_bound(n), classical_optimum(n).optimum
        passed &= lower <= optimum <= CLASSICAL_UPPER
        if n <= 3:
            passed &= lower == optimum == CLASSICAL_UPPER
        values.append(f"n={n}: {format_fraction(optimum)}")
    return passed, ", ".join(values)


def check_symmetry_reduction() -> Tuple[bool, str]:
    reduced = classical_optimum(3, use_symmetry=True)
    full = classical_optimum(3, use_symmetry=False)
    return (
        reduced.optimum == full.optimum and reduced.optimal_count == full.optimal_count,
        f"{reduced.evaluated} vs {full.evaluated} tuples scored",
    )


def check_subtask() -> Tuple[bool, str]:
    values = {n: subtask_optimum(n).optimum for n in range(3, PROTOCOL_MAX_N + 1)}
    return (
        all(v == CLASSICAL_UPPER for v in values.values()),
        ", ".join(f"n={n}: {format_fraction(v)}" for n, v in values.items()),
    )


def check_convexity() -> Tuple[bool, str]:
    best = ClassicalStrategyCC2.from_indices(4, 4, 0, 13)
    worst = ClassicalStrategyCC2.from_indices(0, 0, 0, 0)
    weights = [Fraction(1, 3), Fraction(2, 3)]
    mixed = shared_randomness_success([best.to_general(), worst.to_general()], weights)
    average = weights[0] * strategy_success_cc2(best) + weights[1] * strategy_success_cc2(worst)
    return mixed == average and mixed <= CLASSICAL_UPPER, f"mixture {format_fraction(mixed)}"


def check_thresholds() -> Tuple[bool, str]:
    passed = all(advantage_threshold(n) == Fraction(1, 2) for n in range(2, 11))
    passed &= separability_thresholds(2) == (Fraction(4, 5), Fraction(4, 7))
    passed &= separability_thresholds(3) == (Fraction(8, 9), Fraction(8, 15))
    for n in range(2, 11):
        full_sep, genuine = separability_thresholds(n)
        passed &= Fraction(1, 2) < genuine < full_sep
    return passed, "advantage at 1/2, 1/2 < genuine < separable"


def check_symmetry_images() -> Tuple[bool, str]:
    bad = []
    for f in all_functions():
        for a in (0, 1):
            for b in (0, 1):
                image = symmetry_image(f, a, b)
                if any(image(u ^ a, v ^ b) != f(u, v) for u in (0, 1) for v in (0, 1)):
                    bad.append(f"{f!r} flips=({a},{b})")
    return not bad, ", ".join(bad) or "all 64 images"


def check_targets() -> Tuple[bool, str]:
    for n in range(2, 5):
        ensemble = enumerate_instances(n)
        targets = ensemble.targets()
        for index, inst in enumerate(ensemble):
            if not promise_holds(inst.alice_inputs, inst.bob_input):
                return False, f"promise broken at n={n} #{index}"
            if target_function(inst) != targets[index]:
                return False, f"vectorized target differs at n={n} #{index}"
    return True, "scalar and vectorized f_n agree for n=2..4"


CHECKS: List[Tuple[str, Callable[[], Tuple[bool, str]]]] = [
    ("targets", check_targets),
    ("symmetry-images", check_symmetry_images),
    ("ghz-phases", check_ghz_phases),
    ("analytic-vs-oracle", check_analytic_vs_oracle),
    ("protocol-curve", check_protocol_curve),
    ("mixed-protocol", check_mixed_protocol),
    ("cc2-optimum", check_cc2_optimum),
    ("table1", check_table1),
    ("classical-bounds", check_bounds),
    ("symmetry-reduction", check_symmetry_reduction),
    ("subtask-reduction", check_subtask),
    ("convexity", check_convexity),
    ("thresholds", check_thresholds),
]


def run_checks(inject_fault: bool = False) -> List[CheckResult]:
    results = []
    for name, check in CHECKS:
        started = time.perf_counter()
        passed, detail = check()
        LOGGER.info(
            f"{'PASS' if passed else 'FAIL'} {name} ({time.perf_counter() - started:.2f}s)"
        )
        results.append(CheckResult(name, bool(passed), detail))
    if inject_fault:
        results.append(CheckResult("injected-fault", False, "harness self-test"))
    return results


def phase_table(qubit_count: int) -> List[dict]:
    return [
        {
            "setting": row.setting,
            "sz": row.sz,
            "image": row.label,
            "observed": row.observed_phase,
            "match": row.matches,
        }
        for row in ghz_property_report(qubit_count)
    ]


@click.command("verify")
@click.option("--ghz-k", "ghz_k", type=int, default=None, help="Phase table for K qubits.")
@click.option("--inject-fault", is_flag=True, hidden=True)
@output_options
def verify(ghz_k: Optional[int], inject_fault, output_format, output_path, threads):
    """Run the invariant suite; exits 0 only if every check passes."""
    config = get_config()
    with validating():
        run = config.build_run_config(
            "verify", output_format=output_format, output_path=output_path, threads=threads
        )
        table = phase_table(ghz_k) if ghz_k is not None else None

    results = run_checks(inject_fault=inject_fault)
    failures = [result for result in results if not result.passed]

    payload = {"checks": results, "passed": not failures}
    lines = []
    if table is not None:
        payload["phase_table"] = {"k": ghz_k, "rows": table}
        lines.append(f"Pauli strings on |G_{ghz_k}>")
        for row in table:
            lines.append(f"  {row['setting']:<{ghz_k}}  S_z={row['sz']:<3} {row['image']}")
    lines += [f"{'PASS' if r.passed else 'FAIL'}  {r.name:<20} {r.detail}" for r in results]
    lines.append(f"{len(results) - len(failures)}/{len(results)} checks passed")

    rows = [{"check": r.name, "passed": r.passed, "detail": r.detail} for r in results]
    report = Report("verify", payload, COLUMNS, rows, lines)
    write_report(report, run.output_format, run.output_path)

    if failures:
        raise CheckFailed("Verification failed", [f"{r.name}: {r.detail}" for r in failures])


def register_commands(group: click.Group):
    """Register the verify subcommand"""
    group.add_command(verify)
