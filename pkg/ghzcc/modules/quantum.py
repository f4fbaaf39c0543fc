import click

from ghzcc.config import get_config
from ghzcc.game.analysis import quantum_success
from ghzcc.game.quantum import run_protocol_exact, run_protocol_sampled
from ghzcc.utils import CheckFailed, Report, output_options, validating, write_report

COLUMNS = ["n", "p", "exact", "closed_form", "shots", "seed", "sampled", "std_error"]


@click.command("quantum")
@click.option("--n", "n", type=int, default=2, help="Number of Alices.")
@click.option("--p", "p", type=float, default=0.0, help="White-noise weight in [0, 1].")
@click.option("--shots", type=int, default=None, help="Monte-Carlo rounds; 0 skips sampling.")
@click.option("--seed", type=int, default=None, help="64-bit unsigned seed.")
@output_options
def quantum(n, p, shots, seed, output_format, output_path, threads):
    """Success probability of the GHZ protocol, exact and sampled."""
    config = get_config()
    with validating():
        run = config.build_run_config(
            "quantum",
            n=n,
            p=p,
            shots=shots,
            seed=seed,
            output_format=output_format,
            output_path=output_path,
            threads=threads,
        )

    exact = run_protocol_exact(run.n, run.p)
    closed_form = quantum_success(run.n, run.p)
    payload = {"n": run.n, "p": run.p, "exact": exact, "closed_form": closed_form}
    row = dict(payload, shots=run.shots)
    lines = [
        f"GHZ protocol, n={run.n} Alices, p={run.p}",
        f"  exact success     : {exact:.12f}",
        f"  (2 - p) / 2       : {closed_form:.12f}",
    ]

    if run.shots > 0:
        sampled = run_protocol_sampled(run.n, run.p, run.shots, run.seed, threads=run.threads)
        bound = config.tolerances.sigma_bound * sampled.std_error
        payload["sampled"] = {
            "mean": sampled.mean,
            "std_error": sampled.std_error,
            "shots": sampled.shots,
            "seed": sampled.seed,
            "errors": sampled.errors,
            "within_bound": abs(sampled.mean - exact) <= bound,
        }
        row.update(seed=run.seed, sampled=sampled.mean, std_error=sampled.std_error)
        lines += [
            f"  sampled success   : {sampled.mean:.6f} ± {sampled.std_error:.6f}",
            f"  shots / seed      : {sampled.shots} / {sampled.seed}",
        ]

    report = Report("quantum", payload, COLUMNS, [row], lines)
    write_report(report, run.output_format, run.output_path)

    if abs(exact - closed_form) > config.tolerances.normalization:
        raise CheckFailed(
            "Exact protocol success disagrees with (2 - p) / 2",
            [f"n={run.n} p={run.p}: {exact!r} vs {closed_form!r}"],
        )


def register_commands(group: click.Group):
    """Register the quantum subcommand"""
    group.add_command(quantum)
