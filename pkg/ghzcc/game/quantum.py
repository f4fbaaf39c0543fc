"""GHZ states, Pauli X/Y measurement statistics and the entanglement-assisted protocol.

Outcome labels: eigenvalue +1 is bit 0, eigenvalue -1 is bit 1. Outcome tuples and
statevector indices are big-endian, so qubit 0 is the leading bit.
"""

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

import numpy as np

from ghzcc import LOGGER
from ghzcc.config import get_config
from ghzcc.game.errors import LimitError, ValidationError
from ghzcc.game.task import parity_indicator

SQRT_HALF = 1 / math.sqrt(2)

PAULI = {
    "X": np.array([[0, 1], [1, 0]], dtype=np.complex128),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
}

# Rows are the conjugated +1 / -1 eigenvectors, so row o gives <e_o|psi>
EIGENBASIS = {
    "X": np.array([[1, 1], [1, -1]], dtype=np.complex128) * SQRT_HALF,
    "Y": np.array([[1, -1j], [1, 1j]], dtype=np.complex128) * SQRT_HALF,
}


@dataclass(frozen=True, eq=False)
class PureState:
    qubit_count: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amplitudes = np.asarray(self.amplitudes, dtype=np.complex128)
        if amplitudes.shape != (2**self.qubit_count,):
            raise ValidationError(
                f"{self.qubit_count} qubits need {2 ** self.qubit_count} amplitudes, "
                f"got shape {amplitudes.shape}"
            )
        norm = float(np.vdot(amplitudes, amplitudes).real)
        if abs(norm - 1) > get_config().tolerances.normalization:
            raise ValidationError(f"State is not normalized (squared norm {norm})")
        amplitudes.setflags(write=False)
        object.__setattr__(self, "amplitudes", amplitudes)


@dataclass(frozen=True)
class NoisyGHZ:
    """(1 - p)|G_K><G_K| + p (I/2)^K, kept as a mixing weight over the pure GHZ state"""

    qubit_count: int
    p: float

    def __post_init__(self):
        if self.qubit_count < 1:
            raise ValidationError("A GHZ state needs at least one qubit")
        if not 0.0 <= self.p <= 1.0:
            raise ValidationError(f"Noise p must be in [0, 1], got {self.p}")


@dataclass(frozen=True)
class MeasurementSetting:
    bases: Tuple[str, ...]

    def __post_init__(self):
        bases = tuple(b.upper() for b in self.bases)
        if not bases or any(b not in PAULI for b in bases):
            raise ValidationError(f"Only X and Y bases are supported, got {self.bases!r}")
        object.__setattr__(self, "bases", bases)

    def __len__(self) -> int:
        return len(self.bases)

    def __str__(self) -> str:
        return "".join(self.bases)

    @classmethod
    def from_first_bits(cls, bits: Sequence[int]) -> "MeasurementSetting":
        """X where a party's first bit is 0, Y where it is 1"""
        return cls(tuple("Y" if b else "X" for b in bits))

    @classmethod
    def parse(cls, text: str) -> "MeasurementSetting":
        return cls(tuple(text))

    @property
    def y_count(self) -> int:
        return sum(1 for b in self.bases if b == "Y")


@dataclass(frozen=True, eq=False)
class OutcomeDistribution:
    qubit_count: int
    probabilities: np.ndarray

    def __post_init__(self):
        probabilities = np.asarray(self.probabilities, dtype=np.float64)
        tolerance = get_config().tolerances.normalization
        if probabilities.shape != (2**self.qubit_count,):
            raise ValidationError("Distribution size does not match the qubit count")
        if (probabilities < -tolerance).any():
            raise ValidationError("Negative outcome probability")
        if abs(probabilities.sum() - 1) > tolerance:
            raise ValidationError(f"Probabilities sum to {probabilities.sum()}, not 1")
        probabilities.setflags(write=False)
        object.__setattr__(self, "probabilities", probabilities)

    def probability(self, outcome: Sequence[int]) -> float:
        index = 0
        for bit in outcome:
            index = 2 * index + int(bit)
        return float(self.probabilities[index])

    def parity_probabilities(self) -> Tuple[float, float]:
        """P(XOR of outcomes = 0), P(XOR of outcomes = 1)"""
        parity = outcome_parity(self.qubit_count)
        odd = float(self.probabilities[parity == 1].sum())
        return float(self.probabilities[parity == 0].sum()), odd


def outcome_parity(qubit_count: int) -> np.ndarray:
    """XOR of the bits of every outcome index"""
    indices = np.arange(2**qubit_count, dtype=np.int64)
    parity = np.zeros_like(indices)
    for shift in range(qubit_count):
        parity ^= (indices >> shift) & 1
    return parity


def _check_qubits(qubit_count: int, cap: int, what: str):
    if not 1 <= qubit_count <= cap:
        raise LimitError(f"{what} supports 1 <= K <= {cap}, got {qubit_count}")


def ghz_state(qubit_count: int, sign: int = 1) -> PureState:
    """(|0...0> + sign |1...1>) / sqrt(2)"""
    _check_qubits(qubit_count, get_config().limits.statevector_max_qubits, "ghz_state")
    if sign not in (1, -1):
        raise ValidationError(f"sign must be +1 or -1, got {sign}")
    amplitudes = np.zeros(2**qubit_count, dtype=np.complex128)
    amplitudes[0] = SQRT_HALF
    amplitudes[-1] = sign * SQRT_HALF
    return PureState(qubit_count, amplitudes)


def _apply_local(amplitudes: np.ndarray, matrices: Sequence[np.ndarray]) -> np.ndarray:
    """Apply one 2x2 matrix per qubit to a big-endian statevector"""
    count = len(matrices)
    psi = amplitudes.reshape((2,) * count)
    for axis, matrix in enumerate(matrices):
        psi = np.moveaxis(np.tensordot(matrix, psi, axes=([1], [axis])), 0, axis)
    return psi.reshape(-1)


def apply_pauli_string(state: PureState, setting: MeasurementSetting) -> PureState:
    if len(setting) != state.qubit_count:
        raise ValidationError(
            f"Setting {setting} has {len(setting)} bases for a {state.qubit_count}-qubit state"
        )
    image = _apply_local(state.amplitudes, [PAULI[b] for b in setting.bases])
    image = image / np.linalg.norm(image)
    return PureState(state.qubit_count, image)


def joint_distribution_oracle(
    state: Union[PureState, NoisyGHZ], setting: MeasurementSetting
) -> OutcomeDistribution:
    """Outcome statistics from the local eigenprojectors, computed on the statevector"""
    qubit_count = state.qubit_count
    _check_qubits(qubit_count, get_config().limits.oracle_max_qubits, "joint_distribution_oracle")
    if len(setting) != qubit_count:
        raise ValidationError("Setting length does not match the state")

    pure = ghz_state(qubit_count) if isinstance(state, NoisyGHZ) else state
    overlaps = _apply_local(pure.amplitudes, [EIGENBASIS[b] for b in setting.bases])
    probabilities = np.abs(overlaps) ** 2

    if isinstance(state, NoisyGHZ):
        uniform = np.full_like(probabilities, 2.0**-qubit_count)
        probabilities = (1 - state.p) * probabilities + state.p * uniform
    return OutcomeDistribution(qubit_count, probabilities)


def ghz_correlator(y_count: int) -> int:
    """<G_K| ⊗σ |G_K> for a product of X/Y with `y_count` Y factors"""
    if y_count % 2:
        return 0
    return -1 if parity_indicator(y_count // 2) else 1


def joint_distribution_analytic(
    qubit_count: int, p: float, setting: MeasurementSetting
) -> OutcomeDistribution:
    """P(o) = 2^-K [1 + (1 - p) (-1)^(XOR o) c(k)] on the noisy GHZ state"""
    if qubit_count < 1:
        raise ValidationError("A GHZ state needs at least one qubit")
    if not 0.0 <= p <= 1.0:
        raise ValidationError(f"Noise p must be in [0, 1], got {p}")
    if len(setting) != qubit_count:
        raise ValidationError("Setting length does not match the state")

    signs = 1 - 2 * outcome_parity(qubit_count)
    correlator = (1 - p) * ghz_correlator(setting.y_count)
    probabilities = (1 + correlator * signs) / 2.0**qubit_count
    return OutcomeDistribution(qubit_count, probabilities)


def _check_protocol(n: int, p: float):
    cap = get_config().limits.protocol_max_n
    if not 2 <= n <= cap:
        raise LimitError(f"The GHZ protocol supports 2 <= n <= {cap}, got {n}")
    if not 0.0 <= p <= 1.0:
        raise ValidationError(f"Noise p must be in [0, 1], got {p}")


def run_protocol_exact(n: int, p: float) -> float:
    """Exact success of the GHZ protocol on the noisy (n+1)-qubit state.

    Second bits cancel from Bob's answer, so the ensemble average groups by the Y-count
    k = S_z: among the 2^n even-sum first-bit tuples, C(n+1, k) have Y-count k.
    """
    _check_protocol(n, p)
    qubit_count = n + 1
    parity = outcome_parity(qubit_count)

    success = 0.0
    for k in range(0, qubit_count + 1, 2):
        setting = MeasurementSetting(("Y",) * k + ("X",) * (qubit_count - k))
        distribution = joint_distribution_analytic(qubit_count, p, setting)
        wanted = parity_indicator(k // 2)
        hit = float(distribution.probabilities[parity == wanted].sum())
        success += math.comb(qubit_count, k) * hit
    return success / 2**n


@dataclass
class SampledResult:
    n: int
    p: float
    shots: int
    seed: int
    mean: float
    std_error: float
    errors: int


def _sample_stream(n: int, p: float, shots: int, seed: int, stream: int) -> int:
    """Play `shots` rounds on one seeded stream and count Bob's correct answers"""
    rng = np.random.default_rng(np.random.SeedSequence([seed, stream]))
    qubit_count = n + 1

    x0 = rng.integers(0, 2, size=(shots, n))
    y0 = x0.sum(axis=1) % 2
    x1 = rng.integers(0, 2, size=(shots, n))
    y1 = rng.integers(0, 2, size=shots)
    sz = x0.sum(axis=1) + y0

    # Outcomes: the XOR follows the correlator, the rest of the tuple is uniform
    correlator = (1 - p) * np.where(sz % 2 == 0, 1 - 2 * ((sz // 2) % 2), 0)
    odd = (rng.random(shots) >= (1 + correlator) / 2).astype(np.int64)
    outcomes = rng.integers(0, 2, size=(shots, qubit_count))
    outcomes[:, -1] = (outcomes[:, :-1].sum(axis=1) + odd) % 2

    messages = outcomes[:, :n] ^ x1
    answer = (messages.sum(axis=1) + y1 + outcomes[:, n]) % 2
    target = (x1.sum(axis=1) + y1 + sz // 2) % 2
    return int((answer == target).sum())


def run_protocol_sampled(
    n: int, p: float, shots: int, seed: int, threads: int = 1, stream_size: int = None
) -> SampledResult:
    """Monte-Carlo estimate of the protocol's success.

    Shots are cut into fixed-size streams seeded by (seed, stream index); `threads` only
    changes how the streams are scheduled, never the estimate.
    """
    _check_protocol(n, p)
    if shots < 1:
        raise ValidationError(f"shots must be at least 1, got {shots}")
    stream_size = stream_size or get_config().monte_carlo.stream_size
    started = time.perf_counter()

    sizes: List[int] = []
    remaining = shots
    while remaining > 0:
        sizes.append(min(stream_size, remaining))
        remaining -= sizes[-1]

    def play(stream: int) -> int:
        return _sample_stream(n, p, sizes[stream], seed, stream)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            wins = sum(pool.map(play, range(len(sizes))))
    else:
        wins = sum(play(stream) for stream in range(len(sizes)))

    mean = wins / shots
    std_error = math.sqrt(mean * (1 - mean) / shots)
    LOGGER.info(
        f"Sampled n={n} p={p}: {wins}/{shots} over {len(sizes)} streams "
        f"({time.perf_counter() - started:.2f}s)"
    )
    return SampledResult(
        n=n, p=p, shots=shots, seed=seed, mean=mean, std_error=std_error, errors=shots - wins
    )


@dataclass
class PhaseRow:
    setting: str
    sz: int
    expected_phase: complex
    observed_phase: complex
    image_class: str  # "G" or "G-"
    matches: bool

    @property
    def label(self) -> str:
        phase = self.expected_phase
        if abs(phase.imag) > 0.5:
            prefix = "+i" if phase.imag > 0 else "-i"
        else:
            prefix = "+" if phase.real > 0 else "-"
        return f"{prefix}|{self.image_class}>"


def expected_ghz_phase(sz: int) -> Tuple[complex, int]:
    """Phase and reference sign from the GHZ stabilizer property"""
    if sz % 2 == 0:
        return complex((-1) ** (sz // 2)), 1
    return (-1) ** ((sz + 1) // 2) * 1j, -1


def ghz_property_report(qubit_count: int) -> List[PhaseRow]:
    """Apply every X/Y string to |G_K> and check the phase against the closed form"""
    _check_qubits(qubit_count, get_config().limits.oracle_max_qubits, "ghz_property_report")
    tolerance = get_config().tolerances.phase
    ghz = ghz_state(qubit_count)
    references = {1: ghz, -1: ghz_state(qubit_count, sign=-1)}

    rows = []
    for code in range(2**qubit_count):
        bits = [(code >> (qubit_count - 1 - i)) & 1 for i in range(qubit_count)]
        setting = MeasurementSetting.from_first_bits(bits)
        image = apply_pauli_string(ghz, setting)
        expected, sign = expected_ghz_phase(setting.y_count)
        observed = complex(np.vdot(references[sign].amplitudes, image.amplitudes))
        rows.append(
            PhaseRow(
                setting=str(setting),
                sz=setting.y_count,
                expected_phase=expected,
                observed_phase=observed,
                image_class="G" if sign == 1 else "G-",
                matches=abs(observed - expected) < tolerance,
            )
        )
    return rows
