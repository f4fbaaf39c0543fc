"""The CC_n game: instances, the promise, the uniform input ensemble and f_n."""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Mapping, Sequence, Tuple

import numpy as np

from ghzcc import LOGGER
from ghzcc.config import get_config
from ghzcc.game.errors import DomainError, EmptyEnsembleError, LimitError, ValidationError

Bits = Tuple[int, int]


def _check_bit(value, label: str) -> int:
    if value not in (0, 1):
        raise ValidationError(f"{label} must be a bit (0 or 1), got {value!r}")
    return int(value)


def _check_pair(pair, label: str) -> Bits:
    try:
        first, second = pair
    except (TypeError, ValueError):
        raise ValidationError(f"{label} must be a two-bit string, got {pair!r}")
    return _check_bit(first, f"{label}[0]"), _check_bit(second, f"{label}[1]")


def parity_indicator(r: int) -> int:
    """1 iff r is odd"""
    if r < 0:
        raise ValidationError(f"parity_indicator expects r >= 0, got {r}")
    return r & 1


def promise_holds(alice_inputs: Sequence[Bits], bob_input: Bits) -> bool:
    """True iff the first bits of all parties sum to an even number.

    Args:
        alice_inputs (`Sequence[Bits]`): one (x^0_i, x^1_i) pair per Alice, n >= 2
        bob_input (`Bits`): Bob's (y^0, y^1)
    """
    if len(alice_inputs) < 2:
        raise ValidationError(f"CC_n needs at least two Alices, got {len(alice_inputs)}")
    pairs = [_check_pair(x, f"x_{i + 1}") for i, x in enumerate(alice_inputs)]
    y0, _ = _check_pair(bob_input, "y")
    return (sum(x0 for x0, _ in pairs) + y0) % 2 == 0


@dataclass(frozen=True)
class TaskInstance:
    alice_inputs: Tuple[Bits, ...]
    bob_input: Bits

    def __post_init__(self):
        pairs = tuple(_check_pair(x, f"x_{i + 1}") for i, x in enumerate(self.alice_inputs))
        object.__setattr__(self, "alice_inputs", pairs)
        object.__setattr__(self, "bob_input", _check_pair(self.bob_input, "y"))
        if not promise_holds(self.alice_inputs, self.bob_input):
            raise DomainError(f"Promise violated: first bits of {self} sum to an odd number")

    def __repr__(self) -> str:
        xs = " ".join(f"{a}{b}" for a, b in self.alice_inputs)
        return f"<TaskInstance(x={xs}, y={self.bob_input[0]}{self.bob_input[1]})>"

    @property
    def n(self) -> int:
        return len(self.alice_inputs)

    @property
    def sz(self) -> int:
        """Total of the first bits, i.e. the number of Pauli-Y settings"""
        return sum(x0 for x0, _ in self.alice_inputs) + self.bob_input[0]


def target_function(inst: TaskInstance) -> int:
    """f_n = XOR of all second bits, y^1, and P[S_z / 2]"""
    if not isinstance(inst, TaskInstance):
        inst = TaskInstance(tuple(inst[0]), tuple(inst[1]))
    if inst.sz % 2:
        raise DomainError("Promise violated")
    parity = 0
    for _, x1 in inst.alice_inputs:
        parity ^= x1
    return parity ^ inst.bob_input[1] ^ parity_indicator(inst.sz // 2)


def _bit_rows(width: int) -> np.ndarray:
    """All `width`-bit tuples in lexicographic order, most significant bit first"""
    codes = np.arange(2**width, dtype=np.int64)[:, None]
    shifts = np.arange(width - 1, -1, -1, dtype=np.int64)[None, :]
    return ((codes >> shifts) & 1).astype(np.uint8)


@dataclass(frozen=True, eq=False)
class InstanceEnsemble:
    """A uniform ensemble of promise-satisfying instances, stored column-wise.

    `alice` has shape (N, n, 2) and `bob` has shape (N, 2); row i is one instance.
    """

    n: int
    alice: np.ndarray
    bob: np.ndarray

    def __post_init__(self):
        self.alice.setflags(write=False)
        self.bob.setflags(write=False)

    def __len__(self) -> int:
        return int(self.bob.shape[0])

    def __iter__(self) -> Iterator[TaskInstance]:
        for row, y in zip(self.alice, self.bob):
            yield TaskInstance(tuple((int(a), int(b)) for a, b in row), (int(y[0]), int(y[1])))

    def __getitem__(self, index: int) -> TaskInstance:
        row, y = self.alice[index], self.bob[index]
        return TaskInstance(tuple((int(a), int(b)) for a, b in row), (int(y[0]), int(y[1])))

    @property
    def weight(self) -> Fraction:
        return Fraction(1, len(self))

    @property
    def instances(self) -> List[TaskInstance]:
        return list(self)

    def sz(self) -> np.ndarray:
        return self.alice[:, :, 0].sum(axis=1, dtype=np.int64) + self.bob[:, 0]

    def targets(self) -> np.ndarray:
        """Vectorized f_n over every instance"""
        second = self.alice[:, :, 1].sum(axis=1, dtype=np.int64) + self.bob[:, 1]
        return ((second + self.sz() // 2) % 2).astype(np.uint8)

    def input_codes(self) -> np.ndarray:
        """Per-party input as an index 2*x^0 + x^1, shape (N, n)"""
        return (2 * self.alice[:, :, 0] + self.alice[:, :, 1]).astype(np.int64)

    def chunks(self, count: int) -> List["InstanceEnsemble"]:
        """Split into `count` contiguous pieces, deterministically.

        Each piece is uniform on its own rows; merge counts, not rates.
        """
        if count < 1:
            raise ValidationError("chunk count must be positive")
        pieces = np.array_split(np.arange(len(self)), count)
        return [
            InstanceEnsemble(self.n, self.alice[idx].copy(), self.bob[idx].copy())
            for idx in pieces
            if len(idx)
        ]


def enumerate_instances(n: int, max_n: int = None) -> InstanceEnsemble:
    """Materialize the uniform promise ensemble of 2^(2n+1) instances"""
    max_n = max_n or get_config().limits.enumeration_max_n
    if not 2 <= n <= max_n:
        raise LimitError(f"enumerate_instances supports 2 <= n <= {max_n}, got {n}")

    firsts = _bit_rows(n)
    y0 = (firsts.sum(axis=1) % 2).astype(np.uint8)
    seconds = _bit_rows(n + 1)

    reps = len(seconds)
    first_col = np.repeat(firsts, reps, axis=0)
    second_col = np.tile(seconds, (len(firsts), 1))

    alice = np.stack([first_col, second_col[:, :n]], axis=2)
    bob = np.stack([np.repeat(y0, reps), second_col[:, n]], axis=1)
    LOGGER.debug(f"Enumerated {len(bob)} instances for n={n}")
    return InstanceEnsemble(n, alice, bob)


def iter_instances(n: int) -> Iterator[TaskInstance]:
    """Stream the ensemble in enumeration order without materializing it"""
    if n < 2:
        raise ValidationError(f"CC_n needs at least two Alices, got {n}")
    for firsts in itertools.product((0, 1), repeat=n):
        y0 = sum(firsts) % 2
        for seconds in itertools.product((0, 1), repeat=n + 1):
            yield TaskInstance(tuple(zip(firsts, seconds[:n])), (y0, seconds[n]))


def restrict_to_subtask(
    ensemble: InstanceEnsemble, fixed: Mapping[int, Bits]
) -> InstanceEnsemble:
    """Pin the strings of some Alices and keep the matching instances.

    Args:
        ensemble (`InstanceEnsemble`): the ensemble to restrict
        fixed (`Mapping[int, Bits]`): 1-based Alice index -> forced two-bit string
    """
    mask = np.ones(len(ensemble), dtype=bool)
    for index, forced in fixed.items():
        if not 1 <= index <= ensemble.n:
            raise ValidationError(f"Alice index {index} outside 1..{ensemble.n}")
        x0, x1 = _check_pair(forced, f"x_{index}")
        column = ensemble.alice[:, index - 1, :]
        mask &= (column[:, 0] == x0) & (column[:, 1] == x1)

    if not mask.any():
        raise EmptyEnsembleError(f"No instance is consistent with the pinned strings {fixed}")
    return InstanceEnsemble(ensemble.n, ensemble.alice[mask].copy(), ensemble.bob[mask].copy())
