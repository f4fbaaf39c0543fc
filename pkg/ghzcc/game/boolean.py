"""Two-bit Boolean functions g^m(u, v) = αu ⊕ βv ⊕ γuv ⊕ δ, m = 8α + 4β + 2γ + δ."""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ghzcc.game.errors import ValidationError

# Column order of the CC_2 optimum table
TABLE1_ORDER: Tuple[int, ...] = (0, 8, 4, 12, 14, 2, 6, 10)

EVEN_NAMES = {
    0: "0",
    2: "u∧v",
    4: "v",
    6: "ū∧v",
    8: "u",
    10: "u∧v̄",
    12: "u⊕v",
    14: "u∨v",
}


@dataclass(frozen=True)
class TwoBitBoolean:
    alpha: int
    beta: int
    gamma: int
    delta: int

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "delta"):
            if getattr(self, name) not in (0, 1):
                raise ValidationError(f"{name} must be a bit, got {getattr(self, name)!r}")

    def __call__(self, u: int, v: int) -> int:
        return eval_g(self, u, v)

    def __repr__(self) -> str:
        return f"g^{self.index}"

    @classmethod
    def from_index(cls, m: int) -> "TwoBitBoolean":
        if not 0 <= m <= 15:
            raise ValidationError(f"g^m index must be in 0..15, got {m}")
        return cls((m >> 3) & 1, (m >> 2) & 1, (m >> 1) & 1, m & 1)

    @classmethod
    def from_truth_table(cls, table: Sequence[int]) -> "TwoBitBoolean":
        """Recover the coefficients from outputs listed at (u, v) = 00, 01, 10, 11"""
        if len(table) != 4:
            raise ValidationError(f"A two-bit truth table has 4 entries, got {len(table)}")
        t00, t01, t10, t11 = (int(t) for t in table)
        delta = t00
        alpha = t10 ^ delta
        beta = t01 ^ delta
        gamma = t11 ^ alpha ^ beta ^ delta
        return cls(alpha, beta, gamma, delta)

    @property
    def index(self) -> int:
        return 8 * self.alpha + 4 * self.beta + 2 * self.gamma + self.delta

    @property
    def coefficients(self) -> Tuple[int, int, int, int]:
        return self.alpha, self.beta, self.gamma, self.delta

    @property
    def truth_table(self) -> Tuple[int, int, int, int]:
        """Outputs at (u, v) = 00, 01, 10, 11; position is 2u + v"""
        return tuple(eval_g(self, u, v) for u in (0, 1) for v in (0, 1))

    @property
    def is_even(self) -> bool:
        return self.delta == 0

    @property
    def name(self) -> str:
        if self.is_even:
            return EVEN_NAMES[self.index]
        return f"¬({EVEN_NAMES[self.index - 1]})"

    def negation(self) -> "TwoBitBoolean":
        return TwoBitBoolean(self.alpha, self.beta, self.gamma, self.delta ^ 1)


def eval_g(f: TwoBitBoolean, u: int, v: int) -> int:
    if u not in (0, 1) or v not in (0, 1):
        raise ValidationError(f"g^m takes bits, got ({u!r}, {v!r})")
    return (f.alpha & u) ^ (f.beta & v) ^ (f.gamma & u & v) ^ f.delta


def symmetry_image(f: TwoBitBoolean, flip_u: int, flip_v: int) -> TwoBitBoolean:
    """The function f' with f'(u ⊕ flip_u, v ⊕ flip_v) = f(u, v)"""
    alpha, beta, gamma, delta = f.coefficients
    if flip_u and flip_v:
        return TwoBitBoolean(
            alpha ^ gamma, beta ^ gamma, gamma, delta ^ alpha ^ beta ^ gamma
        )
    if flip_u:
        return TwoBitBoolean(alpha, beta ^ gamma, gamma, delta ^ alpha)
    if flip_v:
        return TwoBitBoolean(alpha ^ gamma, beta, gamma, delta ^ beta)
    return f


def all_functions() -> List[TwoBitBoolean]:
    return [TwoBitBoolean.from_index(m) for m in range(16)]


def even_class() -> List[TwoBitBoolean]:
    """G_E, the non-negated half, in index order"""
    return [TwoBitBoolean.from_index(m) for m in range(0, 16, 2)]


def odd_class() -> List[TwoBitBoolean]:
    return [TwoBitBoolean.from_index(m) for m in range(1, 16, 2)]
