# config_types.py
from dataclasses import dataclass, field
from typing import List, Optional


@dataclass
class LimitsConfig:
    enumeration_max_n: int = 12
    search_max_n: int = 6
    mixed_protocol_max_n: int = 8
    statevector_max_qubits: int = 20
    oracle_max_qubits: int = 12
    protocol_max_n: int = 16
    witness_cap: int = 1024


@dataclass
class MonteCarloConfig:
    default_seed: int = 0
    default_shots: int = 0
    stream_size: int = 65536  # shots per seeded stream


@dataclass
class ToleranceConfig:
    normalization: float = 1e-12
    phase: float = 1e-10
    oracle: float = 1e-10
    sigma_bound: float = 4.0


@dataclass
class OutputConfig:
    default_format: str = "pretty"  # csv | json | pretty
    schema_version: int = 1


@dataclass
class AppConfig:
    limits: LimitsConfig = field(default_factory=LimitsConfig)
    monte_carlo: MonteCarloConfig = field(default_factory=MonteCarloConfig)
    tolerances: ToleranceConfig = field(default_factory=ToleranceConfig)
    output: OutputConfig = field(default_factory=OutputConfig)
    threads: int = 1


@dataclass
class GridSpec:
    start: float
    stop: float
    steps: int

    def values(self) -> List[float]:
        """Inclusive grid; a single step yields just `start`."""
        if self.steps == 1:
            return [self.start]
        width = (self.stop - self.start) / (self.steps - 1)
        return [round(self.start + i * width, 12) for i in range(self.steps - 1)] + [self.stop]


@dataclass
class RunConfig:
    command: str
    n: int = 2
    p: float = 0.0
    grid: Optional[GridSpec] = None
    shots: int = 0
    seed: int = 0
    output_format: str = "pretty"
    output_path: Optional[str] = None
    threads: int = 1
