# config_manager.py
import json
import os
from dataclasses import fields
from pathlib import Path
from typing import Any, Dict, Optional, Union

from ghzcc import LOGGER
from ghzcc.config.types import (
    AppConfig,
    GridSpec,
    LimitsConfig,
    MonteCarloConfig,
    OutputConfig,
    RunConfig,
    ToleranceConfig,
)

PACKAGE_DIR = Path(__file__).parent.parent  # Gets the ghzcc package directory
CONFIG_DIR = PACKAGE_DIR / "config"
CONFIG_FILE = CONFIG_DIR / "config.json"

OUTPUT_FORMATS = ("csv", "json", "pretty")
MAX_SEED = 2**64 - 1


class ConfigurationError(Exception):
    """Custom exception for configuration errors"""

    pass


class ConfigManager:
    def __init__(self, config_path: Union[str, Path]):
        LOGGER.debug(f"Initializing ConfigManager with config_path: {config_path}")
        self.config_path = Path(config_path)
        self.config = self._load_config()

    def _load_config(self) -> AppConfig:
        """Load and validate configuration file"""
        if not self.config_path.exists():
            raise ConfigurationError(f"Configuration file not found: {self.config_path}")

        try:
            with open(self.config_path, "r", encoding="utf-8") as f:
                config_data = json.load(f)

            limits = self._section(LimitsConfig, config_data.get("limits", {}))
            monte_carlo = self._section(MonteCarloConfig, config_data.get("monte_carlo", {}))
            tolerances = self._section(ToleranceConfig, config_data.get("tolerances", {}))
            output = self._section(OutputConfig, config_data.get("output", {}))

        except json.JSONDecodeError as e:
            raise ConfigurationError(f"Invalid JSON in configuration file: {e}")
        except (ValueError, TypeError) as e:
            raise ConfigurationError(f"Invalid configuration values: {e}")

        if limits.enumeration_max_n < 2 or limits.search_max_n < 2:
            raise ConfigurationError("Party-count limits must allow at least n=2")
        if limits.witness_cap < 1:
            raise ConfigurationError("witness_cap must be positive")
        if monte_carlo.stream_size < 1:
            raise ConfigurationError("stream_size must be positive")
        if output.default_format not in OUTPUT_FORMATS:
            raise ConfigurationError(f"Unknown output format: {output.default_format}")

        try:
            threads = int(os.getenv("GHZCC_THREADS", "1"))
        except ValueError:
            raise ConfigurationError("GHZCC_THREADS must be an integer")

        return AppConfig(
            limits=limits,
            monte_carlo=monte_carlo,
            tolerances=tolerances,
            output=output,
            threads=max(threads, 1),
        )

    @staticmethod
    def _section(cls, data: Dict[str, Any]):
        """Build a config dataclass, casting values to the declared field types"""
        known = {f.name: f for f in fields(cls)}
        unknown = set(data) - set(known)
        if unknown:
            raise ConfigurationError(
                f"Unknown keys in {cls.__name__}: {', '.join(sorted(unknown))}"
            )
        kwargs = {}
        for name, value in data.items():
            caster = type(getattr(cls(), name))
            kwargs[name] = caster(value)
        return cls(**kwargs)

    @property
    def limits(self) -> LimitsConfig:
        return self.config.limits

    @property
    def monte_carlo(self) -> MonteCarloConfig:
        return self.config.monte_carlo

    @property
    def tolerances(self) -> ToleranceConfig:
        return self.config.tolerances

    @property
    def output(self) -> OutputConfig:
        return self.config.output

    @staticmethod
    def parse_grid(spec: str) -> GridSpec:
        """Parse a `start:stop:steps` grid spec with inclusive endpoints.

        Args:
            spec (`str`): e.g. "0:1:11"
        """
        parts = spec.split(":") if spec else []
        if len(parts) != 3:
            raise ConfigurationError(f"Grid spec must look like start:stop:steps, got {spec!r}")
        try:
            start, stop, steps = float(parts[0]), float(parts[1]), int(parts[2])
        except ValueError:
            raise ConfigurationError(f"Grid spec has non-numeric fields: {spec!r}")

        if steps < 1:
            raise ConfigurationError("Grid needs at least one step")
        if stop < start:
            raise ConfigurationError("Grid must be monotone (start <= stop)")
        if steps == 1 and stop != start:
            raise ConfigurationError("A one-step grid needs start == stop")
        for value in (start, stop):
            if not 0.0 <= value <= 1.0:
                raise ConfigurationError(f"Noise value {value} outside [0, 1]")
        return GridSpec(start=start, stop=stop, steps=steps)

    def build_run_config(
        self,
        command: str,
        n: int = 2,
        p: float = 0.0,
        grid: Optional[str] = None,
        shots: Optional[int] = None,
        seed: Optional[int] = None,
        output_format: Optional[str] = None,
        output_path: Optional[str] = None,
        threads: Optional[int] = None,
        n_range: Optional[tuple] = None,
    ) -> RunConfig:
        """Validate command-line values before anything is computed"""
        low, high = n_range or (2, self.limits.protocol_max_n)
        if not low <= n <= high:
            raise ConfigurationError(f"n must be in [{low}, {high}], got {n}")
        if not 0.0 <= p <= 1.0:
            raise ConfigurationError(f"p must be in [0, 1], got {p}")

        shots = self.monte_carlo.default_shots if shots is None else shots
        if shots < 0:
            raise ConfigurationError(f"shots must be non-negative, got {shots}")

        seed = self.monte_carlo.default_seed if seed is None else seed
        if not 0 <= seed <= MAX_SEED:
            raise ConfigurationError("seed must be a 64-bit unsigned integer")

        output_format = output_format or self.output.default_format
        if output_format not in OUTPUT_FORMATS:
            raise ConfigurationError(f"Unknown output format: {output_format}")

        threads = self.config.threads if threads is None else threads
        if threads < 1:
            raise ConfigurationError("threads must be at least 1")

        return RunConfig(
            command=command,
            n=n,
            p=p,
            grid=self.parse_grid(grid) if grid is not None else None,
            shots=shots,
            seed=seed,
            output_format=output_format,
            output_path=output_path,
            threads=threads,
        )


config_manager = ConfigManager(config_path=os.getenv("GHZCC_CONFIG") or CONFIG_FILE)


# Export the singleton instance
def get_config() -> ConfigManager:
    return config_manager
