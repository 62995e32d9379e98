import os
from dataclasses import dataclass
from typing import Optional, Tuple

from dotenv import load_dotenv

from .errors import ConfigError

# An optional .env next to the working directory may set HILBCAT_SEED etc.
load_dotenv()

RING_NAMES = ("nat", "bool", "int", "rat", "gauss", "qsqrt2")


@dataclass(frozen=True)
class AuditConfiguration:
    ring: str = "rat"
    seed: int = 42
    samples: int = 100
    oracle_vectors: int = 1000
    max_dim: int = 4
    entry_height: int = 5
    suites: Tuple[str, ...] = ("all",)
    input_path: Optional[str] = None
    out_path: str = "output/reports"
    jobs: int = 1
    bound_search_steps: int = 24
    sqrt_precision_bits: int = 16
    log_level: str = "INFO"
    structured_logs: bool = False

    @classmethod
    def from_env(cls, **overrides) -> "AuditConfiguration":
        """Defaults, then environment, then explicit overrides (CLI flags)."""
        values = {}
        env_seed = os.environ.get("HILBCAT_SEED")
        if env_seed:
            try:
                values["seed"] = int(env_seed)
            except ValueError as e:
                raise ConfigError(f"HILBCAT_SEED is not an integer: {env_seed!r}") from e
        env_level = os.environ.get("HILBCAT_LOG_LEVEL")
        if env_level:
            values["log_level"] = env_level
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def validate(self) -> "AuditConfiguration":
        from .laws.suites import SUITE_NAMES
        from .scalars import ring_from_name

        try:
            ring_from_name(self.ring)
        except Exception as e:
            raise ConfigError(f"unknown ring {self.ring!r}; expected one of {', '.join(RING_NAMES)}") from e
        for name, value in (
            ("samples", self.samples),
            ("oracle_vectors", self.oracle_vectors),
            ("max_dim", self.max_dim),
            ("entry_height", self.entry_height),
            ("jobs", self.jobs),
            ("bound_search_steps", self.bound_search_steps),
            ("sqrt_precision_bits", self.sqrt_precision_bits),
        ):
            if value < 1:
                raise ConfigError(f"{name} must be >= 1, got {value}")
        if not 0 <= self.seed < 2**64:
            raise ConfigError(f"seed must be an unsigned 64-bit integer, got {self.seed}")
        for suite in self.suites:
            if suite != "all" and suite not in SUITE_NAMES:
                raise ConfigError(f"unknown suite {suite!r}")
        return self

    def selected_suites(self) -> Tuple[str, ...]:
        from .laws.suites import SUITE_NAMES

        if "all" in self.suites:
            return SUITE_NAMES
        return tuple(s for s in SUITE_NAMES if s in self.suites)


config = AuditConfiguration.from_env()
