"""permanent-lab configuration settings."""

import logging
import os
from dataclasses import dataclass, field, replace

from permlab.errors import SizeGuardError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GuardConfig:
    """Desk-scale size guards; policy, not correctness."""

    naive_max_n: int = 12  # n! terms
    ryser_max_n: int = 30
    glynn_max_n: int = 30
    gauge_z2_max_n: int = 26
    gauge_zp_max_terms: int = 2**26  # p**n
    enumeration_max_configs: int = 2**24
    recursive_max_n: int = 20  # inner Glynn call
    zeon_max_n: int = 4
    override: bool = False

    def check(self, name: str, value: int, limit: int, hint: str = "") -> None:
        """Raise SizeGuardError when value exceeds limit, unless overridden."""
        if value <= limit:
            return
        if self.override:
            logger.warning("size guard %s overridden: %d > %d", name, value, limit)
            return
        suffix = f"; {hint}" if hint else ""
        raise SizeGuardError(f"{name} {value} exceeds guard {limit}{suffix}")


@dataclass(frozen=True)
class SamplingConfig:
    """Monte Carlo sampling and stopping-rule defaults."""

    checkpoint_interval: int = 4096
    default_seed: int = 12345
    default_confidence: float = 0.95
    default_max_samples: int = 100_000  # used when neither --samples nor --epsilon is given
    epsilon_max_samples: int = 10_000_000  # cap for --epsilon runs without --samples
    kurtosis_warning: float = 20.0  # excess kurtosis above this is flagged
    shrink_warning_ratio: float = 1.5  # hw * sqrt(N) growth tolerated across checkpoints


@dataclass(frozen=True)
class SvdConfig:
    """One-sided Jacobi SVD controls."""

    tolerance: float = 1e-12
    max_sweeps: int = 30


@dataclass(frozen=True)
class Settings:
    """Global settings for permanent-lab."""

    # Recorded in every report; bump when a kernel's numerics change
    algorithm_version: str = "1.0.0"
    schema_version: int = 1

    guards: GuardConfig = field(default_factory=GuardConfig)
    sampling: SamplingConfig = field(default_factory=SamplingConfig)
    svd: SvdConfig = field(default_factory=SvdConfig)

    # Gray-code kernels
    gray_block_bits: int = 12  # inner block enumerated densely
    gray_check_interval: int = 0  # 0 disables the drift self-check
    workers: int = field(default_factory=lambda: os.cpu_count() or 1)

    log_level: str = "WARNING"

    def with_guard_override(self, override: bool) -> "Settings":
        """Copy of these settings with the guard override flag set."""
        return replace(self, guards=replace(self.guards, override=override))

    @classmethod
    def from_env(cls) -> "Settings":
        """Load settings from environment variables."""
        defaults = cls()
        return cls(
            guards=GuardConfig(
                override=os.getenv("PERMLAB_OVERRIDE_GUARDS", "false").lower() == "true",
            ),
            sampling=SamplingConfig(
                checkpoint_interval=int(os.getenv("PERMLAB_CHECKPOINT", "4096")),
                default_seed=int(os.getenv("PERMLAB_SEED", "12345")),
            ),
            gray_check_interval=int(os.getenv("PERMLAB_GRAY_CHECK", "0")),
            workers=int(os.getenv("PERMLAB_WORKERS", str(defaults.workers))),
            log_level=os.getenv("PERMLAB_LOG_LEVEL", "WARNING").upper(),
        )


# Global settings instance
_settings: Settings | None = None


def get_settings() -> Settings:
    """Get or create the global settings instance."""
    global _settings
    if _settings is None:
        _settings = Settings.from_env()
    return _settings


def configure(settings: Settings) -> None:
    """Configure the global settings (CLI flags and tests)."""
    global _settings
    _settings = settings


def reset_settings() -> None:
    """Reset settings to None (for testing)."""
    global _settings
    _settings = None
