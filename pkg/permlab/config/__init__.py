"""permanent-lab configuration module."""

from permlab.config.settings import (
    GuardConfig,
    SamplingConfig,
    Settings,
    SvdConfig,
    configure,
    get_settings,
    reset_settings,
)

__all__ = [
    "GuardConfig",
    "SamplingConfig",
    "Settings",
    "SvdConfig",
    "configure",
    "get_settings",
    "reset_settings",
]
