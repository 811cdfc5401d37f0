"""
Runtime settings for coxeterkit.

Settings come from three places, later ones winning: the dataclass defaults,
an optional plain ``key = value`` file (path from the argument or the
``COXETERKIT_CONFIG`` environment variable), and the ``COXETERKIT_CATALOG``
environment variable for the catalog directory.
"""

import logging
import os
from contextlib import contextmanager
from dataclasses import dataclass, fields, replace
from typing import Iterator, Optional

from .exceptions import ValidationError

logger = logging.getLogger(__name__)

CONFIG_ENV_VAR = "COXETERKIT_CONFIG"
CATALOG_ENV_VAR = "COXETERKIT_CATALOG"

TEST_TIERS = ("fast", "large")


@dataclass(frozen=True)
class Settings:
    """Tolerances, caps and tiers shared by all modules.

    Attributes:
    -----------
    algebraic_tol : float
        Relative tolerance for algebraic identities (signatures, Gram checks).
    dedup_tol : float
        Absolute tolerance for identifying two points.
    orbit_cap : int
        Largest orbit any closure may produce before failing.
    test_tier : str
        Tier run by ``verify --suite acceptance`` ("fast" or "large").
    catalog_dir : str, optional
        Directory holding the family catalogs; the bundled one when None.
    max_seed_dimension : int
        Largest n accepted by the seed-vector constructions.
    """
    algebraic_tol: float = 1e-9
    dedup_tol: float = 1e-7
    orbit_cap: int = 1_000_000
    test_tier: str = "fast"
    catalog_dir: Optional[str] = None
    max_seed_dimension: int = 8

    def __post_init__(self):
        if self.algebraic_tol <= 0 or self.dedup_tol <= 0:
            raise ValidationError("Tolerances must be positive.")
        if self.orbit_cap < 1:
            raise ValidationError("orbit_cap must be at least 1.")
        if self.test_tier not in TEST_TIERS:
            raise ValidationError(f"Unknown test tier '{self.test_tier}'. "
                                  f"Choose one of: {', '.join(TEST_TIERS)}")


def _coerce(name: str, raw: str):
    """Convert a raw config value to the type of the named field."""
    field_types = {f.name: f.type for f in fields(Settings)}
    if name not in field_types:
        raise ValidationError(f"Unknown setting '{name}'")
    value = raw.strip()
    if name in ("algebraic_tol", "dedup_tol"):
        return float(value)
    if name in ("orbit_cap", "max_seed_dimension"):
        return int(float(value))
    if name == "catalog_dir":
        return value or None
    return value


def load_settings(path: Optional[str] = None) -> Settings:
    """
    Build settings from defaults, a config file and the environment.

    Parameters:
    -----------
    path : str, optional
        Config file path. Falls back to the COXETERKIT_CONFIG variable.

    Returns:
    --------
    Settings
        The resulting settings.

    Raises:
    -------
    ValidationError
        If the file contains unknown keys or malformed values.
    """
    values = {}
    path = path or os.environ.get(CONFIG_ENV_VAR)
    if path:
        if not os.path.exists(path):
            raise ValidationError(f"Config file does not exist: {path}")
        with open(path, "r", encoding="utf-8") as handle:
            for number, line in enumerate(handle, start=1):
                line = line.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise ValidationError(f"{path}:{number}: expected 'key = value'")
                key, raw = line.split("=", 1)
                try:
                    values[key.strip()] = _coerce(key.strip(), raw)
                except ValueError as e:
                    raise ValidationError(f"{path}:{number}: {e}") from e
        logger.debug("Loaded settings from %s: %s", path, values)

    catalog = os.environ.get(CATALOG_ENV_VAR)
    if catalog:
        values["catalog_dir"] = catalog

    return Settings(**values)


_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """Return the process-wide settings, loading them on first use."""
    global _settings
    if _settings is None:
        _settings = load_settings()
    return _settings


def set_settings(settings: Optional[Settings]) -> None:
    """Replace the process-wide settings (None forces a reload on next use)."""
    global _settings
    _settings = settings


@contextmanager
def override_settings(**overrides) -> Iterator[Settings]:
    """Temporarily replace individual settings.

    None values are ignored, so CLI flags can be passed through unchanged.
    """
    previous = get_settings()
    active = replace(previous, **{k: v for k, v in overrides.items() if v is not None})
    set_settings(active)
    try:
        yield active
    finally:
        set_settings(previous)
