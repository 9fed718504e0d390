"""Plain key-value config files for the generator.

One ``key = value`` pair per line; ``#`` starts a comment. Lists are
whitespace-separated. Example::

    n = 200
    d = 2
    seed = 7
    percentiles = 1 5 9 13
    phi = power_law          # or explicit: 0.25 0.11 0.06 0.04
    alpha = 10
    gamma = median

``phi`` may name a preset or give explicit per-size values for sizes
``2..k_max``. A leading size-1 entry (one more value than there are
percentiles) is accepted and dropped: singletons contribute nothing
after clique expansion. ``r1``/``phi1`` keys are ignored the same way.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path

from .latent import DEFAULT_HOFF_ALPHA, DEFAULT_MAX_POTENTIAL, PHI_PRESETS

logger = logging.getLogger(__name__)

_IGNORED_KEYS = {"r1", "phi1"}


class ConfigError(ValueError):
    """Config validation failure; the message carries the line number."""


@dataclass
class ModelConfig:
    n: int
    d: int = 2
    seed: int = 0
    percentiles: tuple[float, ...] = (1.0, 5.0, 9.0, 13.0)
    phi: tuple[float, ...] | str = "power_law"
    alpha: float = DEFAULT_HOFF_ALPHA
    gamma: float | None = None  # None means: median pairwise distance
    max_potential: int = DEFAULT_MAX_POTENTIAL
    replicates: int = 1
    n_list: tuple[int, ...] = field(default_factory=tuple)  # scan grids only
    d_list: tuple[int, ...] = field(default_factory=tuple)

    @property
    def k_max(self) -> int:
        return len(self.percentiles) + 1


def _parse_floats(raw: str, key: str, lineno: int) -> tuple[float, ...]:
    try:
        return tuple(float(tok) for tok in raw.split())
    except ValueError:
        raise ConfigError(f"line {lineno}: {key} expects numbers, got {raw!r}") from None


def _parse_int(raw: str, key: str, lineno: int) -> int:
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"line {lineno}: {key} expects an integer, got {raw!r}") from None


def parse_model_config(text: str) -> ModelConfig:
    """Parse config text; raises :class:`ConfigError` with a line number
    on the first invalid entry."""
    values: dict = {}
    lines: dict[str, int] = {}
    for lineno, line in enumerate(text.split("\n"), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        if "=" not in body:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {body!r}")
        key, raw = (part.strip() for part in body.split("=", 1))
        key = key.lower()
        if key in _IGNORED_KEYS:
            logger.warning("line %d: %s is ignored (size-1 entries are unused)", lineno, key)
            continue
        if key in values:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        lines[key] = lineno
        if key in ("n", "d"):
            tokens = raw.replace(",", " ").split()
            if not tokens:
                raise ConfigError(f"line {lineno}: {key} needs at least one value")
            ints = tuple(_parse_int(t, key, lineno) for t in tokens)
            values[key] = ints[0]
            if len(ints) > 1:
                values[key + "_list"] = ints
        elif key in ("seed", "max_potential", "replicates"):
            values[key] = _parse_int(raw, key, lineno)
        elif key == "percentiles":
            values[key] = _parse_floats(raw, key, lineno)
        elif key == "phi":
            if raw in PHI_PRESETS:
                values[key] = raw
            else:
                values[key] = _parse_floats(raw, key, lineno)
        elif key == "alpha":
            values[key] = float(raw)
        elif key == "gamma":
            values[key] = None if raw == "median" else float(raw)
        else:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")

    if "n" not in values:
        raise ConfigError("missing required key 'n'")
    cfg = ModelConfig(**values)

    pct_line = lines.get("percentiles", 0)
    if len(cfg.percentiles) == 0:
        raise ConfigError(f"line {pct_line}: percentiles must be nonempty")
    diffs = [b - a for a, b in zip(cfg.percentiles, cfg.percentiles[1:])]
    if any(d <= 0 for d in diffs):
        raise ConfigError(
            f"line {pct_line}: percentiles must be strictly increasing, "
            f"got {list(cfg.percentiles)}"
        )
    if isinstance(cfg.phi, tuple):
        phi_line = lines.get("phi", 0)
        if len(cfg.phi) == cfg.k_max:
            logger.warning(
                "line %d: phi has a size-1 entry; dropping it", phi_line
            )
            cfg.phi = cfg.phi[1:]
        if len(cfg.phi) != cfg.k_max - 1:
            raise ConfigError(
                f"line {phi_line}: phi needs {cfg.k_max - 1} values for sizes "
                f"2..{cfg.k_max}, got {len(cfg.phi)}"
            )
        if any(not (0 <= x <= 1) for x in cfg.phi):
            raise ConfigError(f"line {phi_line}: phi values must lie in [0, 1]")
    for value, low, key in ((cfg.n, 2, "n"), (cfg.d, 1, "d")):
        if value < low:
            raise ConfigError(f"line {lines.get(key, 0)}: {key} must be >= {low}, got {value}")
    for extra in cfg.n_list:
        if extra < 2:
            raise ConfigError(f"line {lines.get('n', 0)}: n values must be >= 2")
    for extra in cfg.d_list:
        if extra < 1:
            raise ConfigError(f"line {lines.get('d', 0)}: d values must be >= 1")
    if cfg.replicates < 0:
        raise ConfigError(f"line {lines.get('replicates', 0)}: replicates must be >= 0")
    return cfg


def load_model_config(path) -> ModelConfig:
    return parse_model_config(Path(path).read_text())
