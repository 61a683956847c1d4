"""Load simulation grids from YAML files or flat key = value files."""

import itertools
import logging
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import yaml

from ..errors import ConfigError
from ..models.pvalues import MarginalModelKind, PValueKind
from ..models.simulation import SimulationSetting
from .models import EngineConfig

logger = logging.getLogger(__name__)

# Grid axes in the order they vary in the product (last varies fastest)
AXIS_ORDER = ("gamma", "pi0", "mu_pairs", "mu_min", "mu_max", "m", "s", "n", "p0", "p1", "lambda")

INT_KEYS = {"m", "s", "gamma", "n", "seed", "reps"}
FLOAT_KEYS = {"pi0", "mu_min", "mu_max", "p0", "p1", "lambda"}
SCALAR_KEYS = {"seed", "reps", "model", "observations"}
META_KEYS = {"name", "description"}
SETTING_KEYS = INT_KEYS | FLOAT_KEYS | SCALAR_KEYS | {"pvalue_kinds", "mu_pairs"}


@dataclass
class GridDefinition:
    """A named grid of simulation settings as read from YAML."""
    name: str
    description: str = ""
    entries: Dict[str, Any] = field(default_factory=dict)
    source: Optional[Path] = None

    def settings(self, engine: Optional[EngineConfig] = None) -> List[SimulationSetting]:
        """Expand the grid into settings; seed and reps fall back to ``engine``."""
        return expand_grid(self.entries, engine)


def _as_list(key: str, value: Any) -> List[Any]:
    if isinstance(value, str):
        items = [item.strip() for item in value.split(",")]
        if any(item == "" for item in items):
            raise ConfigError(f"empty element in list for key '{key}'")
        return items
    if isinstance(value, (list, tuple)):
        return list(value)
    return [value]


def _convert(key: str, value: Any) -> Any:
    try:
        if key in INT_KEYS:
            if isinstance(value, bool):
                raise ValueError
            if isinstance(value, int):
                return value
            if isinstance(value, str):
                return int(value.strip())
            if float(value) != int(value):
                raise ValueError
            return int(value)
        if key in FLOAT_KEYS:
            if isinstance(value, bool):
                raise ValueError
            return float(value)
    except (TypeError, ValueError):
        raise ConfigError(f"invalid value for '{key}': {value!r}") from None
    return value


def _mu_pair(value: Any) -> tuple:
    if isinstance(value, str):
        value = [part for part in value.replace("(", "").replace(")", "").split(":")]
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise ConfigError(f"mu_pairs entries must be [mu_min, mu_max] pairs, got {value!r}")
    return (_convert("mu_min", value[0]), _convert("mu_max", value[1]))


def _parse_bool(value: Any) -> bool:
    if isinstance(value, bool):
        return value
    text = str(value).strip().lower()
    if text in ("true", "yes", "1"):
        return True
    if text in ("false", "no", "0"):
        return False
    raise ConfigError(f"invalid boolean for 'observations': {value!r}")


def expand_grid(entries: Dict[str, Any], engine: Optional[EngineConfig] = None) -> List[SimulationSetting]:
    """
    Cartesian product of all list-valued axes.

    Scalars fix a field; lists (YAML sequences or comma-separated strings)
    become axes. ``mu_pairs`` varies mu_min and mu_max together.
    """
    unknown = set(entries) - SETTING_KEYS - META_KEYS
    if unknown:
        raise ConfigError(f"unknown grid keys: {', '.join(sorted(unknown))}")
    if "mu_pairs" in entries and ({"mu_min", "mu_max"} & set(entries)):
        raise ConfigError("mu_pairs cannot be combined with mu_min or mu_max")
    engine = engine or EngineConfig()

    fixed: Dict[str, Any] = {
        "seed": _convert("seed", entries.get("seed", engine.seed)),
        "reps": _convert("reps", entries.get("reps", engine.reps)),
    }
    if "model" in entries:
        try:
            fixed["model"] = MarginalModelKind(str(entries["model"]).lower())
        except ValueError:
            raise ConfigError(f"unknown model: {entries['model']!r}") from None
    if "observations" in entries:
        fixed["observations"] = _parse_bool(entries["observations"])
    if "pvalue_kinds" in entries:
        try:
            fixed["pvalue_kinds"] = tuple(
                PValueKind(str(kind).strip().lower())
                for kind in _as_list("pvalue_kinds", entries["pvalue_kinds"])
            )
        except ValueError:
            raise ConfigError(f"unknown p-value kind in {entries['pvalue_kinds']!r}") from None

    axes: List[List[Dict[str, Any]]] = []
    for key in AXIS_ORDER:
        if key not in entries:
            continue
        values = _as_list(key, entries[key])
        if not values:
            raise ConfigError(f"grid axis '{key}' is empty")
        if key == "mu_pairs":
            if values and not isinstance(values[0], (list, tuple, str)):
                values = [values]
            pairs = [_mu_pair(v) for v in values]
            axes.append([{"mu_min": lo, "mu_max": hi} for lo, hi in pairs])
        else:
            field_name = "lambda_" if key == "lambda" else key
            axes.append([{field_name: _convert(key, v)} for v in values])

    settings = []
    for combination in itertools.product(*axes):
        kwargs = dict(fixed)
        for part in combination:
            kwargs.update(part)
        settings.append(SimulationSetting(**kwargs))
    return settings


# "key = value" at the start of a line; a YAML line has its colon first
FLAT_LINE = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_]*)\s*=(.*)$")


def _is_flat(text: str) -> bool:
    lines = [line for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")]
    return bool(lines) and all(FLAT_LINE.match(line) for line in lines)


def parse_flat_lines(text: str, source: Union[str, Path] = "<string>") -> Dict[str, Any]:
    """
    Parse flat ``key = value`` lines.

    Values stay strings; list values are comma-separated and are split by
    ``expand_grid``. Blank lines and lines starting with ``#`` are skipped.
    """
    data: Dict[str, Any] = {}
    for number, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        match = FLAT_LINE.match(line)
        if match is None:
            raise ConfigError(f"{source}:{number}: expected 'key = value', got {line.strip()!r}")
        key, value = match.group(1), match.group(2).strip().strip("\"'")
        if key in data:
            raise ConfigError(f"{source}:{number}: duplicate key '{key}'")
        if not value:
            raise ConfigError(f"{source}:{number}: empty value for '{key}'")
        data[key] = value
    return data


def read_grid_file(path: Union[str, Path]) -> GridDefinition:
    """Read one grid file: a YAML mapping, or flat ``key = value`` lines."""
    grid_path = Path(path)
    if not grid_path.exists():
        raise FileNotFoundError(f"Grid file not found: {grid_path}")
    text = grid_path.read_text(encoding="utf-8")
    if grid_path.suffix == ".cfg" or _is_flat(text):
        data = parse_flat_lines(text, grid_path)
    else:
        try:
            data = yaml.safe_load(text) or {}
        except yaml.YAMLError as e:
            raise ConfigError(f"{grid_path}: invalid YAML: {e}") from None
    if not isinstance(data, dict):
        raise ConfigError(f"{grid_path}: a grid file must be a mapping of keys to values")

    definition = GridDefinition(
        name=str(data.get("name", grid_path.stem)),
        description=str(data.get("description", "")),
        entries={k: v for k, v in data.items() if k not in META_KEYS},
        source=grid_path,
    )
    # Fail on unknown keys at load time, not at first use
    unknown = set(definition.entries) - SETTING_KEYS
    if unknown:
        raise ConfigError(f"{grid_path}: unknown grid keys: {', '.join(sorted(unknown))}")
    logger.debug("Loaded grid %s from %s", definition.name, grid_path)
    return definition
