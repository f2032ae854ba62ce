"""
Command-line parameter parsing
Exact scalar lists and Γ elements from JSON text
"""

import json
from typing import Any, List, Sequence

from src.frt_lab.algebra.rmatrix_zoo import gamma_from_weights
from src.frt_lab.algebra.scalar_field import ScalarField, parse_scalar
from src.frt_lab.core.errors import ConfigError, FrtLabError
from src.frt_lab.models.rmatrix_models import GammaElement

WEIGHT_NAMES = ("a1", "a2", "b1", "b2", "c1", "c2")


def load_json_list(text: str, key: str = "points") -> List[Any]:
    try:
        value = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigError(f"invalid JSON: {e.msg}", key=key) from e
    if not isinstance(value, list) or not value:
        raise ConfigError("expected a non-empty JSON list", key=key)
    return value


def parse_scalar_points(items: Sequence[Any], field: ScalarField, key: str = "points") -> List[Any]:
    """["2", "1/3", ...] -> exact scalars"""
    try:
        return [parse_scalar(str(item), field, require_lowest_terms=True) for item in items]
    except FrtLabError as e:
        raise ConfigError(str(e), key=key) from e


def parse_gamma_points(items: Sequence[Any], field: ScalarField, key: str = "points") -> List[GammaElement]:
    """Each item is {"a1": ..., ..., "c2": ...} or a list of the six weights in that order"""
    points = []
    for k, item in enumerate(items):
        if isinstance(item, dict):
            missing = [n for n in WEIGHT_NAMES if n not in item]
            if missing:
                raise ConfigError(f"point {k} lacks weights {missing}", key=key)
            values = [item[n] for n in WEIGHT_NAMES]
        elif isinstance(item, list) and len(item) == len(WEIGHT_NAMES):
            values = item
        else:
            raise ConfigError(f"point {k} is neither a weight object nor a list of six weights", key=key)
        try:
            weights = [parse_scalar(str(v), field, require_lowest_terms=True) for v in values]
            points.append(gamma_from_weights(*weights))
        except FrtLabError as e:
            raise ConfigError(f"point {k}: {e}", key=key) from e
    return points
