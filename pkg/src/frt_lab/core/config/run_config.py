"""
@file_name: run_config.py
@author: frtlab
@date: 2025-07-15
@description: Run configuration: the only input that affects report content
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, ValidationInfo, field_validator

from src.frt_lab.algebra.scalar_field import QSpecialization, get_field, parse_scalar
from src.frt_lab.core.config.config import (
    DEFAULT_DEGREE_CAP,
    DEFAULT_GUARD_BOUND,
    DEFAULT_Q,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    GAUSSIAN_Q,
    SUITE_NAMES,
)
from src.frt_lab.core.errors import ConfigError, FrtLabError
from src.frt_lab.models.rmatrix_models import RFamily


def _parse_q(text: str, field_tag: str, guard_bound: int) -> QSpecialization:
    """Exact, lowest terms, and generic unless it is ±i in Gaussian mode"""
    scalar_field = get_field(field_tag)
    try:
        parse_scalar(text, scalar_field, require_lowest_terms=True)
        return QSpecialization.from_string(text, scalar_field, guard_bound)
    except FrtLabError as e:
        raise ValueError(str(e)) from e


class RunConfig(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    field: str = Field(default="rational", description="scalar field tag: rational or gaussian")
    guard_bound: int = Field(default=DEFAULT_GUARD_BOUND, ge=2)
    q: Optional[str] = Field(default=None, description="exact q; defaults per field")
    seed: int = Field(default=DEFAULT_SEED, description="seed of every sampler")
    samples: Dict[str, int] = Field(default_factory=lambda: dict(DEFAULT_SAMPLES),
                                    description="sample counts per suite")
    degree_cap: int = Field(default=DEFAULT_DEGREE_CAP, ge=1, le=6)
    suites: List[str] = Field(default_factory=lambda: list(SUITE_NAMES))
    family: Optional[str] = Field(default=None, description="restrict the ybe suite to one family")
    output: Optional[str] = Field(default=None, description="report path; stdout when absent")
    format: str = Field(default="json")

    @field_validator("field")
    @classmethod
    def _known_field(cls, value: str) -> str:
        value = value.lower()
        if value not in ("rational", "gaussian"):
            raise ValueError(f"unknown field '{value}'")
        return value

    @field_validator("samples")
    @classmethod
    def _known_samples(cls, value: Dict[str, int]) -> Dict[str, int]:
        unknown = sorted(set(value) - set(DEFAULT_SAMPLES))
        if unknown:
            raise ValueError(f"unknown sample keys {unknown}")
        if any(v < 1 for v in value.values()):
            raise ValueError("sample counts must be positive")
        merged = dict(DEFAULT_SAMPLES)
        merged.update(value)
        return merged

    @field_validator("suites")
    @classmethod
    def _known_suites(cls, value: List[str]) -> List[str]:
        unknown = [s for s in value if s not in SUITE_NAMES]
        if unknown:
            raise ValueError(f"unknown suites {unknown}")
        if not value:
            raise ValueError("at least one suite is required")
        return [s for s in SUITE_NAMES if s in value]

    @field_validator("family")
    @classmethod
    def _known_family(cls, value: Optional[str]) -> Optional[str]:
        if value is None:
            return value
        try:
            return RFamily.from_string(value).value
        except FrtLabError as e:
            raise ValueError(str(e)) from e

    @field_validator("format")
    @classmethod
    def _known_format(cls, value: str) -> str:
        if value not in ("json", "markdown"):
            raise ValueError(f"unknown report format '{value}'")
        return value

    @field_validator("q")
    @classmethod
    def _exact_q(cls, value: Optional[str], info: ValidationInfo) -> Optional[str]:
        if value is None or "field" not in info.data or "guard_bound" not in info.data:
            return value
        _parse_q(value, info.data["field"], info.data["guard_bound"])
        return value

    @property
    def q_text(self) -> str:
        if self.q is not None:
            return self.q
        return GAUSSIAN_Q if self.field == "gaussian" else DEFAULT_Q

    def q_spec(self) -> QSpecialization:
        return _parse_q(self.q_text, self.field, self.guard_bound)

    def sample_count(self, key: str) -> int:
        return self.samples[key]

    def echo(self) -> Dict[str, Any]:
        """Config as written into reports; output path excluded"""
        data = self.model_dump(exclude={"output"})
        data["q"] = self.q_text
        return data


def _line_of_key(text: str, key: str) -> Optional[int]:
    needle = f'"{key}"'
    for number, line in enumerate(text.splitlines(), start=1):
        if needle in line:
            return number
    return None


def load_run_config(path: Optional[str] = None, overrides: Optional[Dict[str, Any]] = None) -> RunConfig:
    """
    Read a JSON run configuration and apply command-line overrides

    Args:
        path: JSON file; defaults only when None
        overrides: keys replacing file values; None values are ignored

    Returns:
        Validated RunConfig

    Raises:
        ConfigError: unreadable file, JSON syntax error or invalid key, with key/line where known
    """
    data: Dict[str, Any] = {}
    text = ""
    if path is not None:
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as e:
            raise ConfigError(f"cannot read config {path}: {e}") from e
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ConfigError(f"invalid JSON: {e.msg}", line=e.lineno) from e
        if not isinstance(data, dict):
            raise ConfigError("config root must be a JSON object", line=1)

    for key, value in (overrides or {}).items():
        if value is None:
            continue
        if key == "samples":
            merged = dict(data.get("samples", {}))
            merged.update(value)
            value = merged
        data[key] = value

    try:
        return RunConfig(**data)
    except ValidationError as e:
        error = e.errors()[0]
        key = ".".join(str(part) for part in error["loc"]) or None
        top = str(error["loc"][0]) if error["loc"] else None
        line = _line_of_key(text, top) if (text and top) else None
        raise ConfigError(error["msg"], key=key, line=line) from e
