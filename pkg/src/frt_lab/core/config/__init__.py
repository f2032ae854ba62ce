from .config import (
    ARTIFACT_VERSION,
    DEFAULT_DEGREE_CAP,
    DEFAULT_GUARD_BOUND,
    DEFAULT_Q,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    GAUSSIAN_Q,
    LOG_DIR,
    MAX_CLUSTER_UNIONS,
    REPORT_SCHEMA_VERSION,
    SAMPLE_HEIGHT,
    SUITE_NAMES,
)

__all__ = [
    "ARTIFACT_VERSION",
    "DEFAULT_DEGREE_CAP",
    "DEFAULT_GUARD_BOUND",
    "DEFAULT_Q",
    "DEFAULT_SAMPLES",
    "DEFAULT_SEED",
    "GAUSSIAN_Q",
    "LOG_DIR",
    "MAX_CLUSTER_UNIONS",
    "REPORT_SCHEMA_VERSION",
    "SAMPLE_HEIGHT",
    "SUITE_NAMES",
]
