"""
@file_name: config.py
@author: frtlab
@date: 2025-07-02
@description: Module level constants shared by every suite
"""

import os

from dotenv import load_dotenv


load_dotenv()

ARTIFACT_VERSION = "frtlab-1.0.0"
REPORT_SCHEMA_VERSION = 1

# Exact arithmetic
DEFAULT_GUARD_BOUND = 64
DEFAULT_DEGREE_CAP = 4
DEFAULT_SEED = 20250702
DEFAULT_Q = "3"
GAUSSIAN_Q = "i"

# Numerators/denominators of sampled generic rationals are drawn from [1, SAMPLE_HEIGHT]
SAMPLE_HEIGHT = 97

# Cap on enumerated weight-cluster unions inside subcomodule search
MAX_CLUSTER_UNIONS = 64

SUITE_NAMES = ("ybe", "frt", "duality", "slqhat", "aff")

DEFAULT_SAMPLES = {
    "ybe": 50,
    "gamma": 100,
    "frt": 3,
    "duality": 3,
    "slqhat": 3,
    "aff": 3,
    "reduce_controls": 5,
}

LOG_DIR = os.getenv("FRTLAB_LOG_DIR", "logs")
