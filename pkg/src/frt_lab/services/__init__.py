"""
@file_name: __init__.py
@author: frtlab
@date: 2025-07-20
@description: One suite per CLI verb and the runner assembling their reports
"""

from .suite_runner import SUITES, SuiteRunner

__all__ = ["SUITES", "SuiteRunner"]
