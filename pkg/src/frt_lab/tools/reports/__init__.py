"""
@file_name: __init__.py
@author: frtlab
@date: 2025-07-20
@description: Report rendering, loading and diffing
"""

from .report_writer import diff_reports, emit_report, load_report, render_json, render_markdown

__all__ = ["diff_reports", "emit_report", "load_report", "render_json", "render_markdown"]
