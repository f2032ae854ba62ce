"""
@file_name: __init__.py
@author: frtlab
@date: 2025-07-20
@description: Report and lattice utilities
"""
