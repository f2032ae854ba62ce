"""
@file_name: __init__.py
@author: frtlab
@date: 2025-07-02
@description: frtlab - exact verification of parametrized Yang-Baxter solutions,
              parametrized FRT bialgebras and their comodules
"""

__version__ = "1.0.0"
