"""
@file_name: __main__.py
@author: frtlab
@date: 2025-07-20
@description: python -m src.frt_lab entry point
"""

from src.frt_lab.cli import main

if __name__ == "__main__":
    main()
