"""
@file_name: errors.py
@author: frtlab
@date: 2025-07-02
@description: Exception hierarchy. Check failures are report records, never exceptions;
              these are raised for invalid inputs only.
"""

from typing import Optional


class FrtLabError(Exception):
    """Base class for every frtlab error"""


class DegenerateQ(FrtLabError):
    """q² = 1 or q is a root of unity below the guard bound"""


class DivisionByZero(FrtLabError, ZeroDivisionError):
    pass


class FieldMismatch(FrtLabError):
    """Operands tagged with different fields"""


class DimensionMismatch(FrtLabError):
    pass


class NotDiagonal(FrtLabError):
    pass


class Singular(FrtLabError):
    pass


class NotFreeFermionic(FrtLabError):
    """a1·a2 + b1·b2 != c1·c2"""


class CompositionError(FrtLabError):
    """Two parameters of a slate cannot be composed"""


class DegreeTooLarge(FrtLabError):
    pass


class BasisMismatch(FrtLabError):
    """Coaction data expressed over different graded components"""


class BadEntry(FrtLabError):
    pass


class NoSolution(FrtLabError):
    pass


class WrongCase(FrtLabError):
    """Operation requires a different kernel case of τR(z)"""


class SchemaMismatch(FrtLabError):
    pass


class SlotIndexError(FrtLabError, IndexError):
    pass


class ReportIoError(FrtLabError, OSError):
    pass


class ConfigError(FrtLabError):
    """Invalid run configuration, with the offending key and (for JSON syntax) line"""

    def __init__(self, message: str, key: Optional[str] = None, line: Optional[int] = None):
        self.key = key
        self.line = line
        location = []
        if key:
            location.append(f"key '{key}'")
        if line is not None:
            location.append(f"line {line}")
        suffix = f" ({', '.join(location)})" if location else ""
        super().__init__(f"{message}{suffix}")
