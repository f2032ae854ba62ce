"""
@file_name: scalar_field.py
@author: frtlab
@date: 2025-07-03
@description: Exact scalars over QQ and QQ(i), quantum integers and binomials,
              seeded generic-point sampling
"""

import math
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Iterable, List, Optional, Sequence

import numpy as np
from sympy import QQ, QQ_I

from src.frt_lab.core.config import DEFAULT_GUARD_BOUND, SAMPLE_HEIGHT
from src.frt_lab.core.errors import (
    BadEntry,
    DegenerateQ,
    DivisionByZero,
    FieldMismatch,
    SlotIndexError,
)

# A scalar is a sympy domain element: gmpy2/PythonMPQ for QQ, GaussianRational for QQ_I
Scalar = Any

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:/(\d+))?\s*$")
_GAUSSIAN_RE = re.compile(
    r"^\s*\(?\s*([+-]?\d+(?=[+-]))?([+-]?\d*)i\s*\)?(?:/(\d+))?\s*$"
)
_GAUSSIAN_PAREN_RE = re.compile(r"^\s*\((.+)\)\s*/\s*(\d+)\s*$")


class FieldTag(Enum):
    """Base field of a run"""

    RATIONAL = "rational"
    GAUSSIAN = "gaussian"

    @classmethod
    def from_string(cls, value: str) -> "FieldTag":
        for tag in cls:
            if tag.value == value.lower():
                return tag
        raise BadEntry(f"unknown field tag '{value}'")


@dataclass(frozen=True)
class ScalarField:
    """One of the two exact fields; wraps the matching sympy domain"""

    tag: FieldTag

    @property
    def domain(self):
        return QQ if self.tag is FieldTag.RATIONAL else QQ_I

    @property
    def zero(self) -> Scalar:
        return self.domain.zero

    @property
    def one(self) -> Scalar:
        return self.domain.one

    @property
    def imaginary_unit(self) -> Scalar:
        if self.tag is not FieldTag.GAUSSIAN:
            raise FieldMismatch("i is not an element of QQ")
        return QQ_I(0, 1)

    def owns(self, x: Scalar) -> bool:
        return self.domain.of_type(x)

    def convert(self, x: Any) -> Scalar:
        """Bring an int, Fraction, string or same-field element into this field"""
        if isinstance(x, str):
            return parse_scalar(x, self)
        if isinstance(x, bool):
            raise BadEntry("booleans are not scalars")
        if isinstance(x, int):
            return self.domain(x)
        if isinstance(x, Fraction):
            if self.tag is FieldTag.RATIONAL:
                return QQ(x.numerator, x.denominator)
            return QQ_I(QQ(x.numerator, x.denominator), 0)
        if self.owns(x):
            return x
        other = GAUSSIAN if self.tag is FieldTag.RATIONAL else RATIONAL
        if other.owns(x):
            raise FieldMismatch(f"{format_scalar(x)} belongs to {other.tag.value}, not {self.tag.value}")
        raise BadEntry(f"cannot convert {x!r} to a scalar")

    def from_ints(self, numerator: int, denominator: int = 1, imag: int = 0) -> Scalar:
        if denominator == 0:
            raise DivisionByZero("zero denominator")
        if self.tag is FieldTag.RATIONAL:
            if imag:
                raise FieldMismatch("nonzero imaginary part in rational mode")
            return QQ(numerator, denominator)
        return QQ_I(QQ(numerator, denominator), QQ(imag, denominator))

    def is_zero(self, x: Scalar) -> bool:
        return not x

    def parse(self, text: str, require_lowest_terms: bool = False) -> Scalar:
        return parse_scalar(text, self, require_lowest_terms)

    def format(self, x: Scalar) -> str:
        return format_scalar(x)


RATIONAL = ScalarField(FieldTag.RATIONAL)
GAUSSIAN = ScalarField(FieldTag.GAUSSIAN)


def get_field(tag) -> ScalarField:
    if isinstance(tag, str):
        tag = FieldTag.from_string(tag)
    return RATIONAL if tag is FieldTag.RATIONAL else GAUSSIAN


def field_of(x: Scalar) -> ScalarField:
    if QQ_I.of_type(x):
        return GAUSSIAN
    if QQ.of_type(x):
        return RATIONAL
    raise BadEntry(f"{x!r} is not an exact scalar")


def same_field(*values: Scalar) -> ScalarField:
    """Common field of the arguments; FieldMismatch when they disagree"""
    fields = {field_of(v).tag for v in values}
    if len(fields) > 1:
        raise FieldMismatch("operands belong to different fields")
    return get_field(fields.pop()) if fields else RATIONAL


# ----------------------------------------------------------------------
# String codec
# ----------------------------------------------------------------------

def _rational_text(value) -> str:
    num, den = int(value.numerator), int(value.denominator)
    return f"{num}" if den == 1 else f"{num}/{den}"


def format_scalar(x: Scalar) -> str:
    """'p/q' for rationals, 'a+bi' or '(a+bi)/q' for Gaussian rationals"""
    if QQ.of_type(x):
        return _rational_text(x)
    if not QQ_I.of_type(x):
        raise BadEntry(f"{x!r} is not an exact scalar")
    re_part, im_part = x.x, x.y
    if not im_part:
        return _rational_text(re_part)
    den = math.lcm(int(re_part.denominator), int(im_part.denominator))
    a = int(re_part * den)
    b = int(im_part * den)
    if b == 1:
        imag = "i"
    elif b == -1:
        imag = "-i"
    else:
        imag = f"{b}i"
    body = imag if a == 0 else f"{a}{'+' if b > 0 else ''}{imag}"
    if den == 1:
        return body
    return f"({body})/{den}"


def _check_lowest(num: int, den: int, text: str, require_lowest_terms: bool) -> None:
    if den == 0:
        raise DivisionByZero(f"zero denominator in '{text}'")
    if require_lowest_terms and math.gcd(num, den) != 1:
        raise BadEntry(f"'{text}' is not in lowest terms")


def parse_scalar(text: str, field: ScalarField = RATIONAL, require_lowest_terms: bool = False) -> Scalar:
    """Inverse of format_scalar; 'i' forms are accepted only in Gaussian mode"""
    match = _RATIONAL_RE.match(text)
    if match:
        num = int(match.group(1))
        den = int(match.group(2)) if match.group(2) else 1
        _check_lowest(num, den, text, require_lowest_terms)
        return field.from_ints(num, den)

    if "i" not in text:
        raise BadEntry(f"cannot parse scalar '{text}'")
    if field.tag is not FieldTag.GAUSSIAN:
        raise FieldMismatch(f"'{text}' is Gaussian but the run field is rational")

    den = 1
    body = text
    paren = _GAUSSIAN_PAREN_RE.match(text)
    if paren:
        body, den = paren.group(1), int(paren.group(2))
    match = _GAUSSIAN_RE.match(body)
    if not match:
        raise BadEntry(f"cannot parse scalar '{text}'")
    real = int(match.group(1)) if match.group(1) else 0
    imag_text = match.group(2)
    if imag_text in ("", "+"):
        imag = 1
    elif imag_text == "-":
        imag = -1
    else:
        imag = int(imag_text)
    if match.group(3):
        den = int(match.group(3))
    if require_lowest_terms and den != 1 and math.gcd(real, imag, den) != 1:
        raise BadEntry(f"'{text}' is not in lowest terms")
    return field.from_ints(real, den, imag)


# ----------------------------------------------------------------------
# Arithmetic helpers
# ----------------------------------------------------------------------

def inv(x: Scalar) -> Scalar:
    if not x:
        raise DivisionByZero("inverse of zero")
    return x ** -1


def spow(x: Scalar, n: int) -> Scalar:
    """x**n for any integer n"""
    if n < 0 and not x:
        raise DivisionByZero("negative power of zero")
    if n == 0:
        return field_of(x).one
    return x ** n


def q_int(n: int, q: Scalar) -> Scalar:
    """Quantum integer [n]_q = (q^n - q^-n)/(q - q^-1)"""
    field = field_of(q)
    if not q:
        raise DegenerateQ("q = 0")
    denominator = q - inv(q)
    if not denominator:
        raise DegenerateQ("q^2 = 1")
    return (spow(q, n) - spow(q, -n)) * inv(denominator) if n else field.zero


def q_factorial(n: int, q: Scalar) -> Scalar:
    if n < 0:
        raise SlotIndexError(f"negative factorial argument {n}")
    result = field_of(q).one
    for k in range(1, n + 1):
        result = result * q_int(k, q)
    return result


def q_binomial(n: int, m: int, q: Scalar) -> Scalar:
    """Factorial q-binomial [n]!/([m]![n-m]!)"""
    if m < 0 or m > n:
        raise SlotIndexError(f"q_binomial({n}, {m}) out of range")
    return q_factorial(n, q) * inv(q_factorial(m, q) * q_factorial(n - m, q))


def is_q_power(x: Scalar, q: Scalar, guard: int = DEFAULT_GUARD_BOUND) -> bool:
    """x = ±q^m for some |m| <= guard"""
    power = field_of(q).one
    q_inv = inv(q)
    up, down = power, power
    for _ in range(guard + 1):
        if x == up or x == -up or x == down or x == -down:
            return True
        up = up * q
        down = down * q_inv
    return False


# ----------------------------------------------------------------------
# Specializations and sampling
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class QSpecialization:
    """An exact value of q; generic unless built through free_fermionic"""

    q: Scalar
    guard_bound: int = DEFAULT_GUARD_BOUND
    generic: bool = True

    def __post_init__(self):
        if not self.q:
            raise DegenerateQ("q = 0")
        if self.q * self.q == field_of(self.q).one:
            raise DegenerateQ("q^2 = 1")
        if self.generic:
            power = field_of(self.q).one
            for m in range(1, self.guard_bound + 1):
                power = power * self.q
                if power == field_of(self.q).one:
                    raise DegenerateQ(f"q^{m} = 1 is within the guard bound {self.guard_bound}")

    @property
    def field(self) -> ScalarField:
        return field_of(self.q)

    @classmethod
    def from_string(cls, text: str, field: ScalarField = RATIONAL,
                    guard_bound: int = DEFAULT_GUARD_BOUND) -> "QSpecialization":
        q = parse_scalar(text, field)
        if field.tag is FieldTag.GAUSSIAN and q * q == -field.one:
            return cls(q, guard_bound, generic=False)
        return cls(q, guard_bound)

    @classmethod
    def free_fermionic(cls, sign: int = 1) -> "QSpecialization":
        """q = ±i; only q^2 != 1 is required at this point"""
        if sign not in (1, -1):
            raise BadEntry("sign must be +1 or -1")
        return cls(QQ_I(0, sign), generic=False)

    def __str__(self) -> str:
        return format_scalar(self.q)


class ScalarSampler:
    """Caller-owned seeded source of generic nonzero rationals"""

    def __init__(self, seed: int, field: ScalarField = RATIONAL,
                 q: Optional[Scalar] = None, guard_bound: int = DEFAULT_GUARD_BOUND,
                 height: int = SAMPLE_HEIGHT):
        self.seed = seed
        self.field = field
        self.q = q
        self.guard_bound = guard_bound
        self.height = height
        self._rng = np.random.default_rng(seed)

    def _draw(self) -> Scalar:
        num = int(self._rng.integers(1, self.height + 1))
        den = int(self._rng.integers(1, self.height + 1))
        if self._rng.integers(0, 2):
            num = -num
        return self.field.from_ints(num, den)

    def generic(self, avoid: Iterable[Scalar] = ()) -> Scalar:
        """Nonzero rational outside avoid and away from ±q^m, |m| <= guard"""
        avoid = list(avoid)
        while True:
            x = self._draw()
            if not x or any(x == a for a in avoid):
                continue
            if x == self.field.one or x == -self.field.one:
                continue
            if self.q is not None and is_q_power(x, self.q, self.guard_bound):
                continue
            return x

    def generics(self, count: int, avoid: Iterable[Scalar] = ()) -> List[Scalar]:
        values: List[Scalar] = []
        avoid = list(avoid)
        for _ in range(count):
            x = self.generic(avoid + values)
            values.append(x)
        return values

    def integer(self, low: int, high: int) -> int:
        return int(self._rng.integers(low, high))

    def choice(self, items: Sequence[Any]) -> Any:
        return items[int(self._rng.integers(0, len(items)))]


def random_generic(seed: int, avoid: Sequence[Scalar] = (), q: Optional[Scalar] = None,
                   field: ScalarField = RATIONAL) -> Scalar:
    """One-shot wrapper around ScalarSampler.generic"""
    return ScalarSampler(seed, field=field, q=q).generic(avoid)
