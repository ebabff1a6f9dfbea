"""Interval measures: positive reals kept exact whenever possible.

A measure is stored as ``coeff * 2**exponent`` where ``coeff`` is a positive
rational whose numerator and denominator are both odd and ``exponent`` is a
rational.  This canonical split makes equality structural for exact values,
turns composition into exponent addition, and lets ``2^(7/12)`` and ``3:2``
be compared without floating point.  Values that cannot be carried exactly
are held as ``Approx`` floats compared at a relative tolerance of 1e-12.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import total_ordering
from typing import Union

from .errors import DomainError, NonExactPower, ParseError

REL_TOL = 1e-12
OCTAVE = 2
BASE_FREQUENCY = 440.0 * 2.0 ** (-9 / 12)
"""Frequency in Hz of the base sound, pinned so that A above it sounds at 440 Hz."""

RationalLike = Union[int, Fraction]


def _odd_split(value: Fraction) -> tuple[Fraction, int]:
    """Split a positive rational into an odd/odd part and a power of two."""
    num, den = value.numerator, value.denominator
    tz_num = (num & -num).bit_length() - 1
    tz_den = (den & -den).bit_length() - 1
    return Fraction(num >> tz_num, den >> tz_den), tz_num - tz_den


def _cmp_exact(c1: Fraction, e1: Fraction, c2: Fraction, e2: Fraction) -> int:
    """Sign of ``c1*2**e1 - c2*2**e2`` computed with integers only."""
    if c1 == c2 and e1 == e2:
        return 0
    c = c1 / c2
    d = e2 - e1  # compare c against 2**d
    # Cheap float decision when the two sides are clearly apart.
    gap = math.log2(c.numerator) - math.log2(c.denominator) - float(d)
    if abs(gap) > 1e-9:
        return 1 if gap > 0 else -1
    a, b = d.numerator, d.denominator
    lhs = c.numerator**b
    rhs = c.denominator**b
    if a >= 0:
        rhs <<= a
    else:
        lhs <<= -a
    return (lhs > rhs) - (lhs < rhs)


@total_ordering
class Measure:
    """A positive real interval measure.

    Build values with :meth:`pow2`, :meth:`ratio` or :meth:`approx` (also
    exported as ``Pow2``, ``Ratio`` and ``Approx``).  Multiplication composes
    intervals, ``~m`` inverts, ``m ** w`` raises to a rational power.
    """

    __slots__ = ("coeff", "exponent", "value")

    def __init__(self, coeff: Fraction | None, exponent: Fraction | None, value: float | None = None):
        self.coeff = coeff
        self.exponent = exponent
        self.value = value

    # construction -----------------------------------------------------------

    @classmethod
    def pow2(cls, q: RationalLike | str) -> Measure:
        return cls(Fraction(1), Fraction(q))

    @classmethod
    def ratio(cls, p: RationalLike | str, q: RationalLike = 1) -> Measure:
        r = Fraction(p) / Fraction(q)
        if r <= 0:
            raise DomainError(f"measure must be positive, got {r}")
        coeff, k = _odd_split(r)
        return cls(coeff, Fraction(k))

    @classmethod
    def approx(cls, x: float) -> Measure:
        x = float(x)
        if not x > 0 or math.isinf(x):
            raise DomainError(f"measure must be a positive finite real, got {x}")
        return cls(None, None, x)

    @classmethod
    def coerce(cls, x: Measure | RationalLike | float) -> Measure:
        if isinstance(x, Measure):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.ratio(x)
        return cls.approx(x)

    # classification ---------------------------------------------------------

    @property
    def is_exact(self) -> bool:
        return self.value is None

    @property
    def kind(self) -> str:
        """One of ``Pow2``, ``Ratio``, ``Product`` or ``Approx``."""
        if not self.is_exact:
            return "Approx"
        if self.coeff == 1:
            return "Pow2"
        if self.exponent.denominator == 1:
            return "Ratio"
        return "Product"

    def as_fraction(self) -> Fraction | None:
        """The exact rational value, or ``None`` if the measure is irrational or approximate."""
        if not self.is_exact or self.exponent.denominator != 1:
            return None
        return self.coeff * Fraction(2) ** int(self.exponent)

    def __float__(self) -> float:
        if self.value is not None:
            return self.value
        return float(self.coeff) * 2.0 ** float(self.exponent)

    @property
    def log2(self) -> float:
        if self.value is not None:
            return math.log2(self.value)
        return math.log2(self.coeff.numerator) - math.log2(self.coeff.denominator) + float(self.exponent)

    # algebra ----------------------------------------------------------------

    def __mul__(self, other: Measure) -> Measure:
        other = Measure.coerce(other)
        if self.is_exact and other.is_exact:
            coeff, k = _odd_split(self.coeff * other.coeff)
            return Measure(coeff, self.exponent + other.exponent + k)
        return Measure.approx(float(self) * float(other))

    __rmul__ = __mul__

    def __invert__(self) -> Measure:
        if self.is_exact:
            return Measure(1 / self.coeff, -self.exponent)
        return Measure.approx(1.0 / self.value)

    def __truediv__(self, other: Measure) -> Measure:
        return self * ~Measure.coerce(other)

    def __rtruediv__(self, other: Measure) -> Measure:
        return Measure.coerce(other) * ~self

    def __pow__(self, w: RationalLike) -> Measure:
        return rational_pow(self, w)

    # comparison -------------------------------------------------------------

    def compare(self, other: Measure) -> int:
        other = Measure.coerce(other)
        if self.is_exact and other.is_exact:
            return _cmp_exact(self.coeff, self.exponent, other.coeff, other.exponent)
        a, b = float(self), float(other)
        if math.isclose(a, b, rel_tol=REL_TOL, abs_tol=0.0):
            return 0
        return -1 if a < b else 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, (Measure, int, Fraction, float)):
            return NotImplemented
        return self.compare(other) == 0

    def __lt__(self, other: Measure) -> bool:
        return self.compare(other) < 0

    def __hash__(self) -> int:
        if not self.is_exact:
            raise TypeError("approximate measures are not hashable")
        return hash((self.coeff, self.exponent))

    # text -------------------------------------------------------------------

    def __str__(self) -> str:
        kind = self.kind
        if kind == "Approx":
            return repr(self.value)
        if kind == "Pow2":
            return f"2^{self.exponent}"
        if kind == "Ratio":
            r = self.as_fraction()
            return f"{r.numerator}:{r.denominator}"
        whole = math.floor(self.exponent)
        r = self.coeff * Fraction(2) ** whole
        return f"{r.numerator}:{r.denominator}*2^{self.exponent - whole}"

    def __repr__(self) -> str:
        return f"Measure({self})"


Pow2 = Measure.pow2
Ratio = Measure.ratio
Approx = Measure.approx

ONE = Pow2(0)
OCTAVE_MEASURE = Pow2(1)
SEMITONE = Pow2(Fraction(1, 12))


def compose(a: Measure, b: Measure) -> Measure:
    return a * b


def invert(m: Measure) -> Measure:
    return ~m


def compare(a: Measure, b: Measure) -> int:
    """Return -1, 0 or 1 as ``a`` is below, equal to or above ``b``."""
    return a.compare(b)


def rational_pow(m: Measure, w: RationalLike) -> Measure:
    """``m ** w`` for rational ``w``; exact for powers of two and integer ``w``."""
    w = Fraction(w)
    if not m.is_exact:
        if w.denominator != 1:
            raise NonExactPower(f"{m} ** {w} has no exact form")
        return Measure.approx(m.value ** int(w))
    if m.coeff == 1:
        return Measure(Fraction(1), m.exponent * w)
    if w.denominator != 1:
        raise NonExactPower(f"{m} ** {w} has no exact form")
    n = int(w)
    coeff = m.coeff**n if n >= 0 else (1 / m.coeff) ** (-n)
    return Measure(coeff, m.exponent * n)


def semitone_exponent(m: Measure, granularity: int = 12) -> Fraction | None:
    """``granularity * log2(m)`` when it is rational, else ``None``."""
    if not m.is_exact or m.coeff != 1:
        return None
    return m.exponent * granularity


def frequency_of(m: Measure, base: float = BASE_FREQUENCY) -> float:
    """Frequency in Hz of the sound sitting ``m`` above the base sound."""
    return base * float(m)


def midsound_measure(m: Measure) -> Measure:
    """The measure of either half of an interval split at its midsound."""
    if m.is_exact and m.coeff == 1:
        return Measure(Fraction(1), m.exponent / 2)
    return Measure.approx(math.sqrt(float(m)))


def archimedean_witness(a: Measure, b: Measure) -> int:
    """Least ``n >= 1`` with ``a <= b**n``; both measures must exceed 1."""
    if a <= ONE or b <= ONE:
        raise DomainError("archimedean witness needs both measures above 1")
    n = max(1, math.floor(a.log2 / b.log2) - 1)
    power = b**n
    while a > power:
        power = power * b
        n += 1
    return n


_POW2_RE = re.compile(r"2\^(-?\d+(?:/\d+)?)")
_RATIO_RE = re.compile(r"(\d+)(?::(\d+))?")
_PRODUCT_RE = re.compile(r"(\d+)(?::(\d+))?\*2\^(-?\d+(?:/\d+)?)")
_FLOAT_RE = re.compile(r"[+-]?(?:\d+\.\d*|\.\d+|\d+)(?:[eE][+-]?\d+)?")


def parse_measure(text: str, line: int = 1, column: int = 1) -> Measure:
    """Parse ``2^7/12``, ``3:2``, ``3:2*2^1/12`` or a decimal like ``1.5``."""
    s = text.strip()
    try:
        if m := _POW2_RE.fullmatch(s):
            return Pow2(Fraction(m.group(1)))
        if m := _PRODUCT_RE.fullmatch(s):
            return Ratio(int(m.group(1)), int(m.group(2) or 1)) * Pow2(Fraction(m.group(3)))
        if m := _RATIO_RE.fullmatch(s):
            return Ratio(int(m.group(1)), int(m.group(2) or 1))
        if _FLOAT_RE.fullmatch(s):
            return Approx(float(s))
    except (DomainError, ZeroDivisionError) as exc:
        raise ParseError(f"invalid measure {s!r}: {exc}", line, column) from None
    raise ParseError(f"invalid measure {s!r}", line, column)
