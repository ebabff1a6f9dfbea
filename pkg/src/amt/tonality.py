"""Pitch classes and octave equivalence (equitonality)."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .measure import REL_TOL, Measure, Pow2


@dataclass(frozen=True)
class PitchClass:
    """A pitch identified by its measure relative to the base sound."""

    ratio_to_base: Measure

    def __str__(self) -> str:
        return str(self.ratio_to_base)


def _as_measure(p: PitchClass | Measure) -> Measure:
    return p.ratio_to_base if isinstance(p, PitchClass) else p


def is_octave_power(m: Measure) -> bool:
    """True when ``m`` equals ``2**n`` for some integer ``n``."""
    if m.is_exact:
        return m.coeff == 1 and m.exponent.denominator == 1
    n = round(m.log2)
    return math.isclose(m.value, 2.0**n, rel_tol=REL_TOL, abs_tol=0.0)


def equitonal(p: PitchClass | Measure, q: PitchClass | Measure) -> bool:
    """Whether two pitches differ by a whole number of octaves."""
    return is_octave_power(_as_measure(q) / _as_measure(p))


def octave_shift(p: PitchClass, n: int) -> PitchClass:
    return PitchClass(p.ratio_to_base * Pow2(n))


def octave_decompose(p: PitchClass | Measure) -> tuple[int, Measure]:
    """Split into ``(n, residue)`` with ``residue`` in ``[1, 2)`` and ``p = 2**n * residue``."""
    m = _as_measure(p)
    n = math.floor(m.log2)
    residue = m / Pow2(n)
    while residue < Pow2(0):
        n -= 1
        residue = m / Pow2(n)
    while residue >= Pow2(1):
        n += 1
        residue = m / Pow2(n)
    return n, residue
