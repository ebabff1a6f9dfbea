"""Harmonic grids, the derivation of the semitone, and interval species."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, NotHarmonic
from .measure import Measure, Pow2, semitone_exponent


class HarmonicGrid(enum.Enum):
    """Admissible step sizes: twelfths of an octave, or twenty-fourths."""

    WESTERN = ("western", 12)
    MODAL = ("modal", 24)

    def __init__(self, label: str, granularity: int):
        self.label = label
        self.granularity = granularity

    @classmethod
    def from_name(cls, name: str) -> HarmonicGrid:
        for grid in cls:
            if grid.label == name.lower():
                return grid
        raise DomainError(f"unknown grid {name!r}; expected western or modal")

    def admits_semitones(self, s: Fraction) -> bool:
        """Whether a signed semitone count lies on this grid."""
        return (Fraction(s) * self.granularity / 12).denominator == 1


WESTERN = HarmonicGrid.WESTERN
MODAL = HarmonicGrid.MODAL


def is_harmonic(m: Measure, grid: HarmonicGrid = WESTERN) -> bool:
    """``m`` is harmonic when it is a whole number of grid steps."""
    e = semitone_exponent(m, grid.granularity)
    return e is not None and e.denominator == 1


def solve_rational(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Solve a square linear system exactly by Gauss-Jordan elimination."""
    n = len(rows)
    a = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise DomainError("singular system")
        a[col], a[pivot] = a[pivot], a[col]
        p = a[col][col]
        a[col] = [v / p for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


# Step pattern of the gamme over the unknowns (epsilon, x, y), as exponent
# vectors: epsilon^2, x, epsilon, y, epsilon^2, x, epsilon.
GAMME_PATTERN: tuple[tuple[int, int, int], ...] = (
    (2, 0, 0), (0, 1, 0), (1, 0, 0), (0, 0, 1), (2, 0, 0), (0, 1, 0), (1, 0, 0),
)


@dataclass(frozen=True)
class EpsilonDerivation:
    epsilon: Measure
    x: Measure
    y: Measure

    @property
    def whole_tone(self) -> Measure:
        return self.x


def derive_epsilon() -> EpsilonDerivation:
    """Solve the gamme constraints for the least harmonic measure.

    Working in base-2 exponents the constraints are linear:
    the pattern multiplies to an octave, ``epsilon^2 x y`` is half an octave,
    and the two whole tones agree.
    """
    octave_row = [Fraction(sum(v[i] for v in GAMME_PATTERN)) for i in range(3)]
    rows = [octave_row, [Fraction(2), Fraction(1), Fraction(1)], [Fraction(0), Fraction(1), Fraction(-1)]]
    rhs = [Fraction(1), Fraction(1, 2), Fraction(0)]
    e, x, y = solve_rational(rows, rhs)
    return EpsilonDerivation(Pow2(e), Pow2(x), Pow2(y))


TRITONE = "fourth-augmented/fifth-diminished"

# semitones -> (name, ordinal(s)); the tritone sits between two ordinals
_SPECIES: dict[int, tuple[str, tuple[int, ...]]] = {
    0: ("prime", (1,)),
    1: ("second", (2,)), 2: ("second", (2,)),
    3: ("third", (3,)), 4: ("third", (3,)),
    5: ("fourth", (4,)),
    6: (TRITONE, (4, 5)),
    7: ("fifth", (5,)),
    8: ("sixth", (6,)), 9: ("sixth", (6,)),
    10: ("seventh", (7,)), 11: ("seventh", (7,)),
    12: ("octave", (8,)),
}


@dataclass(frozen=True)
class Species:
    name: str
    ordinals: tuple[int, ...]
    compound: bool = False

    def __str__(self) -> str:
        return f"compound({self.name})" if self.compound else self.name


def interval_species(m: Measure) -> Species:
    """Name a western harmonic interval by its number of semitones."""
    s = semitone_exponent(m)
    if s is None or s.denominator != 1:
        raise NotHarmonic(f"{m} is not a whole number of semitones")
    s = int(s)
    if 0 <= s <= 12:
        name, ordinals = _SPECIES[s]
        return Species(name, ordinals)
    r = s % 12
    name, ordinals = _SPECIES[12 if r == 0 else r]
    return Species(name, ordinals, compound=True)
