"""Notes (pitch classes modulo the octave) and pitches on a harmonic grid."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Union

from .errors import ParseError
from .measure import BASE_FREQUENCY, Measure, Pow2

SHARP_NAMES = ("C", "C♯", "D", "D♯", "E", "F", "F♯", "G", "G♯", "A", "A♯", "B")
NATURALS = {"C": 0, "D": 2, "E": 4, "F": 5, "G": 7, "A": 9, "B": 11}
QUARTER = "+q"

Semitones = Union[int, Fraction]


@dataclass(frozen=True, order=True)
class Note:
    """A pitch class measured in semitones above C, reduced to ``[0, 12)``."""

    residue: Fraction

    def __post_init__(self):
        object.__setattr__(self, "residue", Fraction(self.residue) % 12)

    def __add__(self, other: Note | Semitones) -> Note:
        return Note(self.residue + _semitones(other))

    def __sub__(self, other: Note | Semitones) -> Note:
        return Note(self.residue - _semitones(other))

    def __neg__(self) -> Note:
        return Note(-self.residue)

    def sharp(self) -> Note:
        return Note(self.residue + 1)

    def flat(self) -> Note:
        return Note(self.residue - 1)

    @property
    def name(self) -> str:
        return note_name(self)

    def __str__(self) -> str:
        return note_name(self)


def _semitones(x: Note | Semitones) -> Fraction:
    return x.residue if isinstance(x, Note) else Fraction(x)


def note_add(a: Note, b: Note) -> Note:
    return a + b


def note_sub(a: Note, b: Note) -> Note:
    return a - b


def sharp(n: Note) -> Note:
    return n.sharp()


def flat(n: Note) -> Note:
    return n.flat()


def note_name(n: Note) -> str:
    """Sharp spelling; a quarter tone above a chromatic note gets ``+q``."""
    whole = math.floor(n.residue)
    frac = n.residue - whole
    if frac == 0:
        return SHARP_NAMES[whole]
    if frac == Fraction(1, 2):
        return SHARP_NAMES[whole] + QUARTER
    return f"{SHARP_NAMES[whole]}+{frac}"


_NOTE_RE = re.compile(r"([A-Ga-g])([#♯b♭]*)(\+q)?")


def _accidental_shift(acc: str) -> int:
    return sum(1 if ch in "#♯" else -1 for ch in acc)


def parse_note(text: str, line: int = 1, column: int = 1) -> Note:
    m = _NOTE_RE.fullmatch(text.strip())
    if not m:
        raise ParseError(f"invalid note {text!r}", line, column)
    return _note_from_match(m)


def _note_from_match(m: re.Match) -> Note:
    base = NATURALS[m.group(1).upper()] + _accidental_shift(m.group(2))
    return Note(base + (Fraction(1, 2) if m.group(3) else 0))


C = Note(0)


@total_ordering
@dataclass(frozen=True)
class GridPitch:
    """A pitch ``index`` semitones above the base sound (C4).

    Indices are rational so quarter tones are representable.
    """

    index: Fraction

    def __post_init__(self):
        object.__setattr__(self, "index", Fraction(self.index))

    def __lt__(self, other: GridPitch) -> bool:
        return self.index < other.index

    @property
    def note(self) -> Note:
        return Note(self.index)

    @property
    def octave(self) -> int:
        return math.floor(self.index / 12) + 4

    @property
    def measure(self) -> Measure:
        """Measure of the interval from the base sound to this pitch."""
        return Pow2(self.index / 12)

    def frequency(self, base: float = BASE_FREQUENCY) -> float:
        return base * 2.0 ** (float(self.index) / 12)

    def shifted(self, semitones: Semitones) -> GridPitch:
        return GridPitch(self.index + Fraction(semitones))

    def __str__(self) -> str:
        return f"{note_name(self.note)}{self.octave}"


_PITCH_RE = re.compile(r"([A-Ga-g])([#♯b♭]*)(\+q)?(-?\d+)")


def parse_pitch(text: str, line: int = 1, column: int = 1) -> GridPitch:
    """Parse ``C4``, ``F#3``, ``Eb5`` or ``C♯+q4``.

    Accidentals shift the letter's pitch and may cross the octave boundary,
    so ``B#3`` is the same pitch as ``C4``.
    """
    m = _PITCH_RE.fullmatch(text.strip())
    if not m:
        raise ParseError(f"invalid pitch {text!r}", line, column)
    base = NATURALS[m.group(1).upper()] + _accidental_shift(m.group(2))
    quarter = Fraction(1, 2) if m.group(3) else Fraction(0)
    return GridPitch(base + quarter + 12 * (int(m.group(4)) - 4))


def iter_tokens(text: str):
    """Yield ``(token, line, column)`` for whitespace separated tokens (1-based)."""
    for ln, line in enumerate(text.splitlines(), start=1):
        for m in re.finditer(r"\S+", line):
            yield m.group(0), ln, m.start() + 1
