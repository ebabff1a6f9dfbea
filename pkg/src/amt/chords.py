"""Chords: strictly ascending stacks of grid pitches with harmonic steps."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import NonHarmonicStep, NotAscending, NotAscendingMelody, NotATriadShape
from .harmony import MODAL, WESTERN, HarmonicGrid
from .measure import Measure, semitone_exponent
from .melody import Melody
from .notes import GridPitch, parse_pitch


@dataclass(frozen=True)
class Chord:
    pitches: tuple[GridPitch, ...]

    def __len__(self) -> int:
        return len(self.pitches)

    @property
    def indices(self) -> tuple[Fraction, ...]:
        return tuple(p.index for p in self.pitches)

    @property
    def steps(self) -> tuple[Fraction, ...]:
        return tuple(b - a for a, b in zip(self.indices, self.indices[1:]))

    def __str__(self) -> str:
        return format_chord(self)


EMPTY_CHORD = Chord(())


def _to_pitch(p: GridPitch | Measure | int | Fraction) -> GridPitch:
    if isinstance(p, GridPitch):
        return p
    if isinstance(p, Measure):
        s = semitone_exponent(p)
        if s is None:
            raise NonHarmonicStep(f"{p} does not sit on any harmonic grid")
        return GridPitch(s)
    return GridPitch(p)


def make_chord(pitches: Iterable[GridPitch | Measure | int | Fraction], grid: HarmonicGrid = WESTERN) -> Chord:
    """Validate a chord.  Measures are read as ratios to the base sound."""
    ps = tuple(_to_pitch(p) for p in pitches)
    for p in ps:
        if not grid.admits_semitones(p.index):
            raise NonHarmonicStep(f"{p.index} is off the {grid.label} grid")
    for a, b in zip(ps, ps[1:]):
        if not a.index < b.index:
            raise NotAscending(f"{a} is not below {b}")
    return Chord(ps)


def enharmonic(a: Chord, b: Chord) -> bool:
    return a.indices == b.indices


TRIAD_SHAPES = {(4, 3): "major", (3, 4): "minor", (3, 3): "diminished", (4, 4): "augmented"}


def classify_triad(c: Chord) -> str:
    steps = c.steps
    if len(c) != 3 or steps not in TRIAD_SHAPES:
        raise NotATriadShape(f"steps {tuple(str(s) for s in steps)} are not a triad shape")
    return TRIAD_SHAPES[steps]


def invert_triad(c: Chord, which: int = 1) -> Chord:
    """First inversion drops the middle note an octave below the root; second drops the top."""
    if len(c) != 3:
        raise NotATriadShape("only three-note chords can be inverted this way")
    x, y, z = c.pitches
    if which == 1:
        return Chord((y.shifted(-12), x, z))
    if which == 2:
        return Chord((z.shifted(-12), x, y))
    raise ValueError("inversion must be 1 or 2")


def chord_join(a: Chord, b: Chord) -> Chord:
    return Chord(tuple(sorted(set(a.pitches) | set(b.pitches))))


def chord_meet(a: Chord, b: Chord) -> Chord:
    return Chord(tuple(sorted(set(a.pitches) & set(b.pitches))))


def chord_to_melody(c: Chord) -> Melody:
    return Melody(c.pitches)


def melody_to_chord(m: Melody) -> Chord:
    idx = m.indices
    if any(not a < b for a, b in zip(idx, idx[1:])):
        raise NotAscendingMelody("melody is not strictly ascending")
    return Chord(m.terms)


def format_chord(c: Chord) -> str:
    return "+".join(str(p) for p in c.pitches)


def parse_chord(text: str, grid: HarmonicGrid | None = None, line: int = 1) -> Chord:
    """``C4+E4+G4``.  Without a grid, quarter-tone pitches select the modal one."""
    s = text.strip()
    if not s:
        return EMPTY_CHORD
    pitches, col = [], 1 + (len(text) - len(text.lstrip()))
    for tok in re.split(r"\+(?!q)", s):
        pitches.append(parse_pitch(tok, line, col))
        col += len(tok) + 1
    if grid is None:
        grid = MODAL if any(p.index.denominator != 1 for p in pitches) else WESTERN
    return make_chord(pitches, grid)
