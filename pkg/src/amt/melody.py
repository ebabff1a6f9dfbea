"""Melodies: finite sequences of grid pitches, and their relation to scales."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NoScaleFound, NotHarmonic, SameScale
from .harmony import MODAL, WESTERN, HarmonicGrid
from .measure import Measure, semitone_exponent
from .notes import GridPitch, Note, iter_tokens, parse_pitch
from .scales import (
    ASCENDING,
    CATALOG,
    DESCENDING,
    Scale,
    generated_module,
    named_scale,
    scale_from_semitones,
)


@dataclass(frozen=True)
class Melody:
    terms: tuple[GridPitch, ...] = ()

    @classmethod
    def of(cls, pitches: Iterable[GridPitch | int | Fraction]) -> Melody:
        return cls(tuple(p if isinstance(p, GridPitch) else GridPitch(p) for p in pitches))

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __add__(self, other: Melody) -> Melody:
        return Melody(self.terms + other.terms)

    @property
    def indices(self) -> tuple[Fraction, ...]:
        return tuple(p.index for p in self.terms)

    def __str__(self) -> str:
        return format_melody(self)


SILENT = Melody(())


def transpose(m: Melody, by: Measure | int | Fraction, grid: HarmonicGrid = WESTERN) -> Melody:
    """Shift every term by ``by`` (a measure, or a signed semitone count)."""
    if isinstance(by, Measure):
        shift = semitone_exponent(by)
        if shift is None:
            raise NotHarmonic(f"{by} is not a harmonic measure")
    else:
        shift = Fraction(by)
    if not grid.admits_semitones(shift):
        raise NotHarmonic(f"{shift} semitones is off the {grid.label} grid")
    return Melody(tuple(p.shifted(shift) for p in m.terms))


def congruent_melodies(a: Melody, b: Melody) -> bool:
    """Same length and the same successive interval measures."""
    if len(a) != len(b):
        return False
    da = [y - x for x, y in zip(a.indices, a.indices[1:])]
    db = [y - x for x, y in zip(b.indices, b.indices[1:])]
    return da == db


@dataclass(frozen=True)
class Run:
    direction: int
    terms: tuple[GridPitch, ...]


def runs(m: Melody) -> list[Run]:
    """Maximal strictly monotone stretches of at least two terms.

    A repeated pitch ends a run; a turning point belongs to both runs it joins.
    """
    out: list[Run] = []
    idx = m.indices
    i = 0
    while i < len(idx) - 1:
        d = idx[i + 1] - idx[i]
        if d == 0:
            i += 1
            continue
        sign = 1 if d > 0 else -1
        j = i + 1
        while j < len(idx) - 1 and (idx[j + 1] - idx[j]) * sign > 0:
            j += 1
        out.append(Run(sign, m.terms[i:j + 1]))
        i = j
    return out


def _run_notes(m: Melody, direction: int) -> set[Note] | None:
    rs = [r for r in runs(m) if r.direction == direction]
    if not rs:
        return None
    return {p.note for r in rs for p in r.terms}


def based_on(m: Melody, s: Scale) -> bool:
    """Run terms lie on the matching module, and cover every one of its degrees.

    A direction in which the melody has no run imposes nothing; a melody with
    no runs at all is based on no scale.
    """
    gm = generated_module(s)
    asc, desc = _run_notes(m, ASCENDING), _run_notes(m, DESCENDING)
    if asc is None and desc is None:
        return False
    for notes, degrees in ((asc, gm.ascent_degrees), (desc, gm.descent_degrees)):
        if notes is None:
            continue
        if notes != set(degrees):
            return False
    return True


def lies_on(m: Melody, s: Scale) -> bool:
    """Every term of ``m`` is a degree of ``s``."""
    comps = generated_module(s).components
    return all(p.note in comps for p in m.terms)


def minimal_scale(m: Melody) -> Scale | None:
    """Smallest scale whose modules are exactly the notes of the melody's runs.

    The tonic must occur in every direction that has a run; the first such
    note in melody order is used.  A direction without runs mirrors the other
    one, so one-directional melodies give compatible scales.  Returns ``None``
    if no tonic qualifies.
    """
    asc, desc = _run_notes(m, ASCENDING), _run_notes(m, DESCENDING)
    present = [x for x in (asc, desc) if x is not None]
    if not present:
        return None
    common = set.intersection(*present)
    tonic = next((p.note for p in m.terms if p.note in common), None)
    if tonic is None:
        return None

    def steps(notes: set[Note] | None, sign: int) -> list[Fraction]:
        offs = sorted({(sign * (n - tonic).residue) % 12 for n in notes or ()} - {0}) + [Fraction(12)]
        return [sign * (b - a) for a, b in zip([Fraction(0)] + offs, offs)]

    if asc is None:
        return scale_from_semitones(tonic, [-x for x in reversed(steps(desc, -1))])
    return scale_from_semitones(tonic, steps(asc, 1), None if desc is None else steps(desc, -1))


def _tonics(grid: HarmonicGrid) -> list[Note]:
    return [Note(Fraction(k, grid.granularity // 12)) for k in range(grid.granularity)]


def infer_scales(m: Melody, names: Sequence[str] | None = None) -> list[tuple[str, Scale]]:
    """Catalog scales (over every tonic) the melody can be read in, plus the minimal one.

    Compatible catalog scales only need to contain every term; incompatible
    ones must satisfy :func:`based_on`.
    """
    out: list[tuple[str, Scale]] = []
    if len(m) == 0:
        raise NoScaleFound("the silent melody has no scale")
    for name in names if names is not None else CATALOG:
        grid = CATALOG[name][2]
        for tonic in _tonics(grid):
            s = named_scale(name, tonic)
            ok = lies_on(m, s) if s.is_compatible else based_on(m, s)
            if ok:
                out.append((name, s))
    minimal = minimal_scale(m)
    if minimal is not None and based_on(m, minimal):
        out.append(("minimal", minimal))
    if not out:
        raise NoScaleFound("no scale fits the melody")
    return out


def concat(a: Melody, b: Melody) -> Melody:
    return a + b


def modulate(a: Melody, b: Melody) -> Melody:
    """Concatenate two melodies that are read in different scales."""
    if len(a) == 0 or len(b) == 0:
        return a + b
    sa = {(n, s) for n, s in infer_scales(a)}
    sb = {(n, s) for n, s in infer_scales(b)}
    if sa == sb:
        raise SameScale("both melodies fit exactly the same scales")
    return a + b


def format_melody(m: Melody) -> str:
    return " ".join(str(p) for p in m.terms)


def parse_melody(text: str) -> Melody:
    """Whitespace separated pitches such as ``C4 D4 E4 A3``; empty text is silence."""
    return Melody(tuple(parse_pitch(tok, ln, col) for tok, ln, col in iter_tokens(text)))


def melody_grid(m: Melody) -> HarmonicGrid:
    return MODAL if any(i.denominator != 1 for i in m.indices) else WESTERN
