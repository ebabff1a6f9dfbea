"""Rhythms: timed events over a span, their beat grids and classes."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations
from typing import Iterable, Union

from .errors import DomainError, IrregularRhythm, ParseError
from .notes import GridPitch, parse_pitch


@dataclass(frozen=True, eq=False)
class IrrationalOnset:
    """An onset known to be an irrational multiple of the span.

    Distinct instances are treated as rationally independent, so the
    difference of two of them is never rational.
    """

    value: float

    def __float__(self) -> float:
        return self.value

    def __str__(self) -> str:
        return f"irr({self.value!r})"


Onset = Union[Fraction, IrrationalOnset]


@dataclass(frozen=True)
class RhythmEvent:
    onset: Onset
    payload: GridPitch | None = None  # None is a rest

    @property
    def silent(self) -> bool:
        return self.payload is None


@dataclass(frozen=True)
class Rhythm:
    span: Fraction
    events: tuple[RhythmEvent, ...]

    def __str__(self) -> str:
        return format_rhythm(self)


def make_rhythm(span: Fraction | int, events: Iterable[RhythmEvent | tuple]) -> Rhythm:
    """Validate: positive span, first onset at 0, onsets increasing inside the span."""
    span = Fraction(span)
    if span <= 0:
        raise DomainError("span must be positive")
    evs = tuple(e if isinstance(e, RhythmEvent) else RhythmEvent(*e) for e in events)
    if not evs:
        raise DomainError("a rhythm needs at least one event")
    evs = tuple(
        e if isinstance(e.onset, IrrationalOnset) else RhythmEvent(Fraction(e.onset), e.payload) for e in evs
    )
    if not (isinstance(evs[0].onset, Fraction) and evs[0].onset == 0):
        raise DomainError("the first onset must be 0")
    times = [float(e.onset) for e in evs]
    if any(not a < b for a, b in zip(times, times[1:])):
        raise DomainError("onsets must be strictly increasing")
    if times[-1] >= float(span):
        raise DomainError("onsets must lie before the end of the span")
    return Rhythm(span, evs)


def _sounding(r: Rhythm) -> list[Onset]:
    """Onsets of sounding events together with the start of the span."""
    out: list[Onset] = [Fraction(0)]
    out += [e.onset for e in r.events if not e.silent and not (isinstance(e.onset, Fraction) and e.onset == 0)]
    return out


def _rational_difference(x: Onset, y: Onset) -> bool:
    if x is y:
        return True
    return isinstance(x, Fraction) and isinstance(y, Fraction)


# Three equivalent characterisations of regularity, kept separate so they can
# be checked against each other.


def regular_by_differences(r: Rhythm) -> bool:
    pts = _sounding(r)
    return all(_rational_difference(x, y) for x, y in combinations(pts, 2))


def regular_by_onsets(r: Rhythm) -> bool:
    return all(isinstance(x, Fraction) for x in _sounding(r))


def regular_by_gaps(r: Rhythm) -> bool:
    pts = sorted(_sounding(r), key=float)
    return all(_rational_difference(a, b) for a, b in zip(pts, pts[1:]))


def is_regular(r: Rhythm) -> bool:
    return regular_by_onsets(r)


@dataclass(frozen=True)
class BeatGrid:
    span: Fraction
    beats: int

    @property
    def boundaries(self) -> list[Fraction]:
        if self.beats == 0:
            return [Fraction(0), self.span]
        return [self.span * k / self.beats for k in range(self.beats + 1)]


def is_silence(r: Rhythm) -> bool:
    return all(e.silent for e in r.events)


def coarsest_refinement(r: Rhythm) -> BeatGrid:
    """Fewest equal beats such that every sounding onset falls on a beat."""
    if not is_regular(r):
        raise IrregularRhythm("an irrational onset admits no beat grid")
    if is_silence(r):
        return BeatGrid(r.span, 0)
    dens = (Fraction(x) / r.span for x in _sounding(r))
    return BeatGrid(r.span, reduce(math.lcm, (d.denominator for d in dens), 1))


def signature(r: Rhythm) -> tuple[int, Fraction]:
    """``(beats, span)``."""
    return coarsest_refinement(r).beats, r.span


def tempo(r: Rhythm) -> Fraction:
    n, t = signature(r)
    return Fraction(n) / t


CLASSES = ("silence", "trivial", "simple", "compound", "complex")


def classify_beats(n: int) -> str:
    if n == 0:
        return "silence"
    if n == 1:
        return "trivial"
    if n in (2, 3):
        return "simple"
    if n % 3 == 0:
        return "compound"
    return "complex"


def classify(r: Rhythm) -> str:
    return classify_beats(signature(r)[0])


def sig_triple(sig: tuple[int, Fraction]) -> tuple[int, Fraction]:
    n, t = sig
    return 3 * n, t


def sig_concat(a: tuple[int, Fraction], b: tuple[int, Fraction]) -> tuple[int, Fraction]:
    return a[0] + b[0], a[1] + b[1]


def scale_time(r: Rhythm, c: Fraction | int) -> Rhythm:
    """Stretch the rhythm by a positive rational factor."""
    c = Fraction(c)
    if c <= 0:
        raise DomainError("time scale must be positive")
    evs = tuple(
        RhythmEvent(IrrationalOnset(e.onset.value * float(c)) if isinstance(e.onset, IrrationalOnset) else e.onset * c, e.payload)
        for e in r.events
    )
    return Rhythm(r.span * c, evs)


# text ---------------------------------------------------------------------------

_IRR_RE = re.compile(r"irr\(([^)]*)\)")


def format_rhythm(r: Rhythm) -> str:
    body = " ".join(f"{e.onset}:{'rest' if e.silent else e.payload}" for e in r.events)
    return f"span={r.span}; {body}"


def parse_rhythm(text: str, line: int = 1) -> Rhythm:
    """``span=1; 0:C4 1/4:E4 1/2:rest 3/4:G4``; ``irr(<float>)`` marks an irrational onset."""
    head, sep, body = text.partition(";")
    h = head.strip()
    if not sep or not h.startswith("span="):
        raise ParseError("expected 'span=<t>; <onset>:<pitch> ...'", line, 1)
    try:
        span = Fraction(h[5:].strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"invalid span {h[5:]!r}", line, 6) from None
    events = []
    base = len(head) + 1
    for m in re.finditer(r"\S+", body):
        tok, col = m.group(0), base + m.start() + 1
        onset_text, colon, payload_text = tok.rpartition(":")
        if not colon:
            raise ParseError(f"expected '<onset>:<pitch>' in {tok!r}", line, col)
        if im := _IRR_RE.fullmatch(onset_text):
            try:
                onset: Onset = IrrationalOnset(float(im.group(1)))
            except ValueError:
                raise ParseError(f"invalid irrational onset {onset_text!r}", line, col) from None
        else:
            try:
                onset = Fraction(onset_text)
            except (ValueError, ZeroDivisionError):
                raise ParseError(f"invalid onset {onset_text!r}", line, col) from None
        payload = None if payload_text == "rest" else parse_pitch(payload_text, line, col + len(onset_text) + 1)
        events.append(RhythmEvent(onset, payload))
    try:
        return make_rhythm(span, events)
    except DomainError as exc:
        raise ParseError(str(exc), line, 1) from None
