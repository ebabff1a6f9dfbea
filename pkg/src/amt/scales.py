"""Modes and scales on a harmonic grid.

A scale has a tonic note, an ascending step tuple whose product is an octave
and a descending step tuple whose product is the inverse octave.  Steps are
held as :class:`Measure` values; the analysis works on their semitone counts,
which are exact rationals on either grid.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    DegreeOutOfRange,
    DomainError,
    EmptyTuple,
    NonHarmonicStep,
    NotOnGrid,
    NotParallel,
    OctaveProductViolation,
    ParseError,
    UnknownName,
)
from .harmony import MODAL, WESTERN, HarmonicGrid, is_harmonic
from .measure import Measure, Pow2, semitone_exponent
from .notes import _NOTE_RE, C, Note, _note_from_match, note_name

ASCENDING = 1
DESCENDING = -1


def _semis(m: Measure) -> Fraction:
    s = semitone_exponent(m)
    if s is None:
        raise NonHarmonicStep(f"{m} is not a rational number of semitones")
    return s


def _measures(semitones: Iterable[Fraction | int]) -> tuple[Measure, ...]:
    return tuple(Pow2(Fraction(s) / 12) for s in semitones)


# modes -----------------------------------------------------------------------


@dataclass(frozen=True)
class Mode:
    """A set of step measures used in one direction."""

    steps: frozenset[Measure]
    direction: int = ASCENDING

    @classmethod
    def of(cls, steps: Iterable[Measure], direction: int = ASCENDING) -> Mode:
        return cls(frozenset(steps), direction)


def mode_order(mode: Mode, limit: int = 4096) -> int | None:
    """Least ``k_1 + ... + k_n`` (each ``k_i >= 1``) with ``prod r_i**k_i`` an octave.

    Returns ``None`` when no such combination exists within ``limit`` steps.
    """
    if not mode.steps:
        raise EmptyTuple("mode has no steps")
    signed = [_semis(m) for m in mode.steps]
    if any(mode.direction * s <= 0 for s in signed):
        raise DomainError("mode steps must all move in the mode's direction")
    sizes = [abs(s) for s in signed]
    scale = reduce(math.lcm, (s.denominator for s in sizes), 1)
    coins = [int(s * scale) for s in sizes]
    target = 12 * scale - sum(coins)
    if target < 0:
        return None
    # unbounded minimum-coin count for the remainder
    best = [0] + [math.inf] * target
    for t in range(1, target + 1):
        best[t] = min((best[t - c] + 1 for c in coins if c <= t), default=math.inf)
    total = best[target] + len(coins)
    return int(total) if total <= limit else None


def is_maximally_even_mode(mode: Mode) -> bool:
    """Steps all lie in ``{k, k+1}`` semitones for one whole ``k``."""
    sizes = {abs(_semis(m)) for m in mode.steps}
    if any(s.denominator != 1 for s in sizes):
        raise NotOnGrid("maximal evenness is defined on the western grid only")
    return max(sizes) - min(sizes) <= 1


# scales ----------------------------------------------------------------------


@dataclass(frozen=True)
class Scale:
    tonic: Note
    ascent: tuple[Measure, ...]
    descent: tuple[Measure, ...]
    grid: HarmonicGrid = field(default=WESTERN, compare=False)

    @property
    def ascent_semitones(self) -> tuple[Fraction, ...]:
        return tuple(_semis(m) for m in self.ascent)

    @property
    def descent_semitones(self) -> tuple[Fraction, ...]:
        return tuple(_semis(m) for m in self.descent)

    @property
    def m(self) -> int:
        return len(self.ascent)

    @property
    def n(self) -> int:
        return len(self.descent)

    @property
    def is_compatible(self) -> bool:
        return self.descent == compatible_descent(self.ascent)

    def __str__(self) -> str:
        return format_scale(self)


def compatible_descent(ascent: Sequence[Measure]) -> tuple[Measure, ...]:
    """The descent retracing the ascent: reversed, each step inverted."""
    return tuple(~r for r in reversed(ascent))


def make_scale(
    tonic: Note,
    ascent: Sequence[Measure],
    descent: Sequence[Measure] | None = None,
    grid: HarmonicGrid = WESTERN,
) -> Scale:
    """Validate and build a scale; an omitted descent is the compatible one."""
    ascent = tuple(ascent)
    if not ascent:
        raise EmptyTuple("ascent is empty")
    descent = compatible_descent(ascent) if descent is None else tuple(descent)
    if not descent:
        raise EmptyTuple("descent is empty")
    for label, steps, sign in (("ascent", ascent, 1), ("descent", descent, -1)):
        for r in steps:
            if not is_harmonic(r, grid):
                raise NonHarmonicStep(f"{label} step {r} is not on the {grid.label} grid")
            if sign * _semis(r) <= 0:
                raise DomainError(f"{label} step {r} moves the wrong way")
    if sum(_semis(r) for r in ascent) != 12:
        raise OctaveProductViolation("ascent steps do not multiply to an octave")
    if sum(_semis(r) for r in descent) != -12:
        raise OctaveProductViolation("descent steps do not multiply to an inverse octave")
    return Scale(tonic, ascent, descent, grid)


def scale_from_semitones(
    tonic: Note,
    ascent: Sequence[Fraction | int],
    descent: Sequence[Fraction | int] | None = None,
    grid: HarmonicGrid | None = None,
) -> Scale:
    """Like :func:`make_scale` with steps given as signed semitone counts.

    Without an explicit grid, fractional steps select the modal grid.
    """
    if grid is None:
        steps = list(ascent) + list(descent or [])
        grid = MODAL if any(Fraction(s).denominator != 1 for s in steps) else WESTERN
    desc = None if descent is None else _measures(descent)
    return make_scale(tonic, _measures(ascent), desc, grid)


# generated module -------------------------------------------------------------


@dataclass(frozen=True)
class GeneratedModule:
    """Degree notes reached by climbing the ascent and walking down the descent."""

    tonic: Note
    ascent_degrees: tuple[Note, ...]
    descent_degrees: tuple[Note, ...]

    @property
    def components(self) -> frozenset[Note]:
        return frozenset(self.ascent_degrees) | frozenset(self.descent_degrees)


def _walk(tonic: Note, steps: Sequence[Fraction]) -> tuple[Note, ...]:
    out = [tonic]
    for s in steps[:-1]:
        out.append(out[-1] + s)
    return tuple(out)


def generated_module(s: Scale) -> GeneratedModule:
    return GeneratedModule(
        s.tonic,
        _walk(s.tonic, s.ascent_semitones),
        _walk(s.tonic, s.descent_semitones),
    )


def _partials(steps: Sequence[Fraction]) -> frozenset[Fraction]:
    """Cumulative semitone offsets of every degree, the octave included."""
    acc, out = Fraction(0), set()
    for st in steps:
        acc += abs(st)
        out.add(acc)
    return frozenset(out)


def _steps_from_partials(partials: Iterable[Fraction], sign: int) -> tuple[Fraction, ...]:
    pts = sorted(partials)
    return tuple(sign * (b - a) for a, b in zip([Fraction(0)] + pts, pts))


# evenness ------------------------------------------------------------------------


def _cyclic_window_sums(steps: Sequence[Fraction], length: int) -> set[Fraction]:
    m = len(steps)
    return {sum(abs(steps[(i + j) % m]) for j in range(length)) for i in range(m)}


def is_maximally_even_scale(s: Scale) -> bool:
    """For every window length ``k+1`` (``1 <= k <= max(m, n)``) all cyclic
    window sums, ascending and descending together, fit in ``{n_k, n_k + 1}``."""
    asc, desc = s.ascent_semitones, s.descent_semitones
    if any(x.denominator != 1 for x in asc + desc):
        raise NotOnGrid("maximal evenness is defined on the western grid only")
    for k in range(1, max(s.m, s.n) + 1):
        sums = _cyclic_window_sums(asc, k + 1) | _cyclic_window_sums(desc, k + 1)
        if max(sums) - min(sums) > 1:
            return False
    return True


def circular_rearrangement(s: Scale, k: int) -> Scale:
    """Rotate the ascent to start at degree ``k`` (0-based) and re-root there."""
    k %= s.m
    asc = s.ascent[k:] + s.ascent[:k]
    gm = generated_module(s)
    tonic = gm.ascent_degrees[k]
    if s.is_compatible:
        return make_scale(tonic, asc, None, s.grid)
    if tonic not in gm.descent_degrees:
        raise DomainError("new tonic is not a descending degree; rotation undefined")
    j = gm.descent_degrees.index(tonic)
    return make_scale(tonic, asc, s.descent[j:] + s.descent[:j], s.grid)


# lattice -----------------------------------------------------------------------------


def _combine(a: Scale, b: Scale, op) -> Scale:
    if a.tonic != b.tonic:
        raise NotParallel(f"scales on {a.tonic} and {b.tonic} are not parallel")
    asc = op(_partials(a.ascent_semitones), _partials(b.ascent_semitones))
    desc = op(_partials(a.descent_semitones), _partials(b.descent_semitones))
    grid = MODAL if MODAL in (a.grid, b.grid) else WESTERN
    return make_scale(
        a.tonic,
        _measures(_steps_from_partials(asc, 1)),
        _measures(_steps_from_partials(desc, -1)),
        grid,
    )


def scale_join(a: Scale, b: Scale) -> Scale:
    """Parallel scale whose degrees are those of either scale."""
    return _combine(a, b, frozenset.union)


def scale_meet(a: Scale, b: Scale) -> Scale:
    """Parallel scale whose degrees are those shared by both scales."""
    return _combine(a, b, frozenset.intersection)


def scale_inverse(s: Scale) -> Scale:
    """Swap the roles of ascent and descent, each read backwards and inverted."""
    asc = tuple(~r for r in reversed(s.descent))
    desc = tuple(~r for r in reversed(s.ascent))
    return Scale(s.tonic, asc, desc, s.grid)


def scale_leq(a: Scale, b: Scale) -> bool:
    """Lattice order: every degree of ``a`` is a degree of ``b``."""
    return scale_join(a, b) == b


# degrees, sensibility, tetrachords ------------------------------------------------


def sensible(s: Scale) -> tuple[bool, bool]:
    """Whether the ascent ends, and the descent begins, with a semitone."""
    eps = Pow2(Fraction(1, 12))
    return s.ascent[-1] == eps, ~s.descent[-1] == eps


@dataclass(frozen=True)
class Tetrachord:
    direction: int
    start: int  # 0-based index of the first step
    steps: tuple[Measure, Measure, Measure]
    components: frozenset[Note]


def tetrachords(s: Scale) -> list[Tetrachord]:
    """Every run of three consecutive steps inside one octave, both directions."""
    gm = generated_module(s)
    out = []
    for direction, steps, degrees in (
        (ASCENDING, s.ascent, gm.ascent_degrees),
        (DESCENDING, s.descent, gm.descent_degrees),
    ):
        cyc = degrees + (s.tonic,)
        for j in range(len(steps) - 2):
            out.append(Tetrachord(direction, j, tuple(steps[j:j + 3]), frozenset(cyc[j:j + 4])))
    return out


def disjoint_tetrachord_pairs(s: Scale) -> list[tuple[Tetrachord, Tetrachord]]:
    """Unordered pairs of tetrachords sharing no component except the tonic."""
    allowed = {s.tonic}
    return [
        (a, b) for a, b in combinations(tetrachords(s), 2)
        if a.components & b.components <= allowed
    ]


def triad_scale_based(
    triad: tuple[Measure, Measure], s: Scale, k: int, direction: int = ASCENDING
) -> bool:
    """Whether stacking ``triad`` on degree ``k`` (1-based) stays inside the scale."""
    gm = generated_module(s)
    degrees = gm.ascent_degrees if direction == ASCENDING else gm.descent_degrees
    if not 1 <= k <= len(degrees):
        raise DegreeOutOfRange(f"degree {k} outside 1..{len(degrees)}")
    a, b = (_semis(x) for x in triad)
    root = degrees[k - 1]
    if direction == ASCENDING:
        reached = (root, root + a, root + a + b)
    else:
        reached = (root, root - b, root - b - a)
    pool = set(degrees)
    return all(n in pool for n in reached)


# catalog ------------------------------------------------------------------------------

_h = Fraction(1, 2)

# name -> (ascent semitones, descent semitones or None, grid)
CATALOG: dict[str, tuple[tuple[Fraction, ...], tuple[Fraction, ...] | None, HarmonicGrid]] = {}


def _add(name, asc, desc=None, grid=WESTERN):
    CATALOG[name] = (
        tuple(Fraction(x) for x in asc),
        None if desc is None else tuple(Fraction(x) for x in desc),
        grid,
    )


_add("major", (2, 2, 1, 2, 2, 2, 1))
_add("natural-minor", (2, 1, 2, 2, 1, 2, 2))
_add("harmonic-minor", (2, 1, 2, 2, 1, 3, 1))
# ascends like the harmonic minor, descends like the natural minor
_add("melodic-minor", (2, 1, 2, 2, 1, 3, 1), (-2, -2, -1, -2, -2, -1, -2))
_add("pathetic-minor", (1, 2, 2, 2, 1, 2, 2))
_add("chromatic", (1,) * 12)
_add("neutral", (12,))
_add("whole-tone", (2,) * 6)

EASTERN: dict[str, tuple[Fraction, ...]] = {
    "shur": (3 * _h, 3 * _h, 2, 2, 1, 2, 2),
    "abuata": (3 * _h, 2, 2, 1, 2, 2, 3 * _h),
    "bayate-zand": (2, 2, 1, 2, 2, 3 * _h, 3 * _h),
    "nava": (2, 1, 2, 2, 3 * _h, 3 * _h, 2),
    "dashti": (1, 2, 2, 3 * _h, 3 * _h, 2, 2),
    "afshari": (2, 3 * _h, 3 * _h, 2, 2, 1, 2),
    "saba": (3 * _h, 3 * _h, 1, 3, 1, 2, 2),
    "saba-2": (3 * _h, 3 * _h, 3 * _h, 5 * _h, 1, 2, 2),
    "mahur": (2, 2, 1, 2, 2, 2, 1),
    "rast": (2, 2, 1, 2, 2, 1, 2),
    "homayun": (3 * _h, 5 * _h, 1, 2, 1, 2, 2),
    "homayun-2": (2, 3 * _h, 5 * _h, 1, 2, 1, 2),
    "esfahan": (2, 1, 2, 2, 3 * _h, 5 * _h, 1),
    "shushtari": (1, 3, 1, 2, 1, 2, 2),
    "segah": (2, 3 * _h, 3 * _h, 2, 3 * _h, 3 * _h, 2),
    "chaargah": (3 * _h, 5 * _h, 1, 2, 3 * _h, 5 * _h, 1),
}
for _name, _steps in EASTERN.items():
    _add(_name, _steps, None, MODAL)

_ALIASES = {"minor": "natural-minor", "aeolian": "natural-minor", "ionian": "major"}


def _normalize(name: str) -> str:
    key = name.strip().lower().replace("_", "-").replace(" ", "-")
    return _ALIASES.get(key, key)


def named_scale(name: str, tonic: Note = C) -> Scale:
    key = _normalize(name)
    if key not in CATALOG:
        raise UnknownName(f"no scale named {name!r}")
    asc, desc, grid = CATALOG[key]
    return scale_from_semitones(tonic, asc, desc, grid)


def catalog_names() -> list[str]:
    return list(CATALOG)


# text ---------------------------------------------------------------------------------


def format_scale(s: Scale) -> str:
    """``C: 2 2 1 2 2 2 1``, plus ``/ -2 -1 ...`` when the descent is not compatible."""
    text = f"{note_name(s.tonic)}: " + " ".join(str(x) for x in s.ascent_semitones)
    if not s.is_compatible:
        text += " / " + " ".join(str(x) for x in s.descent_semitones)
    return text


def parse_scale(text: str, grid: HarmonicGrid | None = None, line: int = 1) -> Scale:
    """Inverse of :func:`format_scale`.  Steps are semitone counts, possibly fractional;
    a lone ``/`` token separates an explicit descent."""
    head, sep, body = text.partition(":")
    if not sep:
        raise ParseError("expected '<tonic>: <steps>'", line, 1)
    m = _NOTE_RE.fullmatch(head.strip())
    if not m:
        raise ParseError(f"invalid tonic {head.strip()!r}", line, 1)
    tonic = _note_from_match(m)
    asc: list[Fraction] = []
    desc: list[Fraction] | None = None
    for tok in re.finditer(r"\S+", body):
        col = len(head) + 2 + tok.start()
        if tok.group(0) == "/":
            if desc is not None:
                raise ParseError("more than one '/' separator", line, col)
            desc = []
            continue
        try:
            value = Fraction(tok.group(0))
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"invalid step {tok.group(0)!r}", line, col) from None
        (asc if desc is None else desc).append(value)
    if desc is not None and not desc:
        raise ParseError("empty descent after '/'", line, len(text))
    return scale_from_semitones(tonic, asc, desc, grid)
