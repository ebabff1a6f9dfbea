"""Exact interval arithmetic, scales, melodies, chords and rhythms on harmonic grids."""

from .errors import AnalysisError, ParseError
from .harmony import MODAL, WESTERN, HarmonicGrid, derive_epsilon, interval_species, is_harmonic
from .measure import Approx, Measure, Pow2, Ratio, parse_measure
from .notes import GridPitch, Note, note_name
from .scales import Scale, make_scale, named_scale, parse_scale

__all__ = [
    "AnalysisError",
    "Approx",
    "GridPitch",
    "HarmonicGrid",
    "MODAL",
    "Measure",
    "Note",
    "ParseError",
    "Pow2",
    "Ratio",
    "Scale",
    "WESTERN",
    "derive_epsilon",
    "interval_species",
    "is_harmonic",
    "make_scale",
    "named_scale",
    "note_name",
    "parse_measure",
    "parse_scale",
]
