"""Exception hierarchy.

Every analysis failure derives from :class:`AnalysisError`; malformed text
input raises :class:`ParseError`, which is kept separate so the command line
can map the two families to different exit codes.
"""

from __future__ import annotations


class AnalysisError(Exception):
    """Base class for domain errors raised by the analysis functions."""


class DomainError(AnalysisError, ValueError):
    pass


class NonExactPower(AnalysisError):
    pass


class UnsupportedAxiom(AnalysisError):
    pass


class EmptySet(AnalysisError, ValueError):
    pass


class NotHarmonic(AnalysisError):
    pass


class NotOnGrid(AnalysisError):
    pass


class OctaveProductViolation(AnalysisError):
    pass


class NonHarmonicStep(AnalysisError):
    pass


class EmptyTuple(AnalysisError):
    pass


class NotParallel(AnalysisError):
    pass


class DegreeOutOfRange(AnalysisError, IndexError):
    pass


class UnknownName(AnalysisError, KeyError):
    def __str__(self) -> str:  # KeyError would repr() the message
        return str(self.args[0]) if self.args else ""


class NoScaleFound(AnalysisError):
    pass


class SameScale(AnalysisError):
    pass


class NotAscending(AnalysisError):
    pass


class NotATriadShape(AnalysisError):
    pass


class NotAscendingMelody(AnalysisError):
    pass


class IrregularRhythm(AnalysisError):
    pass


class ParseError(ValueError):
    """Malformed text input, located by 1-based line and column."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(message)
        self.message = message
        self.line = line
        self.column = column

    def __str__(self) -> str:
        return f"{self.line}:{self.column}: {self.message}"
