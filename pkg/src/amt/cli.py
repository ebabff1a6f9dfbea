"""Command-line interface.

Every verb prints line-oriented ``key=value`` text.  Exit status is 0 on
success, 1 when the analysis itself fails and 2 on malformed input.
"""

from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction
from typing import Sequence

from .chords import classify_triad, parse_chord
from .errors import AnalysisError, NotHarmonic, NotOnGrid, ParseError, UnsupportedAxiom
from .harmony import HarmonicGrid, derive_epsilon
from .measure import parse_measure, semitone_exponent
from .melody import format_melody, infer_scales, melody_grid, parse_melody, transpose
from .model import AXIOM_IDS, check_axiom, default_seed
from .rhythm import classify, is_regular, parse_rhythm, signature, tempo
from .scales import (
    catalog_names,
    disjoint_tetrachord_pairs,
    format_scale,
    generated_module,
    is_maximally_even_scale,
    named_scale,
    parse_scale,
    sensible,
    tetrachords,
)


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _read_input(args) -> str:
    if args.text is not None and args.text != "-":
        return args.text
    return sys.stdin.read()


def _grid(args) -> HarmonicGrid | None:
    return HarmonicGrid.from_name(args.grid) if getattr(args, "grid", None) else None


def cmd_scale_analyze(args) -> None:
    s = parse_scale(_read_input(args).strip(), _grid(args))
    try:
        even = _yn(is_maximally_even_scale(s))
    except NotOnGrid:
        even = "n/a"
    asc, desc = sensible(s)
    gm = generated_module(s)
    print(f"scale={format_scale(s)}")
    print(f"grid={s.grid.label}")
    print(f"degrees={' '.join(str(n) for n in gm.ascent_degrees)}")
    print(f"compatible={_yn(s.is_compatible)}")
    print(f"maximally-even={even}")
    print(f"sensible=(asc {_yn(asc)}, desc {_yn(desc)})")
    print(f"tetrachords={len(tetrachords(s))}")
    print(f"disjoint-pairs={len(disjoint_tetrachord_pairs(s))}")
    if args.figure:
        from .plotting import plot_scale

        print(f"figure={plot_scale(s, args.figure)}")


def cmd_scale_list(args) -> None:
    for name in catalog_names():
        s = named_scale(name)
        print(f"{name}\t{s.grid.label}\t{format_scale(s)}")


_SEMITONES_RE = re.compile(r"[+-]?\d+(?:/\d+)?")


def _shift(text: str) -> Fraction:
    if _SEMITONES_RE.fullmatch(text.strip()):
        return Fraction(text)
    m = parse_measure(text)
    s = semitone_exponent(m)
    if s is None:
        raise NotHarmonic(f"{m} is not a harmonic measure")
    return s


def cmd_melody_transpose(args) -> None:
    melody = parse_melody(_read_input(args))
    by = _shift(args.by)
    grid = _grid(args) or (HarmonicGrid.MODAL if by.denominator != 1 else melody_grid(melody))
    print(format_melody(transpose(melody, by, grid)))


def cmd_melody_infer(args) -> None:
    melody = parse_melody(_read_input(args))
    for name, s in infer_scales(melody):
        print(f"{name}\t{format_scale(s)}")


def cmd_chord_classify(args) -> None:
    chord = parse_chord(_read_input(args).strip(), _grid(args))
    print(classify_triad(chord))


def cmd_rhythm_classify(args) -> None:
    r = parse_rhythm(_read_input(args).strip())
    if not is_regular(r):
        print("irregular, class=none")
        raise AnalysisError("an irrational onset admits no beat grid")
    n, _ = signature(r)
    print(f"regular, beats={n}, tempo={tempo(r)}, class={classify(r)}")
    if args.figure:
        from .plotting import plot_rhythm

        print(f"figure={plot_rhythm(r, args.figure)}")


def _axiom_list(text: str) -> list[int]:
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if not re.fullmatch(r"\d+(-\d+)?", part):
            raise ParseError(f"invalid axiom range {part!r}", 1, text.index(part) + 1)
        lo, _, hi = part.partition("-")
        out.extend(range(int(lo), int(hi or lo) + 1))
    return out


def cmd_axioms_check(args) -> None:
    ids = _axiom_list(args.axioms) if args.axioms else list(AXIOM_IDS)
    seed = default_seed() if args.seed is None else args.seed
    for k in ids:
        try:
            report = check_axiom(args.model, k, args.samples, seed)
        except UnsupportedAxiom as exc:
            print(f"AXIOM {k} {args.model} SKIP reason={exc}")
            continue
        print(report)


def cmd_epsilon_derive(args) -> None:
    d = derive_epsilon()
    print(f"epsilon={d.epsilon}")
    print(f"whole-tone={d.whole_tone}")
    print(f"x={d.x}")
    print(f"y={d.y}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="amt", description="Interval, scale, chord and rhythm analysis.")
    sub = p.add_subparsers(dest="verb", required=True)

    def verb(name, func, help_text, text=True, grid=False, figure=False):
        sp = sub.add_parser(name, help=help_text)
        if text:
            sp.add_argument("text", nargs="?", help="input text; read from stdin when omitted or '-'")
        if grid:
            sp.add_argument("--grid", choices=["western", "modal"], help="override the harmonic grid")
        if figure:
            sp.add_argument("--figure", metavar="PATH", help="also render a figure to PATH")
        sp.set_defaults(func=func)
        return sp

    verb("scale-analyze", cmd_scale_analyze, "analyse a scale such as 'C: 2 2 1 2 2 2 1'", grid=True, figure=True)
    verb("scale-list", cmd_scale_list, "list the scale catalog", text=False)
    t = verb("melody-transpose", cmd_melody_transpose, "transpose a melody", grid=True)
    t.add_argument("--by", required=True, help="semitones (e.g. 7, -5/2) or a measure (e.g. 2^7/12)")
    verb("melody-infer", cmd_melody_infer, "list scales a melody can be read in")
    verb("chord-classify", cmd_chord_classify, "classify a triad such as 'C4+E4+G4'", grid=True)
    verb("rhythm-classify", cmd_rhythm_classify, "classify a rhythm", figure=True)
    a = verb("axioms-check", cmd_axioms_check, "sample-check the pitch axioms on a model", text=False)
    a.add_argument("--model", default="cartesian", choices=["cartesian", "affine", "circle"])
    a.add_argument("--axioms", help="ids such as '1-10,12-20' (default: all)")
    a.add_argument("--samples", type=int, default=10_000)
    a.add_argument("--seed", type=int, default=None, help="defaults to $AMT_SEED or 0")
    verb("epsilon-derive", cmd_epsilon_derive, "derive the semitone from the gamme constraints", text=False)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except ParseError as exc:
        print(f"parse error at {exc.line}:{exc.column}: {exc.message}", file=sys.stderr)
        return 2
    except AnalysisError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
