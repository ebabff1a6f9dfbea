import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from amt.errors import DomainError, IrregularRhythm, ParseError
from amt.notes import GridPitch
from amt.rhythm import (
    CLASSES,
    IrrationalOnset,
    RhythmEvent,
    classify,
    classify_beats,
    coarsest_refinement,
    format_rhythm,
    is_regular,
    make_rhythm,
    parse_rhythm,
    regular_by_differences,
    regular_by_gaps,
    regular_by_onsets,
    scale_time,
    sig_concat,
    sig_triple,
    signature,
    tempo,
)

C4 = GridPitch(0)


def rhythm(span, onsets, rests=()):
    return make_rhythm(span, [RhythmEvent(Fraction(t), None if i in rests else C4) for i, t in enumerate(onsets)])


def test_example_triplets():
    r = parse_rhythm("span=1; 0:C4 1/3:D4 2/3:E4")
    assert signature(r) == (3, 1)
    assert tempo(r) == 3
    assert classify(r) == "simple"


def test_five_onsets_is_complex():
    r = rhythm(1, [Fraction(k, 5) for k in range(5)])
    assert signature(r) == (5, 1)
    assert tempo(r) == 5
    assert classify(r) == "complex"


@pytest.mark.parametrize(
    "n, cls",
    [(0, "silence"), (1, "trivial"), (2, "simple"), (3, "simple"), (4, "complex"), (5, "complex"),
     (6, "compound"), (9, "compound"), (12, "compound"), (7, "complex"), (8, "complex")],
)
def test_classify_beats(n, cls):
    assert classify_beats(n) == cls


def test_silence_and_trivial():
    r = rhythm(2, [0], rests={0})
    assert signature(r) == (0, 2) and tempo(r) == 0 and classify(r) == "silence"
    assert classify(rhythm(2, [0])) == "trivial"


def test_rest_does_not_refine():
    r = rhythm(1, [0, Fraction(1, 4), Fraction(1, 2)], rests={1})
    assert coarsest_refinement(r).beats == 2
    assert coarsest_refinement(r).boundaries == [0, Fraction(1, 2), 1]


def test_irregular():
    r = make_rhythm(1, [RhythmEvent(Fraction(0), C4), RhythmEvent(IrrationalOnset(math.pi / 4), C4)])
    assert not is_regular(r)
    with pytest.raises(IrregularRhythm):
        classify(r)
    silent_irr = make_rhythm(1, [RhythmEvent(Fraction(0), C4), RhythmEvent(IrrationalOnset(math.pi / 4), None)])
    assert is_regular(silent_irr)


def test_make_rhythm_validation():
    with pytest.raises(DomainError):
        rhythm(1, [Fraction(1, 2)])
    with pytest.raises(DomainError):
        rhythm(1, [0, Fraction(1, 2), Fraction(1, 4)])
    with pytest.raises(DomainError):
        rhythm(1, [0, 1])
    with pytest.raises(DomainError):
        rhythm(0, [0])


def test_signature_algebra():
    assert sig_triple((2, Fraction(1))) == (6, 1)
    assert sig_concat((2, Fraction(1)), (3, Fraction(2))) == (5, 3)


@pytest.mark.parametrize(
    "text",
    ["span=1; 0:C4 1/4:E4 1/2:rest 3/4:G4", "span=3/2; 0:C4 irr(0.7853981633974483):D4"],
)
def test_text_round_trip(text):
    assert format_rhythm(parse_rhythm(text)) == text


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_rhythm("0:C4")
    with pytest.raises(ParseError) as exc:
        parse_rhythm("span=1; 0:C4 x:D4")
    assert exc.value.column == 14
    with pytest.raises(ParseError):
        parse_rhythm("span=1; 1/2:C4")


onset_sets = st.lists(st.fractions(min_value=0, max_value=1, max_denominator=12), max_size=8, unique=True)


@st.composite
def rhythms(draw):
    span = draw(st.fractions(min_value=Fraction(1, 4), max_value=4, max_denominator=6))
    rel = sorted({x for x in draw(onset_sets) if x < 1} | {Fraction(0)})
    events = []
    for i, x in enumerate(rel):
        silent = draw(st.booleans()) and draw(st.booleans())
        onset = x * span
        if i > 0 and draw(st.integers(0, 9)) == 0:
            onset = IrrationalOnset(float(onset) + 1e-9)
        events.append(RhythmEvent(onset, None if silent else C4))
    return make_rhythm(span, events)


@given(rhythms())
def test_three_criteria_agree(r):
    assert regular_by_differences(r) == regular_by_onsets(r) == regular_by_gaps(r)


@given(rhythms())
def test_classification_total_and_exclusive(r):
    if not is_regular(r):
        return
    c = classify(r)
    assert c in CLASSES
    n = signature(r)[0]
    flags = [n == 0, n == 1, n in (2, 3), n >= 6 and n % 3 == 0, n in (4, 5) or (n >= 7 and n % 3 != 0)]
    assert sum(flags) == 1
    assert CLASSES[flags.index(True)] == c


@given(rhythms(), st.fractions(min_value=Fraction(1, 8), max_value=8, max_denominator=8))
def test_time_scaling_invariance(r, c):
    s = scale_time(r, c)
    assert is_regular(s) == is_regular(r)
    if is_regular(r):
        assert classify(s) == classify(r)
        assert signature(s)[0] == signature(r)[0]


@given(rhythms())
def test_onsets_fall_on_beats(r):
    if not is_regular(r):
        return
    grid = coarsest_refinement(r)
    for e in r.events:
        if not e.silent:
            assert (e.onset / r.span * grid.beats).denominator == 1
