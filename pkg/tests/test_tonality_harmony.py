from fractions import Fraction
import math

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from amt.errors import NotHarmonic
from amt.harmony import (
    MODAL,
    TRITONE,
    WESTERN,
    HarmonicGrid,
    derive_epsilon,
    interval_species,
    is_harmonic,
    solve_rational,
)
from amt.measure import Approx, Pow2, Ratio
from amt.tonality import PitchClass, equitonal, octave_decompose, octave_shift


def test_equitonal():
    assert equitonal(PitchClass(Pow2(Fraction(7, 12))), PitchClass(Pow2(Fraction(31, 12))))
    assert not equitonal(PitchClass(Pow2(0)), PitchClass(Pow2(Fraction(7, 12))))
    assert equitonal(Ratio(3), Ratio(3, 8))
    assert equitonal(Approx(1.5), Approx(6.0))


def test_octave_shift_and_decompose():
    p = PitchClass(Pow2(Fraction(7, 12)))
    assert octave_shift(p, 2).ratio_to_base == Pow2(Fraction(31, 12))
    assert octave_decompose(Pow2(Fraction(31, 12))) == (2, Pow2(Fraction(7, 12)))
    assert octave_decompose(Ratio(3, 8)) == (-2, Ratio(3, 2))
    assert octave_decompose(Pow2(-1)) == (-1, Pow2(0))


@given(st.fractions(min_value=-6, max_value=6, max_denominator=48), st.integers(1, 50), st.integers(1, 50))
def test_decompose_invariant(q, p, r):
    m = Ratio(p, r) * Pow2(q)
    n, residue = octave_decompose(m)
    assert Pow2(0) <= residue < Pow2(1)
    assert Pow2(n) * residue == m
    lg = math.log2(float(m))
    if abs(lg - round(lg)) > 1e-9:
        assert n == math.floor(lg)


def test_grids():
    assert WESTERN.granularity == 12 and MODAL.granularity == 24
    assert HarmonicGrid.from_name("Modal") is MODAL
    assert is_harmonic(Pow2(Fraction(7, 12)))
    assert not is_harmonic(Pow2(Fraction(1, 24)))
    assert is_harmonic(Pow2(Fraction(1, 24)), MODAL)
    assert not is_harmonic(Ratio(3, 2), MODAL)


def test_solve_rational_matches_sympy():
    rows = [[Fraction(2), Fraction(1), Fraction(-1)], [Fraction(-3), Fraction(-1), Fraction(2)], [Fraction(-2), Fraction(1), Fraction(2)]]
    rhs = [Fraction(8), Fraction(-11), Fraction(-3)]
    ours = solve_rational(rows, rhs)
    theirs = sympy.Matrix(rows).LUsolve(sympy.Matrix(rhs))
    assert ours == [Fraction(str(v)) for v in theirs]


def test_epsilon_against_symbolic_oracle():
    e, x, y = sympy.symbols("e x y")
    sol = sympy.solve([6 * e + 2 * x + y - 1, 2 * e + x + y - sympy.Rational(1, 2), x - y], [e, x, y])
    d = derive_epsilon()
    assert d.epsilon == Pow2(Fraction(str(sol[e])))
    assert d.whole_tone == Pow2(Fraction(str(sol[x])))
    assert d.epsilon == Pow2(Fraction(1, 12))
    assert d.x == d.y == Pow2(Fraction(1, 6))


@pytest.mark.parametrize(
    "semis, name",
    [(0, "prime"), (1, "second"), (2, "second"), (3, "third"), (4, "third"), (5, "fourth"),
     (6, TRITONE), (7, "fifth"), (8, "sixth"), (9, "sixth"), (10, "seventh"), (11, "seventh"), (12, "octave")],
)
def test_species_table(semis, name):
    assert str(interval_species(Pow2(Fraction(semis, 12)))) == name


def test_compound_species():
    assert str(interval_species(Pow2(Fraction(19, 12)))) == "compound(fifth)"
    assert str(interval_species(Pow2(2))) == "compound(octave)"
    assert interval_species(Pow2(Fraction(-5, 12))).compound


def test_species_rejects_non_harmonic():
    with pytest.raises(NotHarmonic):
        interval_species(Ratio(3, 2))
    with pytest.raises(NotHarmonic):
        interval_species(Pow2(Fraction(1, 24)))


@pytest.mark.parametrize("semis", range(13))
def test_inversion_law(semis):
    a = interval_species(Pow2(Fraction(semis, 12)))
    b = interval_species(Pow2(1) / Pow2(Fraction(semis, 12)))
    assert any(x + y == 9 for x in a.ordinals for y in b.ordinals)
