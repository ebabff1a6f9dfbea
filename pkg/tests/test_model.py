import math

import pytest

from amt.errors import EmptySet, UnsupportedAxiom
from amt.model import (
    AXIOM_IDS,
    AxiomReport,
    check_all,
    check_axiom,
    congruent,
    convex_hull,
    identical_pitched,
    lower_pitched,
    spectrum,
    witness_violates,
)

PI = math.pi


def s(f):
    return (f, 1.0, 1.0)


def test_cartesian_relations():
    assert lower_pitched("cartesian", s(220), s(440))
    assert not lower_pitched("cartesian", s(440), s(440))
    assert congruent("cartesian", s(220), s(330), s(440), s(660))
    assert not congruent("cartesian", s(220), s(330), s(440), s(650))


def test_affine_relations():
    assert congruent("affine", s(1), s(2), s(5), s(4))
    assert not lower_pitched("affine", s(5), s(4))


def test_circle_relations():
    assert lower_pitched("circle", s(0), s(PI / 2))
    assert not lower_pitched("circle", s(0), s(3 * PI / 2))
    assert lower_pitched("circle", s(3 * PI / 2), s(0))
    assert identical_pitched("circle", s(0.3), s(0.3 + PI))
    assert congruent("circle", s(0), s(PI / 2), s(0), s(3 * PI / 2))


def test_spectrum_and_hull():
    assert spectrum((440.0, 2.0, 0.5)) == (440.0, 2.0, 0.5)
    assert convex_hull([s(3), s(1), s(2)]) == (s(1), s(3))
    with pytest.raises(EmptySet):
        convex_hull([])


def test_axiom_11_unsupported():
    for model in ("cartesian", "affine", "circle"):
        with pytest.raises(UnsupportedAxiom):
            check_axiom(model, 11)


def test_extended_axioms_need_cartesian():
    with pytest.raises(UnsupportedAxiom):
        check_axiom("circle", 15)
    with pytest.raises(UnsupportedAxiom):
        check_axiom("cartesian", 21)


def test_cartesian_passes_all_sampled_axioms():
    reports = check_all("cartesian", sample_count=500, seed=1)
    assert [r.axiom_id for r in reports] == [k for k in AXIOM_IDS if k != 11]
    assert all(r.passed for r in reports), [str(r) for r in reports if not r.passed]


@pytest.mark.parametrize("model", ["affine", "circle"])
def test_regularity_fails_with_witness(model):
    report = check_axiom(model, 9, 2000, seed=3, item=1)
    assert not report.passed
    assert report.witness is not None
    assert witness_violates(model, 9, report.item, report.witness)
    a, b, c, d = report.witness
    assert lower_pitched(model, a, b)
    assert congruent(model, a, b, c, d)
    assert not lower_pitched(model, c, d)


def test_circle_regularity_item_two_holds():
    assert check_axiom("circle", 9, 2000, seed=5, item=2).passed


def test_seeded_runs_are_deterministic():
    a = check_axiom("circle", 9, 1000, seed=7)
    b = check_axiom("circle", 9, 1000, seed=7)
    assert a == b


def test_seed_from_environment(monkeypatch):
    monkeypatch.setenv("AMT_SEED", "11")
    assert check_axiom("circle", 9, 1000) == check_axiom("circle", 9, 1000, seed=11)


def test_report_format():
    r = AxiomReport(9, "affine", False, 4, (s(1), s(2), s(5), s(4)), 1)
    assert str(r) == "AXIOM 9 affine FAIL samples=4 witness=((1,1.0,1.0),(2,1.0,1.0),(5,1.0,1.0),(4,1.0,1.0)) item=1"
    assert str(AxiomReport(1, "cartesian", True, 10)) == "AXIOM 1 cartesian PASS samples=10"


def test_hand_witnesses_reevaluate():
    assert witness_violates("affine", 9, 1, (s(1), s(2), s(5), s(4)))
    assert witness_violates("circle", 9, 1, (s(0), s(PI / 2), s(0), s(3 * PI / 2)))
    assert not witness_violates("cartesian", 9, 1, (s(1), s(2), s(5), s(10)))
