"""Concrete models of sounds and a sampling checker for the pitch axioms.

A sound is a triple ``(f1, f2, f3)``.  Three interpretations of pitch order
and interval congruence are provided:

* ``cartesian``: f1 is a frequency; congruence is equality of ratios.
* ``affine``: f1 is a positive real; ``[a,b] ~= [c,d]`` iff ``2b-a = 2d-c``.
* ``circle``: f1 is an angle; ``x`` is lower than ``y`` when the
  counterclockwise arc from ``x`` to ``y`` is strictly between 0 and pi.

Universal axioms are checked on seeded random samples; existential ones are
checked with constructed witnesses.  A failing report carries the sampled
tuple, which :func:`witness_violates` re-evaluates.
"""

from __future__ import annotations

import math
import os
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import EmptySet, UnsupportedAxiom
from .measure import REL_TOL

Sound = tuple[float, float, float]

TAU = 2 * math.pi
DEFAULT_SAMPLES = 10_000
ANGLE_TOL = 1e-9


def default_seed() -> int:
    return int(os.environ.get("AMT_SEED", "0"))


def _close(a: float, b: float) -> bool:
    return math.isclose(a, b, rel_tol=REL_TOL, abs_tol=0.0)


# models ------------------------------------------------------------------------


class Model:
    name = ""
    extended = False  # interprets tonality and harmony

    def lower(self, x: Sound, y: Sound) -> bool:
        raise NotImplementedError

    def identical(self, x: Sound, y: Sound) -> bool:
        return not self.lower(x, y) and not self.lower(y, x)

    def congruent(self, a: Sound, b: Sound, c: Sound, d: Sound) -> bool:
        raise NotImplementedError

    def motion(self, x: Sound, y: Sound, a: Sound) -> list[Sound]:
        """Sounds ``b`` with ``[x,y] ~= [a,b]``, one per identity class."""
        raise NotImplementedError

    def back_motion(self, x: Sound, y: Sound, b: Sound) -> list[Sound]:
        """Sounds ``a`` with ``[a,b] ~= [x,y]``."""
        raise NotImplementedError

    def neighbours(self, x: Sound) -> tuple[Sound, Sound]:
        """A sound below and a sound above ``x``."""
        raise NotImplementedError

    def between(self, x: Sound, y: Sound) -> Sound:
        raise NotImplementedError

    def sample(self, rng: random.Random) -> Sound:
        raise NotImplementedError


def _with_pitch(s: Sound, f1: float) -> Sound:
    return (f1, s[1], s[2])


class _LineModel(Model):
    """Shared behaviour of the two models whose pitch is a positive real."""

    def lower(self, x, y):
        return x[0] < y[0] and not _close(x[0], y[0])

    def identical(self, x, y):
        return _close(x[0], y[0])

    def neighbours(self, x):
        return _with_pitch(x, x[0] * 0.5), _with_pitch(x, x[0] * 1.5)

    def between(self, x, y):
        return _with_pitch(x, (x[0] + y[0]) / 2)

    def sample(self, rng):
        return (2 ** rng.uniform(4, 14), rng.uniform(0.1, 10.0), rng.uniform(0.1, 10.0))


class CartesianModel(_LineModel):
    name = "cartesian"
    extended = True

    def congruent(self, a, b, c, d):
        return _close(b[0] / a[0], d[0] / c[0])

    def motion(self, x, y, a):
        return [_with_pitch(a, a[0] * y[0] / x[0])]

    def back_motion(self, x, y, b):
        return [_with_pitch(b, b[0] * x[0] / y[0])]


class AffineModel(_LineModel):
    name = "affine"

    def congruent(self, a, b, c, d):
        u, v = 2 * b[0] - a[0], 2 * d[0] - c[0]
        scale = max(abs(a[0]), abs(b[0]), abs(c[0]), abs(d[0]))
        return abs(u - v) <= REL_TOL * scale * 4

    def motion(self, x, y, a):
        f = (2 * y[0] - x[0] + a[0]) / 2
        return [_with_pitch(a, f)] if f > 0 else []

    def back_motion(self, x, y, b):
        f = 2 * b[0] - 2 * y[0] + x[0]
        return [_with_pitch(b, f)] if f > 0 else []


def _arc(x: float, y: float) -> float:
    return (y - x) % TAU


def _near_multiple(angle: float, period: float) -> bool:
    r = angle % period
    return r < ANGLE_TOL or period - r < ANGLE_TOL


class CircleModel(Model):
    name = "circle"

    def lower(self, x, y):
        a = _arc(x[0], y[0])
        return ANGLE_TOL < a < math.pi - ANGLE_TOL

    def identical(self, x, y):
        return _near_multiple(_arc(x[0], y[0]), math.pi)

    def congruent(self, a, b, c, d):
        return _near_multiple(_arc(a[0], b[0]) - _arc(c[0], d[0]), math.pi)

    def motion(self, x, y, a):
        f = (a[0] + _arc(x[0], y[0])) % TAU
        return [_with_pitch(a, f), _with_pitch(a, (f + math.pi) % TAU)]

    def back_motion(self, x, y, b):
        f = (b[0] - _arc(x[0], y[0])) % TAU
        return [_with_pitch(b, f), _with_pitch(b, (f + math.pi) % TAU)]

    def neighbours(self, x):
        return _with_pitch(x, (x[0] - math.pi / 4) % TAU), _with_pitch(x, (x[0] + math.pi / 4) % TAU)

    def between(self, x, y):
        return _with_pitch(x, (x[0] + _arc(x[0], y[0]) / 2) % TAU)

    def sample(self, rng):
        return (rng.uniform(0, TAU), rng.uniform(0.1, 10.0), rng.uniform(0.1, 10.0))


MODELS: dict[str, Model] = {m.name: m for m in (CartesianModel(), AffineModel(), CircleModel())}


def get_model(name: str | Model) -> Model:
    if isinstance(name, Model):
        return name
    try:
        return MODELS[name.lower()]
    except KeyError:
        raise UnsupportedAxiom(f"unknown model {name!r}") from None


def lower_pitched(model: str | Model, x: Sound, y: Sound) -> bool:
    return get_model(model).lower(x, y)


def identical_pitched(model: str | Model, x: Sound, y: Sound) -> bool:
    return get_model(model).identical(x, y)


def congruent(model: str | Model, a: Sound, b: Sound, c: Sound, d: Sound) -> bool:
    return get_model(model).congruent(a, b, c, d)


# timbre, tonality and harmony in the cartesian model -----------------------------


def spectrum(x: Sound) -> tuple[float, float, float]:
    """``(period, diameter, offset)`` of the sound's colour function."""
    return x[0], x[1], x[2]


def colour(x: Sound) -> Callable[[float], float]:
    """A periodic waveform with period ``f1``, range diameter ``f2`` and mean ``f3``."""
    period, diameter, offset = spectrum(x)
    return lambda t: offset + diameter / 2 * math.sin(TAU * t / period)


def equitonal_sounds(x: Sound, y: Sound) -> bool:
    k = math.log2(x[0] / y[0])
    return abs(k - round(k)) < 1e-9


def octave_above(x: Sound) -> Sound:
    return _with_pitch(x, 2 * x[0])


def harmonic_ratio(r: float) -> bool:
    s = 12 * math.log2(r)
    return abs(s - round(s)) < 1e-9


def convex_hull(sounds: Iterable[Sound]) -> tuple[Sound, Sound]:
    """Lowest and highest sound (by ``f1``) of a finite set."""
    ss = list(sounds)
    if not ss:
        raise EmptySet("convex hull of no sounds")
    return min(ss, key=lambda s: s[0]), max(ss, key=lambda s: s[0])


# axioms ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AxiomCheck:
    axiom_id: int
    item: int
    sampler: Callable[[Model, random.Random], tuple]
    holds: Callable[[Model, tuple], bool]
    exists: bool = False  # pass as soon as one sample holds
    extended: bool = False  # needs tonality/harmony, cartesian only


def _ordered_pair(m: Model, rng: random.Random) -> tuple[Sound, Sound]:
    while True:
        x, y = m.sample(rng), m.sample(rng)
        if m.lower(x, y):
            return x, y
        if m.lower(y, x):
            return y, x


def _ordered_triple(m: Model, rng: random.Random) -> tuple[Sound, Sound, Sound]:
    while True:
        a, c = _ordered_pair(m, rng)
        b = m.between(a, c)
        if rng.random() < 0.5:
            b = _with_pitch(b, b[0] + (rng.random() - 0.5) * 1e-3 * abs(c[0] - a[0]))
        if m.lower(a, b) and m.lower(b, c):
            return a, b, c


def _sometimes_congruent(m: Model, rng: random.Random, a: Sound, b: Sound) -> tuple[Sound, Sound]:
    """A random ``[c,d]``, congruent to ``[a,b]`` about half of the time."""
    c = m.sample(rng)
    if rng.random() < 0.5:
        options = m.motion(a, b, c)
        if options:
            return c, rng.choice(options)
    return c, m.sample(rng)


def _s_x(m, rng):
    return (m.sample(rng),)


def _s_xy(m, rng):
    return m.sample(rng), m.sample(rng)


def _s_xyz(m, rng):
    return m.sample(rng), m.sample(rng), m.sample(rng)


def _s_separation(m, rng):
    x, y = _ordered_pair(m, rng)
    z = m.sample(rng) if rng.random() < 0.5 else _with_pitch(m.sample(rng), x[0])
    return x, y, z


def _h_separation(m, w):
    x, y, z = w
    return not (m.lower(x, y) and m.identical(x, z) and m.identical(y, z))


def _h_between_1(m, w):
    (x,) = w
    a, b = m.neighbours(x)
    return m.lower(a, x) and m.lower(x, b)


def _s_pair(m, rng):
    return _ordered_pair(m, rng)


def _h_between_2(m, w):
    x, y = w
    a = m.between(x, y)
    return m.lower(x, a) and m.lower(a, y)


def _s_quad(m, rng):
    a, b = m.sample(rng), m.sample(rng)
    return (a, b) + _sometimes_congruent(m, rng, a, b)


def _s_transitive_congruence(m, rng):
    a, b = m.sample(rng), m.sample(rng)
    c, d = _sometimes_congruent(m, rng, a, b)
    e, f = _sometimes_congruent(m, rng, c, d)
    return a, b, c, d, e, f


def _h_transitive_congruence(m, w):
    a, b, c, d, e, f = w
    return not (m.congruent(a, b, c, d) and m.congruent(c, d, e, f)) or m.congruent(a, b, e, f)


def _s_motion(m, rng):
    x, y, a = _s_xyz(m, rng)
    return x, y, a, m.sample(rng)


def _h_motion(m, w):
    x, y, a, probe = w
    options = m.motion(x, y, a)
    if not options:
        return False
    b = options[0]
    if not all(m.congruent(x, y, a, o) and m.identical(b, o) for o in options):
        return False
    return not m.congruent(x, y, a, probe) or m.identical(b, probe)


def _s_regular(m, rng):
    a, b = _ordered_pair(m, rng)
    return (a, b) + _sometimes_congruent(m, rng, a, b)


def _h_regular_1(m, w):
    a, b, c, d = w
    return not (m.lower(a, b) and m.congruent(a, b, c, d)) or m.lower(c, d)


def _h_regular_2(m, w):
    a, b, c, d = w
    return not m.lower(a, b) or m.congruent(a, b, c, d) == m.congruent(b, a, d, c)


def _s_addition(m, rng):
    a, b, c = _ordered_triple(m, rng)
    a2 = m.sample(rng)
    return a, b, c, a2


def _h_addition_1(m, w):
    a, b, c, a2 = w
    for b2 in m.motion(a, b, a2):
        for c2 in m.motion(b, c, b2):
            if not m.congruent(a, c, a2, c2):
                return False
    return True


def _h_addition_2(m, w):
    # [a,b] ~= [b',a'] and [b,c] ~= [c',b']  =>  [a,c] ~= [c',a']
    a, b, c, b2 = w
    for a2 in m.motion(a, b, b2):
        for c2 in m.back_motion(b, c, b2):
            if not m.congruent(a, c, c2, a2):
                return False
    return True


def _s_loudness(m, rng):
    return m.sample(rng), (rng.uniform(1e-3, 1e3),)


def _h_loudness(m, w):
    s, (r,) = w
    x = (s[0], r, s[2])
    return m.identical(x, s) and x[1] == r


def _h_colour(m, w):
    (x,) = w
    g = colour(x)
    period, diameter, _ = spectrum(x)
    ts = [period * k / 16 for k in range(16)]
    periodic = all(math.isclose(g(t), g(t + period), rel_tol=1e-9, abs_tol=1e-9) for t in ts)
    measured = g(period / 4) - g(3 * period / 4)
    return periodic and math.isclose(measured, diameter, rel_tol=1e-9) and measured > 0


def _s_extensionality(m, rng):
    x = m.sample(rng)
    if rng.random() < 0.25:
        return x, x
    y = list(x)
    y[rng.randrange(3)] = m.sample(rng)[rng.randrange(3)]
    return x, tuple(y)


def _h_extensionality(m, w):
    x, y = w
    if x == y:
        return True
    gx, gy = colour(x), colour(y)
    probes = [0.0, x[0] / 4, y[0] / 4, x[0] / 8, y[0] / 8, x[0] / 3]
    return any(gx(t) != gy(t) for t in probes)


def _s_tonal_1(m, rng):
    s = m.sample(rng)
    if rng.random() < 0.5:
        return s, (s[0], rng.uniform(0.1, 10), rng.uniform(0.1, 10))
    return s, m.sample(rng)


def _h_tonal_1(m, w):
    x, y = w
    return not m.identical(x, y) or equitonal_sounds(x, y)


def _s_tonal_2(m, rng):
    z = m.sample(rng)
    x = _with_pitch(m.sample(rng), z[0] * 2.0 ** rng.randint(-3, 3))
    y = _with_pitch(m.sample(rng), z[0] * 2.0 ** rng.randint(-3, 3))
    if rng.random() < 0.3:
        y = m.sample(rng)
    return x, y, z


def _h_tonal_2(m, w):
    x, y, z = w
    return not (equitonal_sounds(x, z) and equitonal_sounds(y, z)) or equitonal_sounds(x, y)


def _h_uniformity(m, w):
    s, t = w
    return all(m.identical(u, octave_above(t)) for u in m.motion(s, octave_above(s), t))


def _s_harmonic_pair(m, rng):
    a = m.sample(rng)
    b = _with_pitch(m.sample(rng), a[0] * 2.0 ** (rng.randint(1, 36) / 12))
    c = m.sample(rng)
    return a, b, c


def _h_harmony_1(m, w):
    a, b, c = w
    if not harmonic_ratio(b[0] / a[0]):
        return True
    return all(harmonic_ratio(d[0] / c[0]) for d in m.motion(a, b, c))


def _h_harmony_2(m, w):
    a, b, _ = w
    return not harmonic_ratio(b[0] / a[0]) or harmonic_ratio(a[0] / b[0])


def _s_free_pair(m, rng):
    k = rng.randint(1, 48)
    k2 = rng.choice([1, -1]) * rng.randint(1, 48)
    return (2.0 ** (k / 12), 2.0 ** (k2 / 12)),


def _h_operational(m, w):
    ((r, r2),) = w
    return harmonic_ratio(r * r2)


def _s_diatonic(m, rng):
    alpha = 2.0 ** (1 / 12)
    beta = 1.0 + rng.random() * (alpha - 1.0)
    harmonic_beta = 2.0 ** (rng.randint(1, 48) / 12)
    return (alpha, beta, harmonic_beta),


def _h_diatonic(m, w):
    ((alpha, beta, harmonic_beta),) = w
    if not (alpha > 1 and harmonic_ratio(alpha)):
        return False
    if 1 < beta < alpha and not math.isclose(beta, alpha) and harmonic_ratio(beta):
        return False
    return harmonic_beta >= alpha or math.isclose(harmonic_beta, alpha)


def _s_none(m, rng):
    return ()


def _h_gamme(m, w):
    from .harmony import derive_epsilon
    from .measure import Pow2
    from .scales import (
        Mode,
        disjoint_tetrachord_pairs,
        is_maximally_even_mode,
        named_scale,
        sensible,
        triad_scale_based,
    )

    s = named_scale("major")
    eps = derive_epsilon().epsilon
    equal_pairs = [p for p in disjoint_tetrachord_pairs(s) if p[0].steps == p[1].steps]
    return (
        s.m == 7
        and s.is_compatible
        and is_maximally_even_mode(Mode.of(s.ascent))
        and sensible(s) == (True, False)
        and s.ascent[-1] == eps
        and bool(equal_pairs)
        and triad_scale_based((Pow2(Fraction(4, 12)), Pow2(Fraction(3, 12))), s, 1)
    )


def _h_existence(m, w):
    x, y = w
    return m.lower(x, y) or m.lower(y, x)


AXIOM_CHECKS: list[AxiomCheck] = [
    AxiomCheck(1, 1, _s_x, lambda m, w: not m.lower(w[0], w[0])),
    AxiomCheck(2, 1, _s_xyz, lambda m, w: not (m.lower(w[0], w[1]) and m.lower(w[1], w[2])) or m.lower(w[0], w[2])),
    AxiomCheck(3, 1, _s_xy, _h_existence, exists=True),
    AxiomCheck(4, 1, _s_separation, _h_separation),
    AxiomCheck(5, 1, _s_x, _h_between_1),
    AxiomCheck(5, 2, _s_pair, _h_between_2),
    AxiomCheck(6, 1, _s_xy, lambda m, w: m.congruent(w[0], w[1], w[0], w[1])),
    AxiomCheck(7, 1, _s_transitive_congruence, _h_transitive_congruence),
    AxiomCheck(8, 1, _s_motion, _h_motion),
    AxiomCheck(9, 1, _s_regular, _h_regular_1),
    AxiomCheck(9, 2, _s_regular, _h_regular_2),
    AxiomCheck(10, 1, _s_addition, _h_addition_1),
    AxiomCheck(10, 2, _s_addition, _h_addition_2),
    AxiomCheck(12, 1, _s_loudness, _h_loudness, extended=True),
    AxiomCheck(13, 1, _s_x, _h_colour, extended=True),
    AxiomCheck(14, 1, _s_extensionality, _h_extensionality, extended=True),
    AxiomCheck(15, 1, _s_tonal_1, _h_tonal_1, extended=True),
    AxiomCheck(15, 2, _s_tonal_2, _h_tonal_2, extended=True),
    AxiomCheck(16, 1, _s_xy, _h_uniformity, extended=True),
    AxiomCheck(17, 1, _s_harmonic_pair, _h_harmony_1, extended=True),
    AxiomCheck(17, 2, _s_harmonic_pair, _h_harmony_2, extended=True),
    AxiomCheck(18, 1, _s_free_pair, _h_operational, extended=True),
    AxiomCheck(19, 1, _s_diatonic, _h_diatonic, extended=True),
    AxiomCheck(20, 1, _s_none, _h_gamme, exists=True, extended=True),
]

AXIOM_IDS = tuple(range(1, 21))


def axiom_items(axiom_id: int) -> list[AxiomCheck]:
    if axiom_id == 11:
        raise UnsupportedAxiom("axiom 11 (continuity) is inherited from the model, not sampled")
    checks = [c for c in AXIOM_CHECKS if c.axiom_id == axiom_id]
    if not checks:
        raise UnsupportedAxiom(f"no axiom numbered {axiom_id}")
    return checks


@dataclass(frozen=True)
class AxiomReport:
    axiom_id: int
    model: str
    passed: bool
    samples: int
    witness: tuple | None = None
    item: int | None = None

    def __str__(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        text = f"AXIOM {self.axiom_id} {self.model} {verdict} samples={self.samples}"
        if self.witness is not None:
            text += f" witness={_fmt_witness(self.witness)}"
            if self.item is not None:
                text += f" item={self.item}"
        return text


def _fmt_witness(w) -> str:
    if isinstance(w, tuple):
        return "(" + ",".join(_fmt_witness(v) for v in w) + ")"
    return repr(w)


def check_axiom(
    model: str | Model,
    axiom_id: int,
    sample_count: int = DEFAULT_SAMPLES,
    seed: int | None = None,
    item: int | None = None,
) -> AxiomReport:
    """Check one axiom (optionally one item of it) against a model."""
    m = get_model(model)
    checks = axiom_items(axiom_id)
    if item is not None:
        checks = [c for c in checks if c.item == item]
        if not checks:
            raise UnsupportedAxiom(f"axiom {axiom_id} has no item {item}")
    if any(c.extended for c in checks) and not m.extended:
        raise UnsupportedAxiom(f"the {m.name} model does not interpret axiom {axiom_id}")
    rng = random.Random(default_seed() if seed is None else seed)
    total = 0
    for c in checks:
        if c.exists:
            found = None
            for _ in range(sample_count):
                total += 1
                w = c.sampler(m, rng)
                if c.holds(m, w):
                    found = w
                    break
            if found is None:
                return AxiomReport(axiom_id, m.name, False, total, None, c.item)
            continue
        for _ in range(sample_count):
            total += 1
            w = c.sampler(m, rng)
            if not c.holds(m, w):
                return AxiomReport(axiom_id, m.name, False, total, w, c.item)
    return AxiomReport(axiom_id, m.name, True, total)


def witness_violates(model: str | Model, axiom_id: int, item: int, witness: tuple) -> bool:
    """Re-evaluate a reported witness: True when it indeed breaks the axiom."""
    m = get_model(model)
    check = next(c for c in axiom_items(axiom_id) if c.item == item)
    return not check.holds(m, witness)


def check_all(
    model: str | Model,
    axiom_ids: Sequence[int] = AXIOM_IDS,
    sample_count: int = DEFAULT_SAMPLES,
    seed: int | None = None,
) -> list[AxiomReport]:
    """Reports for every requested axiom the model can interpret."""
    out = []
    for k in axiom_ids:
        try:
            out.append(check_axiom(model, k, sample_count, seed))
        except UnsupportedAxiom:
            continue
    return out
