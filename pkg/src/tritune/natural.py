"""Five-limit just scale built solely from harmonic division.

A point B divides a string AD harmonically against an interior point C when
AC/CB = AD/BD; then AB is the harmonic mean of AC and AD, and because
frequency is inversely proportional to string length, the frequency of AB is
the arithmetic mean of the frequencies of AC and AD.  Iterating that single
construction from the octave produces SOL, MI, RE; a unique pair FA/LA closes
two octave proportions; and a brute-force search shows exactly one admissible
SI.  The result is the eight-degree just diatonic scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .equal import EtPitch, compare_fraction_to_et
from .errors import PropositionViolationError, TuningError
from .intervals import NoteName
from .ratio import is_five_smooth, is_perfect_nth_power

RationalLike = Union[int, Fraction]

#: the just diatonic degrees, ascending, with their names
DIATONIC_DEGREES = (
    ("DO", Fraction(1)),
    ("RE", Fraction(9, 8)),
    ("MI", Fraction(5, 4)),
    ("FA", Fraction(4, 3)),
    ("SOL", Fraction(3, 2)),
    ("LA", Fraction(5, 3)),
    ("SI", Fraction(15, 8)),
    ("DO", Fraction(2)),
)


def _positive_fraction(x: RationalLike, what: str) -> Fraction:
    f = Fraction(x)
    if f <= 0:
        raise ValueError(f"{what} must be positive, got {x}")
    return f


@dataclass(frozen=True)
class MeanTriple:
    """Arithmetic, geometric and harmonic means of a positive pair.

    The geometric mean is kept as its radicand a*b, which is all the
    mean-proportional identity m_g**2 == m_a * m_h ever needs; an exact
    rational value is available iff the radicand is a perfect square.
    """

    arithmetic: Fraction
    harmonic: Fraction
    geometric_squared: Fraction

    def geometric_exact(self) -> Optional[Fraction]:
        sq = self.geometric_squared
        ok_n, root_n = is_perfect_nth_power(sq.numerator, 2)
        ok_d, root_d = is_perfect_nth_power(sq.denominator, 2)
        if ok_n and ok_d:
            return Fraction(root_n, root_d)
        return None

    @property
    def geometric(self) -> Union[Fraction, float]:
        exact = self.geometric_exact()
        return exact if exact is not None else math.sqrt(float(self.geometric_squared))


def means(a: RationalLike, b: RationalLike) -> MeanTriple:
    """The three classical means of two positive rationals."""
    fa = _positive_fraction(a, "a")
    fb = _positive_fraction(b, "b")
    return MeanTriple(
        arithmetic=(fa + fb) / 2,
        harmonic=2 * fa * fb / (fa + fb),
        geometric_squared=fa * fb,
    )


@dataclass(frozen=True)
class HarmonicDivision:
    """Lengths AC < AB < AD with AB the harmonic mean of AC and AD."""

    ac: Fraction
    ad: Fraction
    ab: Fraction


def harmonic_divide(ac: RationalLike, ad: RationalLike) -> HarmonicDivision:
    """Place the harmonic point B between C and D on the string AD.

    The defining proportion AC/CB == AD/BD is re-checked exactly on the
    result before it is returned.
    """
    fac = _positive_fraction(ac, "AC")
    fad = _positive_fraction(ad, "AD")
    if fac >= fad:
        raise TuningError(f"AC must be shorter than AD, got AC={fac}, AD={fad}")
    ab = means(fac, fad).harmonic
    cb = ab - fac
    bd = fad - ab
    if not (cb > 0 and bd > 0 and fac * bd == fad * cb):
        raise PropositionViolationError("harmonic division proportion failed")
    return HarmonicDivision(fac, fad, ab)


def frequency_of_division(f_ac: RationalLike, f_ad: RationalLike) -> Fraction:
    """Frequency of the harmonic point: the mean of the two frequencies.

    Inverse proportionality between string length and frequency turns the
    harmonic mean of lengths into the arithmetic mean of frequencies.
    """
    fa = _positive_fraction(f_ac, "frequency")
    fb = _positive_fraction(f_ad, "frequency")
    return (fa + fb) / 2


@dataclass(frozen=True)
class DerivationStep:
    inputs: tuple[str, str]
    input_values: tuple[Fraction, Fraction]
    result_name: str
    result: Fraction

    def __str__(self) -> str:
        a, b = self.inputs
        return f"mean({a}, {b}) -> {self.result_name} = {self.result}"


@dataclass(frozen=True)
class CoreScale:
    """The sounds reachable by iterating harmonic division from the octave."""

    degrees: tuple[Fraction, ...]
    trace: tuple[DerivationStep, ...]


def build_core() -> CoreScale:
    """DO and its octave generate SOL, then MI, then RE, then nothing new."""
    do, do2 = Fraction(1), Fraction(2)
    sol = frequency_of_division(do, do2)
    mi = frequency_of_division(do, sol)
    re = frequency_of_division(do, mi)
    trace = (
        DerivationStep(("DO", "2DO"), (do, do2), "SOL", sol),
        DerivationStep(("DO", "SOL"), (do, sol), "MI", mi),
        DerivationStep(("DO", "MI"), (do, mi), "RE", re),
    )
    return CoreScale(degrees=(do, re, mi, sol, do2), trace=trace)


@dataclass(frozen=True)
class RejectedMean:
    """A candidate mean that adds nothing: off-lattice or already known."""

    inputs: tuple[Fraction, Fraction]
    value: Fraction
    reason: str  # "not-5-limit" | "already-present"


def dead_end_scan(found) -> list[RejectedMean]:
    """Take means over all ordered pairs of known sounds; list the rejects.

    Rejects are values that are either already in the scale or outside the
    5-limit lattice.  Both orientations of every pair are scanned so the
    stall is certified exhaustively.
    """
    pitches = [Fraction(p) for p in found]
    rejects = []
    for a in pitches:
        for b in pitches:
            if a == b:
                continue
            value = frequency_of_division(a, b)
            if value in pitches:
                rejects.append(RejectedMean((a, b), value, "already-present"))
            elif not is_five_smooth(value):
                rejects.append(RejectedMean((a, b), value, "not-5-limit"))
    return rejects


@dataclass(frozen=True)
class FaLaSolution:
    """The unique pair closing both octave proportions: FA and LA."""

    f1: Fraction  # FA
    f2: Fraction  # LA


def solve_fa_la() -> FaLaSolution:
    """Solve f1 = (f0 + f2)/2, f2 = (f1 + 2 f0)/2 exactly, with f0 = 1.

    In matrix form (2 -1; -1 2) (f1 f2) = (1, 2); Cramer's rule keeps every
    step rational.
    """
    a11, a12, b1 = Fraction(2), Fraction(-1), Fraction(1)
    a21, a22, b2 = Fraction(-1), Fraction(2), Fraction(2)
    det = a11 * a22 - a12 * a21
    f1 = (b1 * a22 - a12 * b2) / det
    f2 = (a11 * b2 - b1 * a21) / det
    if not (2 * f1 == 1 + f2 and 2 * f2 == f1 + 2):
        raise PropositionViolationError("FA/LA system solution failed substitution")
    if not (Fraction(5, 4) < f1 < Fraction(3, 2) < f2 < 2):
        raise PropositionViolationError("FA/LA fell outside the expected gaps")
    return FaLaSolution(f1=f1, f2=f2)


@dataclass(frozen=True)
class SiCandidate:
    f_n1: Fraction
    f_n2: Fraction
    value: Fraction
    reason: str  # "accepted" | "out-of-range" | "not-5-limit"


@dataclass(frozen=True)
class SiSearch:
    accepted: SiCandidate
    rejected: tuple[SiCandidate, ...]

    def rejected_values(self) -> set[Fraction]:
        return {c.value for c in self.rejected}


def find_si() -> SiSearch:
    """Brute-force the last degree: the only harmonic proportion that lands
    a 5-limit sound strictly between LA and the octave.

    For every ordered pair (f_n1, f_n2) of distinct known degrees the
    candidate is f3 = 2*f_n1 - f_n2 (so that f_n1 is the mean of f_n2 and
    f3).  Exactly one candidate survives the range and lattice tests; any
    other outcome raises, because uniqueness is the whole point.
    """
    known = [
        Fraction(1),
        Fraction(9, 8),
        Fraction(5, 4),
        Fraction(4, 3),
        Fraction(3, 2),
        Fraction(5, 3),
        Fraction(2),
    ]
    lo, hi = Fraction(5, 3), Fraction(2)
    accepted = []
    rejected = []
    for f_n1 in known:
        for f_n2 in known:
            if f_n1 == f_n2:
                continue
            f3 = 2 * f_n1 - f_n2
            if not lo < f3 < hi:
                rejected.append(SiCandidate(f_n1, f_n2, f3, "out-of-range"))
            elif not is_five_smooth(f3):
                rejected.append(SiCandidate(f_n1, f_n2, f3, "not-5-limit"))
            else:
                accepted.append(SiCandidate(f_n1, f_n2, f3, "accepted"))
    if len(accepted) != 1:
        raise PropositionViolationError(
            f"expected exactly one admissible SI, found {len(accepted)}"
        )
    return SiSearch(accepted=accepted[0], rejected=tuple(rejected))


@dataclass(frozen=True)
class NaturalScale:
    """The eight named degrees and the seven steps between them."""

    degrees: tuple[tuple[NoteName, Fraction], ...]
    steps: tuple[Fraction, ...]


def assemble_diatonic() -> NaturalScale:
    """Assemble DO..DO from the three constructions and check octave closure."""
    core = build_core()
    fa_la = solve_fa_la()
    si = find_si().accepted.value
    values = sorted(set(core.degrees) | {fa_la.f1, fa_la.f2, si})
    expected = [ratio for _, ratio in DIATONIC_DEGREES]
    if values != expected:
        raise PropositionViolationError(f"diatonic assembly produced {values}")
    degrees = tuple(
        (NoteName(letter), ratio) for letter, ratio in DIATONIC_DEGREES
    )
    steps = tuple(values[i + 1] / values[i] for i in range(len(values) - 1))
    if math.prod(steps) != 2:
        raise PropositionViolationError("scale steps do not close the octave")
    if not all(is_five_smooth(v) for v in values):
        raise PropositionViolationError("a degree escaped the 5-limit lattice")
    return NaturalScale(degrees=degrees, steps=steps)


@dataclass(frozen=True)
class ComparisonRow:
    """One diatonic degree across the three systems."""

    degree: str
    equal: EtPitch
    pythagorean: Fraction
    natural: Fraction


@dataclass(frozen=True)
class ScaleComparison:
    rows: tuple[ComparisonRow, ...]
    orderings: dict[str, str]


def _ordering(row: ComparisonRow) -> str:
    """Ascending order of the three values, decided exactly.

    Rational-vs-equal comparisons go through integer powers, never floats.
    Ties list N first, then E, then P.
    """
    labelled = [("N", row.natural), ("E", row.equal), ("P", row.pythagorean)]

    def less(x, y) -> bool:
        if isinstance(x, Fraction) and isinstance(y, Fraction):
            return x < y
        if isinstance(x, Fraction):
            return compare_fraction_to_et(x, y) < 0
        if isinstance(y, Fraction):
            return compare_fraction_to_et(y, x) > 0
        return x.exponent < y.exponent

    ordered = [labelled[0]]
    for item in labelled[1:]:
        pos = 0
        while pos < len(ordered) and not less(item[1], ordered[pos][1]):
            pos += 1
        ordered.insert(pos, item)
    parts = [ordered[0][0]]
    for (_, prev), (label, value) in zip(ordered, ordered[1:]):
        parts.append("<" if less(prev, value) else "=")
        parts.append(label)
    return " ".join(parts)


def compare_three_scales() -> ScaleComparison:
    """The diatonic degrees of the equal, fifth-built and just scales."""
    from .pythagorean import generate_fifths, select_chromatic

    chromatic = select_chromatic(generate_fifths(12, 12))
    pyth = [p.ratio for p in chromatic if p.name.accidental == "natural"]
    natural = assemble_diatonic()
    et_indices = (0, 2, 4, 5, 7, 9, 11, 12)
    rows = tuple(
        ComparisonRow(
            degree=str(name),
            equal=EtPitch(k, 12),
            pythagorean=p,
            natural=n,
        )
        for (name, n), p, k in zip(natural.degrees, pyth, et_indices)
    )
    orderings = {row.degree: _ordering(row) for row in rows}
    return ScaleComparison(rows=rows, orderings=orderings)
