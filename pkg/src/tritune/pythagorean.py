"""Three-limit scale built by stacking perfect fifths.

Walking k fifths up or down from the base and folding each result back into
the octave with a power of two yields the family 2**h * (3/2)**(+/-k), all
distinct rationals: the walk never closes.  Twelve steps each way produce 26
sounds that bracket the twelve-division equal scale in pairs, from which the
traditional 18-name chromatic selection is drawn.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .equal import EtPitch, compare_fraction_to_et, nearest_degree
from .errors import CoverageError, PropositionViolationError, TuningError
from .intervals import NoteName, note_name
from .ratio import Monzo, cents, monzo_to_rational, rational_to_monzo, reduce_to_octave

#: degrees of the 12-division octave carrying plain letter names
DIATONIC_DEGREES = frozenset({0, 2, 4, 5, 7, 9, 11, 12})

PYTHAGOREAN_COMMA = Fraction(531441, 524288)  # (3/2)**12 / 2**7
LIMMA = Fraction(256, 243)  # the diatonic semitone, 2**8 / 3**5
APOTOME = Fraction(2187, 2048)  # the chromatic semitone, 3**7 / 2**11
TONE = Fraction(9, 8)


@dataclass(frozen=True)
class FifthStep:
    """One generated sound: 2**h * (3/2)**(+/-k) folded into (1, 2)."""

    direction: str  # "up" or "down"
    k: int
    h: int
    ratio: Fraction

    def __post_init__(self):
        if self.direction not in ("up", "down"):
            raise ValueError("direction must be 'up' or 'down'")
        if self.k < 1:
            raise ValueError("a fifth step needs k >= 1")
        if self.direction == "up" and self.h > 0:
            raise ValueError("upward fifths are corrected downward (h <= 0)")
        if self.direction == "down" and self.h < 0:
            raise ValueError("downward fifths are corrected upward (h >= 0)")
        sign = 1 if self.direction == "up" else -1
        if self.ratio != Fraction(2) ** self.h * Fraction(3, 2) ** (sign * self.k):
            raise ValueError("ratio does not match its construction")
        if not 1 < self.ratio < 2:
            raise ValueError("generated sounds lie strictly inside the octave")


@dataclass(frozen=True)
class PythEntry:
    """A row of the generated table: a sound plus how it was reached.

    The two octave endpoints travel with the generated sounds; they carry
    ``step=None`` and count as zero iterations.
    """

    ratio: Fraction
    step: Optional[FifthStep]

    @property
    def k(self) -> int:
        return self.step.k if self.step else 0

    def construction(self) -> str:
        if self.step is None:
            return str(self.ratio.numerator)  # "1" or "2"
        sign = 1 if self.step.direction == "up" else -1
        e = sign * self.step.k
        fifth = "3/2" if e == 1 else f"(3/2)^{e}"
        if self.step.h == 0:
            return fifth
        two = "2" if self.step.h == 1 else f"2^{self.step.h}"
        return f"{two}*{fifth}"


@dataclass(frozen=True)
class PythTable:
    """Sounds generated by m1 fifths down and m2 fifths up, plus endpoints."""

    down: tuple[FifthStep, ...]
    up: tuple[FifthStep, ...]
    endpoints: tuple[Fraction, Fraction] = (Fraction(1), Fraction(2))

    def entries(self) -> list[PythEntry]:
        rows = [PythEntry(self.endpoints[0], None)]
        rows += [PythEntry(s.ratio, s) for s in self.down]
        rows += [PythEntry(s.ratio, s) for s in self.up]
        rows.append(PythEntry(self.endpoints[1], None))
        return rows

    def entries_sorted(self) -> list[PythEntry]:
        return sorted(self.entries(), key=lambda e: e.ratio)

    def ratios(self) -> list[Fraction]:
        return [e.ratio for e in self.entries()]


def _fold_into_octave(raw: Fraction) -> tuple[int, Fraction]:
    """The unique h with 1 < 2**h * raw < 2, by repeated octave moves."""
    h = 0
    r = raw
    while r <= 1:
        r *= 2
        h += 1
    while r >= 2:
        r /= 2
        h -= 1
    return h, r


def generate_fifths(m1: int, m2: int) -> PythTable:
    """Walk m1 fifths down and m2 fifths up, folding into the base octave."""
    if m1 < 0 or m2 < 0:
        raise ValueError("iteration counts cannot be negative")
    down = []
    for k1 in range(1, m1 + 1):
        h1, r = _fold_into_octave(Fraction(2, 3) ** k1)
        down.append(FifthStep("down", k1, h1, r))
    up = []
    for k2 in range(1, m2 + 1):
        h2, r = _fold_into_octave(Fraction(3, 2) ** k2)
        up.append(FifthStep("up", k2, h2, r))
    return PythTable(tuple(down), tuple(up))


def classify_to_et(r: Fraction, n: int = 12) -> tuple[int, float]:
    """Slot a ratio against the nearest n-division degree.

    Returns (degree, deviation in cents); positive deviation means the sound
    sits above its equal neighbour.
    """
    r = Fraction(r)
    if not 1 <= r <= 2:
        raise TuningError(f"ratio {r} is outside the reference octave [1, 2]")
    degree = nearest_degree(r, n)
    return degree, cents(r) - degree * 1200.0 / n


def pairing_table(
    t: PythTable, n: int = 12
) -> dict[int, tuple[PythEntry, PythEntry]]:
    """Group the generated sounds around the n+1 equal degrees, two apiece.

    Each degree must receive exactly one approximant from below and one from
    above (the endpoints sit exactly on degrees 0 and n).  Anything else is a
    coverage error naming the offending degree.
    """
    buckets: dict[int, list[PythEntry]] = {d: [] for d in range(n + 1)}
    for entry in t.entries():
        degree = nearest_degree(entry.ratio, n)
        buckets[degree].append(entry)
    pairs = {}
    for degree in range(n + 1):
        found = sorted(buckets[degree], key=lambda e: e.ratio)
        if len(found) != 2:
            raise CoverageError(degree, len(found))
        low, high = found
        et = EtPitch(degree, n)
        if compare_fraction_to_et(low.ratio, et) > 0 or compare_fraction_to_et(
            high.ratio, et
        ) < 0:
            raise PropositionViolationError(
                f"degree {degree} approximants do not bracket the equal value"
            )
        pairs[degree] = (low, high)
    return pairs


@dataclass(frozen=True)
class NamedPitch:
    """A selected chromatic sound: name, exact ratio, and its provenance."""

    name: NoteName
    ratio: Fraction
    step: Optional[FifthStep]

    def __post_init__(self):
        m = rational_to_monzo(self.ratio)
        if m is None or not m.is_three_limit:
            raise ValueError(f"{self.ratio} is not a 3-limit ratio")


def select_chromatic(t: PythTable) -> list[NamedPitch]:
    """The 18-sound chromatic selection, named from a DO base.

    Diatonic degrees keep the approximant reached in fewer fifths; the five
    altered degrees keep both sounds, the lower spelled as the flat of the
    letter above, the higher as the sharp of the letter below.
    """
    pairs = pairing_table(t, 12)
    named: list[NamedPitch] = []
    for degree, (low, high) in pairs.items():
        if degree in DIATONIC_DEGREES:
            if low.k == high.k:
                raise PropositionViolationError(
                    f"degree {degree}: iteration counts tie, selection undefined"
                )
            keep = low if low.k < high.k else high
            named.append(NamedPitch(note_name(degree), keep.ratio, keep.step))
        else:
            flat_name = NoteName(note_name(degree + 1).letter, "flat")
            sharp_name = NoteName(note_name(degree - 1).letter, "sharp")
            named.append(NamedPitch(flat_name, low.ratio, low.step))
            named.append(NamedPitch(sharp_name, high.ratio, high.step))
    named.sort(key=lambda p: p.ratio)
    return named


@dataclass(frozen=True)
class ToneSplitReport:
    """How the whole tone DO-RE splits into the two unequal semitones."""

    limma: Fraction
    apotome: Fraction
    tone: Fraction
    product_is_tone: bool
    limma_below_equal_semitone: bool
    apotome_above_equal_semitone: bool
    equal_tone_below_tone: bool
    flat_to_re: Fraction  # I(REb, RE)
    sharp_to_re: Fraction  # I(DOs, RE)
    tone_cents: float
    note: str


def tone_split_analysis() -> ToneSplitReport:
    """Verify the exact split of the 9/8 tone into limma and apotome."""
    semitone = EtPitch(1, 12)
    two_semitones = EtPitch(2, 12)
    flat_to_re = TONE / LIMMA
    sharp_to_re = TONE / APOTOME
    report = ToneSplitReport(
        limma=LIMMA,
        apotome=APOTOME,
        tone=TONE,
        product_is_tone=LIMMA * APOTOME == TONE,
        limma_below_equal_semitone=compare_fraction_to_et(LIMMA, semitone) < 0,
        apotome_above_equal_semitone=compare_fraction_to_et(APOTOME, semitone) > 0,
        equal_tone_below_tone=compare_fraction_to_et(TONE, two_semitones) > 0,
        flat_to_re=flat_to_re,
        sharp_to_re=sharp_to_re,
        tone_cents=cents(TONE),
        note=(
            "I(REb,RE) equals the apotome I(DO,DO#) and I(DO#,RE) equals the "
            "limma I(DO,REb): each semitone completes the tone with one of "
            "the other kind.  Classical summaries sometimes label both "
            "complements I(DO,REb); the exact identities above are what holds."
        ),
    )
    if not (
        report.product_is_tone
        and report.limma_below_equal_semitone
        and report.apotome_above_equal_semitone
        and report.equal_tone_below_tone
        and flat_to_re == APOTOME
        and sharp_to_re == LIMMA
    ):
        raise PropositionViolationError("tone split identities failed")
    return report


@dataclass(frozen=True)
class BaseDependenceDemo:
    """Witness that the finite selection depends on the starting sound."""

    base_monzo: Monzo  # the MI used as alternative base
    shift_monzo: Monzo  # nine fifths up, five halvings
    product_monzo: Monzo
    product_ratio: Fraction  # octave-reduced, relative to the original base
    product_in_table: bool
    control_ratio: Fraction  # same shift applied to the original base
    control_in_table: bool


def base_dependence_demo(t: PythTable) -> BaseDependenceDemo:
    """Rebase the walk on MI and exhibit a sound the DO table cannot reach."""
    mi = Monzo(-6, 4)
    shift = Monzo(-5 - 9, 9)  # 2**-5 * (3/2)**9
    product = mi + shift
    product_ratio = reduce_to_octave(monzo_to_rational(product))
    control_ratio = reduce_to_octave(monzo_to_rational(shift))
    ratios = set(t.ratios())
    demo = BaseDependenceDemo(
        base_monzo=mi,
        shift_monzo=shift,
        product_monzo=product,
        product_ratio=product_ratio,
        product_in_table=product_ratio in ratios,
        control_ratio=control_ratio,
        control_in_table=control_ratio in ratios,
    )
    if demo.product_in_table:
        raise PropositionViolationError(
            "the rebased sound was found in the table; it should require "
            "further iterations"
        )
    return demo
