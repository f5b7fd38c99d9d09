import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tritune.equal import EtPitch
from tritune.errors import TuningError
from tritune.natural import (
    assemble_diatonic,
    build_core,
    compare_three_scales,
    dead_end_scan,
    find_si,
    frequency_of_division,
    harmonic_divide,
    means,
    solve_fa_la,
)
from tritune.ratio import is_five_smooth

positive_fractions = st.fractions(min_value=Fraction(1, 1000), max_value=1000)


@pytest.fixture(scope="module")
def rejects():
    return dead_end_scan(build_core().degrees)


@pytest.fixture(scope="module")
def comp():
    return compare_three_scales()


class TestMeans:
    def test_harmonic_examples(self):
        assert means(1, Fraction(1, 2)).harmonic == Fraction(2, 3)
        assert means(1, Fraction(2, 3)).harmonic == Fraction(4, 5)

    def test_degenerate_pair(self):
        t = means(Fraction(7, 5), Fraction(7, 5))
        assert t.arithmetic == t.harmonic == Fraction(7, 5)
        assert t.geometric == Fraction(7, 5)

    def test_geometric_exact_only_for_squares(self):
        assert means(1, 4).geometric_exact() == 2
        assert means(Fraction(1, 2), Fraction(9, 2)).geometric_exact() == Fraction(3, 2)
        assert means(1, 2).geometric_exact() is None
        assert means(1, 2).geometric == pytest.approx(math.sqrt(2))

    def test_positive_required(self):
        with pytest.raises(ValueError):
            means(0, 1)

    @given(positive_fractions, positive_fractions)
    def test_mean_proportional_identity(self, a, b):
        t = means(a, b)
        assert t.arithmetic * t.harmonic == a * b == t.geometric_squared

    @given(positive_fractions, positive_fractions)
    def test_ordering_with_equality_iff_equal(self, a, b):
        t = means(a, b)
        # compare through squares so the geometric mean never leaves the
        # rationals: h <= g <= a  iff  h^2 <= ab <= a^2
        assert t.harmonic ** 2 <= t.geometric_squared <= t.arithmetic ** 2
        if a == b:
            assert t.harmonic == t.arithmetic
        else:
            assert t.harmonic ** 2 < t.geometric_squared < t.arithmetic ** 2


class TestHarmonicDivision:
    def test_examples(self):
        assert harmonic_divide(Fraction(1, 2), 1).ab == Fraction(2, 3)
        assert harmonic_divide(Fraction(2, 3), 1).ab == Fraction(4, 5)
        assert harmonic_divide(Fraction(4, 5), 1).ab == Fraction(8, 9)

    def test_defining_proportion_holds(self):
        d = harmonic_divide(Fraction(1, 2), 1)
        cb = d.ab - d.ac
        bd = d.ad - d.ab
        assert d.ac / cb == d.ad / bd

    def test_ordering_enforced(self):
        with pytest.raises(TuningError):
            harmonic_divide(1, Fraction(1, 2))
        with pytest.raises(TuningError):
            harmonic_divide(1, 1)

    @given(positive_fractions, positive_fractions, positive_fractions)
    def test_frequency_bridge(self, x, y, kappa):
        # frequencies are inversely proportional to lengths, so the harmonic
        # point's frequency is the arithmetic mean of the endpoint frequencies
        ac, ad = min(x, y), max(x, y)
        if ac == ad:
            return
        d = harmonic_divide(ac, ad)
        assert frequency_of_division(kappa / d.ac, kappa / d.ad) == kappa / d.ab


class TestFrequencyOfDivision:
    def test_examples(self):
        assert frequency_of_division(1, 2) == Fraction(3, 2)
        assert frequency_of_division(1, Fraction(3, 2)) == Fraction(5, 4)
        assert frequency_of_division(1, Fraction(5, 4)) == Fraction(9, 8)

    def test_positive_required(self):
        with pytest.raises(ValueError):
            frequency_of_division(0, 1)


class TestCoreConstruction:
    def test_chain(self):
        core = build_core()
        assert core.degrees == (
            Fraction(1),
            Fraction(9, 8),
            Fraction(5, 4),
            Fraction(3, 2),
            Fraction(2),
        )
        assert [s.result_name for s in core.trace] == ["SOL", "MI", "RE"]
        assert core.trace[0].result == Fraction(3, 2)
        assert core.trace[2].result == Fraction(9, 8)

    def test_next_iteration_falls_off_the_lattice(self):
        next_candidate = frequency_of_division(1, Fraction(9, 8))
        assert next_candidate == Fraction(17, 16)
        assert not is_five_smooth(next_candidate)


class TestDeadEndScan:
    def test_quoted_rejects(self, rejects):
        by_pair = {(r.inputs[0], r.inputs[1]): r for r in rejects}
        eleven_eighths = by_pair[(Fraction(5, 4), Fraction(3, 2))]
        assert (eleven_eighths.value, eleven_eighths.reason) == (
            Fraction(11, 8),
            "not-5-limit",
        )
        seventeen = by_pair[(Fraction(1), Fraction(9, 8))]
        assert (seventeen.value, seventeen.reason) == (Fraction(17, 16), "not-5-limit")
        present = by_pair[(Fraction(1), Fraction(2))]
        assert (present.value, present.reason) == (Fraction(3, 2), "already-present")

    def test_reasons_are_well_formed(self, rejects):
        assert rejects
        assert {r.reason for r in rejects} == {"not-5-limit", "already-present"}
        for r in rejects:
            assert r.value == (r.inputs[0] + r.inputs[1]) / 2


class TestFaLa:
    def test_unique_solution(self):
        sol = solve_fa_la()
        assert sol.f1 == Fraction(4, 3)
        assert sol.f2 == Fraction(5, 3)

    def test_substitution(self):
        sol = solve_fa_la()
        assert (1 + sol.f2) / 2 == sol.f1
        assert (sol.f1 + 2) / 2 == sol.f2

    def test_gap_placement(self):
        sol = solve_fa_la()
        assert Fraction(5, 4) < sol.f1 < Fraction(3, 2)
        assert Fraction(3, 2) < sol.f2 < 2


class TestFindSi:
    def test_unique_acceptance(self):
        search = find_si()
        assert search.accepted.value == Fraction(15, 8)
        assert (search.accepted.f_n1, search.accepted.f_n2) == (
            Fraction(3, 2),
            Fraction(9, 8),
        )

    def test_in_range_rejects_are_off_lattice(self):
        rejected = {(c.f_n1, c.f_n2): c for c in find_si().rejected}
        seven_fourths = rejected[(Fraction(3, 2), Fraction(5, 4))]
        assert (seven_fourths.value, seven_fourths.reason) == (
            Fraction(7, 4),
            "not-5-limit",
        )
        eleven_sixths = rejected[(Fraction(5, 3), Fraction(3, 2))]
        assert (eleven_sixths.value, eleven_sixths.reason) == (
            Fraction(11, 6),
            "not-5-limit",
        )

    def test_la_with_mi_overshoots_the_octave(self):
        # 2 * 5/3 - 5/4 = 25/12, above the octave, hence rejected on range
        rejected = {(c.f_n1, c.f_n2): c for c in find_si().rejected}
        overshoot = rejected[(Fraction(5, 3), Fraction(5, 4))]
        assert overshoot.value == Fraction(25, 12)
        assert overshoot.reason == "out-of-range"

    def test_no_candidate_equals_35_twelfths(self):
        # no ordered pair of degrees can produce 35/12 at all
        search = find_si()
        values = {c.value for c in search.rejected} | {search.accepted.value}
        assert Fraction(35, 12) not in values

    def test_every_rejection_has_a_reason(self):
        for c in find_si().rejected:
            assert c.reason in ("out-of-range", "not-5-limit")
            if c.reason == "not-5-limit":
                assert Fraction(5, 3) < c.value < 2
                assert not is_five_smooth(c.value)


class TestDiatonicAssembly:
    def test_degrees_and_steps(self):
        scale = assemble_diatonic()
        assert [ratio for _, ratio in scale.degrees] == [
            Fraction(1),
            Fraction(9, 8),
            Fraction(5, 4),
            Fraction(4, 3),
            Fraction(3, 2),
            Fraction(5, 3),
            Fraction(15, 8),
            Fraction(2),
        ]
        assert list(scale.steps) == [
            Fraction(9, 8),
            Fraction(10, 9),
            Fraction(16, 15),
            Fraction(9, 8),
            Fraction(10, 9),
            Fraction(9, 8),
            Fraction(16, 15),
        ]
        assert math.prod(scale.steps) == 2

    def test_names(self):
        names = [str(name) for name, _ in assemble_diatonic().degrees]
        assert names == ["DO", "RE", "MI", "FA", "SOL", "LA", "SI", "DO"]

    def test_two_whole_tone_sizes_block_transposition(self):
        scale = assemble_diatonic()
        assert Fraction(9, 8) in scale.steps and Fraction(10, 9) in scale.steps
        assert Fraction(9, 8) != Fraction(10, 9)
        degrees = dict(
            (str(name), ratio) for name, ratio in scale.degrees if ratio != 2
        )
        assert degrees["SOL"] / degrees["DO"] == Fraction(3, 2)
        assert degrees["LA"] / degrees["RE"] == Fraction(40, 27)
        assert degrees["SOL"] / degrees["DO"] != degrees["LA"] / degrees["RE"]


class TestComparison:
    def test_rows(self, comp):
        by_degree = {}
        for row in comp.rows:
            by_degree.setdefault(row.degree, row)
        la = by_degree["LA"]
        assert la.equal == EtPitch(9, 12)
        assert la.pythagorean == Fraction(27, 16)
        assert la.natural == Fraction(5, 3)
        do = by_degree["DO"]
        assert (do.equal, do.pythagorean, do.natural) == (EtPitch(0, 12), 1, 1)
        mi = by_degree["MI"]
        assert mi.pythagorean == Fraction(81, 64)
        assert mi.natural == Fraction(5, 4)

    def test_orderings(self, comp):
        assert comp.orderings["MI"] == "N < E < P"
        assert comp.orderings["FA"] == "N = P < E"
        assert comp.orderings["LA"] == "N < E < P"
        assert comp.orderings["SI"] == "N < E < P"
        assert comp.orderings["DO"] == "N = E = P"

    def test_shape(self, comp):
        assert [row.degree for row in comp.rows] == [
            "DO",
            "RE",
            "MI",
            "FA",
            "SOL",
            "LA",
            "SI",
            "DO",
        ]
