"""The four reference tables must render byte-identically to the checked-in
golden files, whose numeric content is produced by the exact modules."""

from pathlib import Path

import pytest

from tritune.pythagorean import generate_fifths
from tritune.tables import (
    chromatic_text,
    comparison_text,
    fifth_generation_text,
    pairing_text,
)

GOLDEN_DIR = Path(__file__).parent / "golden"


def golden(name: str) -> str:
    return (GOLDEN_DIR / name).read_text(encoding="utf-8")


@pytest.fixture(scope="module")
def table():
    return generate_fifths(12, 12)


def test_fifth_generation_table(table):
    assert fifth_generation_text(table) == golden("fifth_generation.txt")


def test_pairing_table(table):
    assert pairing_text(table) == golden("pairing.txt")


def test_chromatic_table(table):
    assert chromatic_text(table) == golden("chromatic.txt")


def test_comparison_table():
    assert comparison_text() == golden("comparison.txt")


def test_goldens_carry_the_reference_values():
    """Spot-check the checked-in files against independently stated values."""
    fifth = golden("fifth_generation.txt")
    assert "531441/524288 1.01364" in fifth
    assert "256/243 1.05349" in fifth
    assert fifth.count("\n") == 26
    chromatic = golden("chromatic.txt")
    assert "RE♭" in chromatic and "2187/2048" in chromatic
    comparison = golden("comparison.txt")
    assert "FA: N = P < E" in comparison
