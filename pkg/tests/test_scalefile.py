import json
from fractions import Fraction

import pytest

from tritune.equal import EtPitch
from tritune.pythagorean import generate_fifths
from tritune.scalefile import (
    ComparisonTable,
    ScaleDocument,
    ScaleEntry,
    comparison_table,
    et_scale_document,
    export_table,
    natural_scale_document,
    parse_scl,
    pythagorean_chromatic_document,
    render_scl,
    write_scl,
)

# hand-written expected file: first line comment with the file name, then the
# description, the pitch count, and one pitch per line (rationals as p/q)
EXPECTED_NATURAL_SCL = """\
! natural_do.scl
Just diatonic scale on DO (5-limit, harmonic divisions)
7
9/8
5/4
4/3
3/2
5/3
15/8
2/1
"""


class TestSclWriter:
    def test_natural_matches_handwritten_file(self):
        doc = natural_scale_document()
        assert render_scl(doc, "natural_do.scl") == EXPECTED_NATURAL_SCL

    def test_natural_shape(self):
        doc = natural_scale_document()
        assert len(doc.entries) == 7
        assert doc.entries[-1].pitch_line() == "2/1"

    def test_equal_scale_uses_five_digit_cents(self):
        doc = et_scale_document(12)
        lines = [e.pitch_line() for e in doc.entries]
        assert lines[0] == "100.00000"
        assert lines[-1] == "1200.00000"
        assert len(lines) == 12

    def test_cents_lines_truncate_non_terminating_values(self):
        doc = et_scale_document(7)
        assert doc.entries[0].pitch_line() == "171.42857"  # 1200/7

    def test_pythagorean_chromatic(self):
        doc = pythagorean_chromatic_document(generate_fifths(12, 12))
        lines = [e.pitch_line() for e in doc.entries]
        assert len(lines) == 17
        assert "2187/2048" in lines
        assert lines[-1] == "2/1"

    def test_round_trip_is_identity_on_entries(self, tmp_path):
        for doc in (
            natural_scale_document(),
            et_scale_document(12),
            pythagorean_chromatic_document(generate_fifths(12, 12)),
        ):
            path = tmp_path / "scale.scl"
            write_scl(doc, path)
            description, values = parse_scl(path.read_text(encoding="utf-8"))
            assert description == doc.description
            assert len(values) == len(doc.entries)
            for parsed, entry in zip(values, doc.entries):
                if isinstance(entry.value, Fraction):
                    assert parsed == entry.value
                else:
                    assert parsed == 1200.0 * entry.value.k / entry.value.n

    def test_parse_rejects_wrong_count(self):
        with pytest.raises(ValueError):
            parse_scl("! f.scl\ndesc\n3\n2/1\n")

    def test_document_requires_ascending_entries(self):
        with pytest.raises(ValueError):
            ScaleDocument(
                description="broken",
                base_frequency_hz=440.0,
                entries=(
                    ScaleEntry(None, "2", Fraction(2)),
                    ScaleEntry(None, "3/2", Fraction(3, 2)),
                ),
            )


class TestComparisonExport:
    def test_csv_rows(self):
        csv = export_table(comparison_table(), "csv")
        lines = csv.splitlines()
        assert lines[0] == "degree,E,P,N"
        assert "RE,1.12246,1.125,1.125" in lines
        assert len(lines) == 9

    def test_json_carries_exact_forms_and_decimals(self):
        payload = json.loads(export_table(comparison_table(), "json"))
        assert payload["columns"] == ["E", "P", "N"]
        si = next(r for r in payload["rows"] if r["degree"] == "SI")
        assert si["P"]["exact"] == "3^5/2^7"
        assert si["P"]["decimal"] == "1.89843"
        assert si["N"]["exact"] == "3*5/2^3"
        assert si["E"]["exact"] == "2^(11/12)"

    def test_empty_table_is_header_only(self):
        empty = ComparisonTable(columns=("E", "P", "N"), rows=())
        assert export_table(empty, "csv") == "degree,E,P,N\n"

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            export_table(comparison_table(), "xml")


def test_et_pitch_lines_are_exact_for_any_division():
    entry = ScaleEntry(None, "2^(1/12)", EtPitch(1, 12))
    assert entry.pitch_line() == "100.00000"
