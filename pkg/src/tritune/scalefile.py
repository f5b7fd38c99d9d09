"""Scale documents and their interchange renderings.

A scale document is the base-normalized pitch list of one octave, without
the implicit unison.  It can be written as a tuning file (rationals as p/q,
equal-division pitches as cents with five fraction digits), and the
three-system comparison can be written as CSV or JSON.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional, Union

from .equal import DEFAULT_BASE_HZ, EtPitch, EtScale, et_value
from .intervals import NoteName
from .natural import ScaleComparison, assemble_diatonic, compare_three_scales
from .pythagorean import PythTable, select_chromatic
from .ratio import cents, monzo_form, to_decimal

PitchValue = Union[Fraction, EtPitch]


@dataclass(frozen=True)
class ScaleEntry:
    name: Optional[NoteName]
    exact_form: str
    value: PitchValue

    def pitch_line(self) -> str:
        """Tuning-file rendering: p/q for rationals, 5-digit cents otherwise."""
        if isinstance(self.value, Fraction):
            return f"{self.value.numerator}/{self.value.denominator}"
        c = Fraction(1200 * self.value.k, self.value.n)
        scaled = c.numerator * 10 ** 5 // c.denominator
        s = str(scaled).rjust(6, "0")
        return f"{s[:-5]}.{s[-5:]}"


@dataclass(frozen=True)
class ScaleDocument:
    description: str
    base_frequency_hz: float
    entries: tuple[ScaleEntry, ...]

    def __post_init__(self):
        if self.base_frequency_hz <= 0:
            raise ValueError("base frequency must be positive")
        if not self.entries:
            raise ValueError("a scale document needs at least one entry")
        values = [cents(e.value) for e in self.entries]
        if any(b <= a for a, b in zip(values, values[1:])):
            raise ValueError("scale entries must be strictly ascending")


def natural_scale_document(base_hz: float = DEFAULT_BASE_HZ) -> ScaleDocument:
    scale = assemble_diatonic()
    entries = tuple(
        ScaleEntry(name, monzo_form(ratio), ratio)
        for name, ratio in scale.degrees
        if ratio != 1
    )
    return ScaleDocument(
        description="Just diatonic scale on DO (5-limit, harmonic divisions)",
        base_frequency_hz=base_hz,
        entries=entries,
    )


def et_scale_document(n: int, base_hz: float = DEFAULT_BASE_HZ) -> ScaleDocument:
    scale = EtScale(n=n, base_frequency_hz=base_hz)
    entries = tuple(
        ScaleEntry(None, p.exact_form(), p) for p in scale.pitches if p.k > 0
    )
    return ScaleDocument(
        description=f"Equal division of the octave in {n} steps",
        base_frequency_hz=base_hz,
        entries=entries,
    )


def pythagorean_chromatic_document(
    table: PythTable, base_hz: float = DEFAULT_BASE_HZ
) -> ScaleDocument:
    named = select_chromatic(table)
    entries = tuple(
        ScaleEntry(p.name, monzo_form(p.ratio), p.ratio) for p in named if p.ratio != 1
    )
    return ScaleDocument(
        description="Pythagorean chromatic scale on DO (18 sounds, 12 fifths each way)",
        base_frequency_hz=base_hz,
        entries=entries,
    )


def render_scl(doc: ScaleDocument, filename: str) -> str:
    """Tuning-file text: comment, description, count, one pitch per line."""
    lines = [f"! {filename}", doc.description, str(len(doc.entries))]
    lines += [e.pitch_line() for e in doc.entries]
    return "\n".join(lines) + "\n"


def write_scl(doc: ScaleDocument, path) -> None:
    path = Path(path)
    path.write_text(render_scl(doc, path.name), encoding="utf-8", newline="\n")


def parse_scl(text: str) -> tuple[str, list[Union[Fraction, float]]]:
    """Minimal reader for the writer above: (description, pitch values).

    Rational lines come back as Fractions, cents lines as floats.  The
    declared count is checked against the pitch lines found.
    """
    lines = [ln for ln in text.splitlines() if not ln.startswith("!")]
    if len(lines) < 2:
        raise ValueError("truncated scale file")
    description = lines[0]
    count = int(lines[1])
    pitches: list[Union[Fraction, float]] = []
    for ln in lines[2:]:
        ln = ln.strip()
        if not ln:
            continue
        if "." in ln:
            pitches.append(float(ln))
        else:
            num, _, den = ln.partition("/")
            pitches.append(Fraction(int(num), int(den) if den else 1))
    if len(pitches) != count:
        raise ValueError(f"declared {count} pitches, found {len(pitches)}")
    return description, pitches


@dataclass(frozen=True)
class TableCell:
    exact: str
    decimal: str


@dataclass(frozen=True)
class ComparisonTable:
    """Degree rows with one exact+decimal cell per scale system."""

    columns: tuple[str, ...]
    rows: tuple[tuple[str, dict[str, TableCell]], ...]


def comparison_table(comp: Optional[ScaleComparison] = None) -> ComparisonTable:
    comp = comp or compare_three_scales()
    rows = []
    for row in comp.rows:
        cells = {
            "E": TableCell(row.equal.exact_form(), et_value(row.equal, 5)),
            "P": TableCell(monzo_form(row.pythagorean), to_decimal(row.pythagorean, 5)),
            "N": TableCell(monzo_form(row.natural), to_decimal(row.natural, 5)),
        }
        rows.append((row.degree, cells))
    return ComparisonTable(columns=("E", "P", "N"), rows=tuple(rows))


def export_table(table: ComparisonTable, format: str) -> str:
    """CSV (decimals only) or JSON (exact forms and decimals), UTF-8."""
    if format == "csv":
        lines = ["degree," + ",".join(table.columns)]
        for degree, cells in table.rows:
            lines.append(
                degree + "," + ",".join(cells[c].decimal for c in table.columns)
            )
        return "\n".join(lines) + "\n"
    if format == "json":
        payload = {
            "columns": list(table.columns),
            "rows": [
                {
                    "degree": degree,
                    **{
                        c: {"exact": cells[c].exact, "decimal": cells[c].decimal}
                        for c in table.columns
                    },
                }
                for degree, cells in table.rows
            ],
        }
        return json.dumps(payload, ensure_ascii=False, indent=2) + "\n"
    raise ValueError(f"unknown table format {format!r}")
