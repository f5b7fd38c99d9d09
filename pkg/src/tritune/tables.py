"""Plain-text renderings of the reference tables.

Four tables: the fifth-generation listing, the pairing of the 26 sounds
around the 13 equal degrees, the 18-name chromatic selection, and the
three-system diatonic comparison.  All numeric content comes from the exact
modules; these functions only lay it out.
"""

from __future__ import annotations

from .equal import EtPitch, et_value
from .natural import compare_three_scales
from .pythagorean import (
    DIATONIC_DEGREES,
    PythTable,
    pairing_table,
    select_chromatic,
)
from .ratio import monzo_form, to_decimal


def _aligned(rows: list[tuple[str, ...]]) -> str:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    lines = [
        "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
        for row in rows
    ]
    return "\n".join(lines) + "\n"


def fifth_generation_text(table: PythTable) -> str:
    """All generated sounds ascending: ratio, truncated decimal, construction."""
    lines = []
    for entry in table.entries_sorted():
        pq = f"{entry.ratio.numerator}/{entry.ratio.denominator}"
        lines.append(f"{pq} {to_decimal(entry.ratio, 5)} {entry.construction()}")
    return "\n".join(lines) + "\n"


def pairing_text(table: PythTable, n: int = 12) -> str:
    """Per equal degree, its two approximants; diatonic rows (*) list the
    sound reached in fewer fifths first, the others deficit then excess."""
    pairs = pairing_table(table, n)
    rows = []
    for degree in range(n + 1):
        low, high = pairs[degree]
        if degree in DIATONIC_DEGREES:
            marker = "*"
            first, second = sorted((low, high), key=lambda e: e.k)
        else:
            marker = " "
            first, second = low, high
        et = EtPitch(degree, n)
        rows.append(
            (
                f"{marker} {degree:>2}",
                et.exact_form(),
                et_value(et, 5),
                first.construction(),
                second.construction(),
            )
        )
    return _aligned(rows)


def chromatic_text(table: PythTable) -> str:
    """The 18 named sounds ascending: name, factored form, ratio, decimal."""
    rows = []
    for p in select_chromatic(table):
        pq = f"{p.ratio.numerator}/{p.ratio.denominator}"
        rows.append((str(p.name), monzo_form(p.ratio), pq, to_decimal(p.ratio, 5)))
    return _aligned(rows)


def comparison_text() -> str:
    """The three-system diatonic table plus the exact orderings it implies."""
    comp = compare_three_scales()
    rows = [("degree", "E", "P", "N")]
    for row in comp.rows:
        rows.append(
            (
                row.degree,
                f"{row.equal.exact_form()} = {et_value(row.equal, 5)}",
                f"{monzo_form(row.pythagorean)} = {to_decimal(row.pythagorean, 5)}",
                f"{monzo_form(row.natural)} = {to_decimal(row.natural, 5)}",
            )
        )
    text = _aligned(rows)
    notes = [
        f"{degree}: {comp.orderings[degree]}" for degree in ("MI", "FA", "LA", "SI")
    ]
    return text + "\n".join(notes) + "\n"
