"""Command-line front end.

Commands: et, pyth, natural, compare, weber, chord, export.  Exit status 0
on success, 1 on a domain error (one-line diagnostic on stderr), 2 on a
usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .equal import DEFAULT_BASE_HZ, generate_et, et_value
from .errors import TuningError
from .intervals import classify_chord
from .natural import assemble_diatonic, build_core, find_si, solve_fa_la
from .pythagorean import generate_fifths
from .ratio import to_decimal
from .scalefile import (
    comparison_table,
    et_scale_document,
    export_table,
    natural_scale_document,
    pythagorean_chromatic_document,
    render_scl,
)
from .tables import chromatic_text, comparison_text, fifth_generation_text, pairing_text
from .weber import uniform_stimuli


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tritune",
        description="Build and compare the equal, Pythagorean and just scales.",
    )
    parser.add_argument(
        "--base-hz",
        type=float,
        default=DEFAULT_BASE_HZ,
        help="base frequency of the scale (metadata for exports)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_et = sub.add_parser("et", help="equal division of the octave")
    p_et.add_argument("--n", type=int, required=True, help="steps per octave")
    p_et.add_argument("--digits", type=int, default=5)

    p_pyth = sub.add_parser("pyth", help="scale generated by fifths")
    p_pyth.add_argument("--fifths-up", type=int, default=12)
    p_pyth.add_argument("--fifths-down", type=int, default=12)
    view = p_pyth.add_mutually_exclusive_group()
    view.add_argument(
        "--pairing", action="store_true", help="pair sounds around the equal degrees"
    )
    view.add_argument(
        "--chromatic", action="store_true", help="the 18-name chromatic selection"
    )

    p_nat = sub.add_parser("natural", help="just scale from harmonic divisions")
    p_nat.add_argument("--trace", action="store_true", help="show the derivation")

    sub.add_parser("compare", help="diatonic degrees across the three systems")

    p_weber = sub.add_parser("weber", help="stimulus series with uniform perception")
    p_weber.add_argument("--s1", type=float, required=True)
    p_weber.add_argument("--c", type=float, required=True)
    p_weber.add_argument("--k", type=float, required=True)
    p_weber.add_argument("--n", type=int, required=True)

    p_chord = sub.add_parser("chord", help="classify a stack of chromatic indices")
    p_chord.add_argument("indices", help="comma-separated indices, e.g. 0,4,7")

    p_exp = sub.add_parser("export", help="write a scale or table to a file")
    p_exp.add_argument("--format", required=True, choices=("scl", "csv", "json"))
    p_exp.add_argument("--out", required=True)
    p_exp.add_argument(
        "--scale",
        choices=("et", "pyth", "natural"),
        default="natural",
        help="which scale an scl file carries (csv/json always carry the comparison)",
    )
    p_exp.add_argument("--n", type=int, default=12, help="divisions for --scale et")
    return parser


def _run_et(args) -> None:
    scale = generate_et(args.n, args.base_hz)
    for p in scale.pitches:
        print(f"{p.k} {p.exact_form()} {et_value(p, args.digits)}")


def _run_pyth(args) -> None:
    table = generate_fifths(args.fifths_down, args.fifths_up)
    if args.pairing:
        sys.stdout.write(pairing_text(table))
    elif args.chromatic:
        sys.stdout.write(chromatic_text(table))
    else:
        sys.stdout.write(fifth_generation_text(table))


def _run_natural(args) -> None:
    if args.trace:
        for step in build_core().trace:
            print(step)
        fa_la = solve_fa_la()
        print(f"system FA, LA -> {fa_la.f1}, {fa_la.f2}")
        si = find_si()
        print(
            f"search SI -> {si.accepted.value} from "
            f"({si.accepted.f_n1}, {si.accepted.f_n2}); "
            f"{len(si.rejected)} candidates rejected"
        )
    for name, ratio in assemble_diatonic().degrees:
        pq = f"{ratio.numerator}/{ratio.denominator}"
        print(f"{name} {pq} {to_decimal(ratio, 5)}")


def _run_weber(args) -> None:
    series = uniform_stimuli(args.s1, args.c, args.k, args.n)
    print(" ".join(f"{v:g}" for v in series))


def _run_chord(args) -> None:
    try:
        indices = [int(part) for part in args.indices.split(",")]
    except ValueError:
        raise TuningError(f"cannot parse chord indices from {args.indices!r}")
    print(classify_chord(indices))


def _run_export(args) -> None:
    path = Path(args.out)
    if args.format == "scl":
        if args.scale == "et":
            doc = et_scale_document(args.n, args.base_hz)
        elif args.scale == "pyth":
            doc = pythagorean_chromatic_document(generate_fifths(12, 12), args.base_hz)
        else:
            doc = natural_scale_document(args.base_hz)
        text = render_scl(doc, path.name)
    else:
        text = export_table(comparison_table(), args.format)
    path.write_text(text, encoding="utf-8", newline="\n")
    print(f"wrote {path}")


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    runners = {
        "et": _run_et,
        "pyth": _run_pyth,
        "natural": _run_natural,
        "compare": lambda a: sys.stdout.write(comparison_text()),
        "weber": _run_weber,
        "chord": _run_chord,
        "export": _run_export,
    }
    try:
        runners[args.command](args)
    except (TuningError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
