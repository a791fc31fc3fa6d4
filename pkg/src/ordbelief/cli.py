"""Command-line interface.

Exit codes: 0 on success (errata do not count as failure), 2 for input or
validation errors, 3 when a computed report breaks an internal invariant.
"""

from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path
from typing import Sequence, TextIO

from .classic import deng_entropy, dp_hartley_entropy
from .documents import parse_frame_document
from .frames import FrameError
from .ordinal import InvariantViolation, check_report, compute_ordinal_entropy
from .permutation import average_inu
from .reproduce import TABLE_IDS, render_text, run_reproduce, write_csv, write_errata_csv

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INVARIANT = 3


class UsageError(Exception):
    pass


def _load(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_frame_document(text)


def _open_csv(path: str) -> TextIO:
    return open(path, "w", newline="", encoding="utf-8")


def run_compute(args: argparse.Namespace, out: TextIO) -> int:
    bpa, ordinal = _load(args.input)
    if ordinal is None:
        raise UsageError("no ordering; use permute-average")
    report = compute_ordinal_entropy(ordinal)
    check_report(report)
    deng = deng_entropy(bpa)
    dp = dp_hartley_entropy(bpa)
    p = args.precision
    nv = report.normalized

    print("Ordering: " + ", ".join(ordinal.labels()), file=out)
    print(f"{'pos':>3}  {'focal':<12} {'|A|':>3}  {'mass':>{p + 3}}  {'weight':>6}  "
          f"{'intermediate':>12}  {'value':>{p + 3}}  {'IU':>{p + 3}}", file=out)
    for j, slot in enumerate(ordinal.slots):
        print(f"{slot.position:>3}  {slot.focal.label:<12} {slot.focal.cardinality:>3}  "
              f"{slot.mass:.{p}f}  {nv.weights[j]:>6}  {nv.intermediate[j]:>12.{p}f}  "
              f"{nv.values[j]:.{p}f}  {report.iu[j]:.{p}f}", file=out)
    print("Pairwise relative belief entropy:", file=out)
    n = ordinal.n
    for j in range(1, n):
        cells = "  ".join(f"U({j},{b})={report.u(j, b):.{p}f}" for b in range(j + 1, n + 1))
        print(f"  {cells}", file=out)
    print(f"Deng entropy: {deng:.{p}f}", file=out)
    print(f"Dubois & Prade weighted Hartley entropy: {dp:.{p}f}", file=out)
    iu = " ".join(f"{x:.{p}f}" for x in report.iu)
    print(f"IU: {iu}  INU: {report.inu:.{p}f}  Deng: {deng:.{p}f}  DP: {dp:.{p}f}", file=out)

    if args.csv:
        with _open_csv(args.csv) as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["position", "focal", "cardinality", "mass", "weight",
                        "intermediate", "value", "IU", "INU", "Deng", "DP"])
            for j, slot in enumerate(ordinal.slots):
                w.writerow([slot.position, slot.focal.label, slot.focal.cardinality, repr(slot.mass),
                            nv.weights[j], repr(nv.intermediate[j]), repr(nv.values[j]),
                            repr(report.iu[j]), repr(report.inu), repr(deng), repr(dp)])
    return EXIT_OK


def run_permute_average(args: argparse.Namespace, out: TextIO) -> int:
    bpa, _ = _load(args.input)
    report = average_inu(bpa)
    p = args.precision
    width = max(len(", ".join(r.labels)) for r in report.records)
    print(f"{'#':>4}  {'sequence':<{width}}  INU", file=out)
    for i, rec in enumerate(report.records, start=1):
        print(f"{i:>4}  {', '.join(rec.labels):<{width}}  {rec.inu:.{p}f}", file=out)
    print(f"mean INU over {report.count} orderings: {report.mean_inu:.{p}f}", file=out)

    if args.csv:
        with _open_csv(args.csv) as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["ordering", "sequence", "INU"])
            for i, rec in enumerate(report.records, start=1):
                w.writerow([i, " ".join(rec.labels), repr(rec.inu)])
            w.writerow(["mean", "", repr(report.mean_inu)])
    return EXIT_OK


def run_reproduce_cmd(args: argparse.Namespace, out: TextIO) -> int:
    reps = run_reproduce(args.table)
    print("\n\n".join(render_text(r, args.precision) for r in reps), file=out)
    total = sum(len(r.errata) for r in reps)
    print(f"\ntotal errata: {total}", file=out)
    if args.csv:
        with _open_csv(args.csv) as fh:
            write_csv(reps, fh)
    if args.errata_csv:
        with _open_csv(args.errata_csv) as fh:
            write_errata_csv(reps, fh)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ordbelief",
        description="Ordinal relative belief entropy for Dempster-Shafer frames.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def precision(p):
        p.add_argument("--precision", type=int, default=4, metavar="N",
                       help="decimals in printed tables (default 4)")

    c = sub.add_parser("compute", help="entropy of one ordered frame document")
    c.add_argument("--input", required=True, metavar="PATH")
    c.add_argument("--csv", metavar="PATH", help="write full-precision per-position CSV")
    precision(c)
    c.set_defaults(func=run_compute)

    pa = sub.add_parser("permute-average", help="average INU over all orderings")
    pa.add_argument("--input", required=True, metavar="PATH")
    pa.add_argument("--csv", metavar="PATH", help="write full-precision per-ordering CSV")
    precision(pa)
    pa.set_defaults(func=run_permute_average)

    r = sub.add_parser("reproduce", help="recompute published tables and list errata")
    r.add_argument("--table", choices=[*TABLE_IDS, "all"], default="all")
    r.add_argument("--csv", metavar="PATH", help="write recomputed rows as CSV")
    r.add_argument("--errata-csv", metavar="PATH", help="write errata records as CSV")
    precision(r)
    r.set_defaults(func=run_reproduce_cmd)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if args.precision < 0:
        print("error: --precision must be >= 0", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args, out)
    except (FrameError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InvariantViolation as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
