"""Recompute the published tables and report every cell that disagrees.

A cell is an erratum when the recomputed value differs from the printed
one by more than :data:`TOLERANCE`. Where an alternative recomputation
explains the printed value, the record carries a short note saying so.
"""

from __future__ import annotations

import csv
import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence, TextIO

from . import published
from .classic import deng_entropy, dp_hartley_entropy
from .frames import BasicProbabilityAssignment, bpa_from_masses, build_frame
from .documents import parse_mass
from .ordinal import OrdinalAssignment, compute_ordinal_entropy
from .permutation import average_inu

TOLERANCE = 1e-3
TABLE_IDS = ("1", "2", "3", "4", "5")


@dataclass(frozen=True)
class ErrataRecord:
    table: str
    row: str
    column: str
    published_value: float
    computed_value: float
    note: str = ""

    @property
    def discrepancy(self) -> float:
        return self.computed_value - self.published_value


@dataclass(frozen=True)
class ReproducedRow:
    row: str
    label: str
    sequence: tuple[str, ...]
    computed: dict[str, float]
    published: dict[str, float]


@dataclass(frozen=True)
class Reproduction:
    table_id: str
    caption: str
    columns: tuple[str, ...]
    rows: tuple[ReproducedRow, ...]
    errata: tuple[ErrataRecord, ...] = field(default=())


def _bpa(elements: Sequence[str], props: Sequence[published.Proposition]) -> BasicProbabilityAssignment:
    frame = build_frame(elements)
    return bpa_from_masses([(p.members, parse_mass(p.mass)) for p in props], frame)


def _shannon(masses: Iterable[float]) -> float:
    return -sum(m * math.log2(m) for m in masses)


def _close(a: float, b: float) -> bool:
    return abs(a - b) <= TOLERANCE


def _pinned_cardinality_values(bpa: BasicProbabilityAssignment, seq: Sequence[int]) -> list[float]:
    """IU and INU with masses moved but cardinalities left in identity order."""
    cards = [f.cardinality for f in bpa.focals]
    n = len(seq)
    inter = [bpa.masses[i] * (n - p) for p, i in enumerate(seq)]
    total = sum(inter)
    v = [x / total for x in inter]
    iu = [
        sum(
            v[j] * math.log((v[j] / (2 ** cards[j] - 1)) / (v[b] / (2 ** cards[b] - 1)) + math.e)
            for b in range(j + 1, n)
        )
        for j in range(n)
    ]
    return iu + [sum(iu)]


def _reproduce_ordinal_table(table: published.PublishedTable) -> Reproduction:
    bpa = _bpa(table.elements, table.propositions)
    n = len(bpa)
    iu_cols = tuple(f"IU{j}" for j in range(1, n + 1))
    columns = iu_cols + ("INU", "Deng", "DP")
    deng = deng_entropy(bpa)
    dp = dp_hartley_entropy(bpa)
    modal_deng = Counter(r.deng for r in table.rows).most_common(1)[0][0]

    rows = []
    errata = []
    for idx, prow in enumerate(table.rows, start=1):
        seq = [p - 1 for p in prow.props]
        report = compute_ordinal_entropy(OrdinalAssignment.from_sequence(bpa, seq))
        computed = dict(zip(iu_cols, report.iu))
        computed.update(INU=report.inu, Deng=deng, DP=dp)
        printed = dict(zip(iu_cols, prow.iu))
        printed.update(INU=prow.inu, Deng=prow.deng, DP=prow.dp)
        rows.append(
            ReproducedRow(str(idx), prow.label, tuple(bpa.focals[i].label for i in seq), computed, printed)
        )

        row_notes = []
        pinned = _pinned_cardinality_values(bpa, seq)
        if all(_close(a, b) for a, b in zip(pinned, list(prow.iu) + [prow.inu])):
            row_notes.append("matches recomputation with cardinalities left in identity-order positions")
        for other_idx, other in enumerate(table.rows, start=1):
            if other_idx != idx and (other.iu, other.inu) == (prow.iu, prow.inu):
                row_notes.append(f"same IU/INU values as printed row {other_idx}")

        for col in columns:
            if _close(computed[col], printed[col]):
                continue
            if col == "Deng":
                note = _deng_note(bpa, printed[col], modal_deng)
            elif col == "DP":
                note = ""
            else:
                note = "; ".join(row_notes)
            errata.append(ErrataRecord(table.table_id, str(idx), col, printed[col], computed[col], note))

        iu_sum = sum(prow.iu)
        if not _close(iu_sum, prow.inu):
            errata.append(
                ErrataRecord(
                    table.table_id, str(idx), "INU vs printed IU sum", prow.inu, iu_sum,
                    "printed INU is not the sum of the printed IU values",
                )
            )
    return Reproduction(table.table_id, table.caption, columns, tuple(rows), tuple(errata))


def _deng_note(bpa: BasicProbabilityAssignment, printed: float, modal: float) -> str:
    notes = []
    if _close(_shannon(bpa.masses), printed):
        notes.append("matches Shannon entropy of the masses with the 2^|A|-1 factor dropped")
    if _close(deng_entropy(bpa, base=math.e), printed):
        notes.append("matches Deng entropy in nats")
    if printed != modal:
        notes.append(f"Deng entropy is order-invariant but most rows print {modal:.4f}")
    return "; ".join(notes)


def _reproduce_table_1() -> Reproduction:
    bpa = _bpa(("P1", "P2", "P3"), published.TABLE_1_PROPOSITIONS)
    perm = average_inu(bpa)
    rows = []
    errata = []
    for idx, (rec, printed) in enumerate(zip(perm.records, published.TABLE_1_ORDERING_INU), start=1):
        row_id = f"ordering {idx}"
        rows.append(ReproducedRow(row_id, ", ".join(rec.labels), rec.labels, {"INU": rec.inu}, {"INU": printed}))
        if not _close(rec.inu, printed):
            errata.append(ErrataRecord("1", row_id, "INU", printed, rec.inu))

    computed = {"DP": dp_hartley_entropy(bpa), "Deng": deng_entropy(bpa), "Proposed": perm.mean_inu}
    rows.append(ReproducedRow("summary", "all orderings", (), computed, dict(published.TABLE_1)))
    printed_mean = sum(published.TABLE_1_ORDERING_INU) / len(published.TABLE_1_ORDERING_INU)
    for col, printed in published.TABLE_1.items():
        if _close(computed[col], printed):
            continue
        if col == "Deng":
            note = _deng_note(bpa, printed, printed)
        elif col == "Proposed" and _close(printed_mean, computed[col]):
            note = f"the printed per-ordering values themselves average to {printed_mean:.4f}"
        else:
            note = ""
        errata.append(ErrataRecord("1", "summary", col, printed, computed[col], note))
    return Reproduction(
        "1", "Results of three kinds of entropies", ("INU", "DP", "Deng", "Proposed"),
        tuple(rows), tuple(errata),
    )


def reproduce_table(table_id: str) -> Reproduction:
    if table_id == "1":
        return _reproduce_table_1()
    try:
        return _reproduce_ordinal_table(published.TABLES[table_id])
    except KeyError:
        raise ValueError(f"unknown table {table_id!r}; choose from {', '.join(TABLE_IDS)} or 'all'") from None


def run_reproduce(selector: str) -> list[Reproduction]:
    ids = TABLE_IDS if selector == "all" else (selector,)
    return [reproduce_table(t) for t in ids]


def render_text(rep: Reproduction, precision: int = 4) -> str:
    header = ["row", "sequence", *rep.columns]
    body = [
        [r.row, ", ".join(r.sequence) or r.label,
         *(f"{r.computed[c]:.{precision}f}" if c in r.computed else "" for c in rep.columns)]
        for r in rep.rows
    ]
    widths = [max(len(line[i]) for line in [header, *body]) for i in range(len(header))]

    def fmt(line):
        return "  ".join(
            cell.ljust(w) if i < 2 else cell.rjust(w) for i, (cell, w) in enumerate(zip(line, widths))
        )

    out = [f"Table {rep.table_id}: {rep.caption} (recomputed)", fmt(header)]
    out += [fmt(line) for line in body]
    out.append(f"errata: {len(rep.errata)}")
    for e in rep.errata:
        line = (
            f"  row {e.row} {e.column}: printed {e.published_value:.{precision}f}, "
            f"computed {e.computed_value:.{precision}f} (diff {e.discrepancy:+.{precision}f})"
        )
        if e.note:
            line += f" -- {e.note}"
        out.append(line)
    return "\n".join(out)


def write_csv(reps: Sequence[Reproduction], fh: TextIO) -> None:
    columns: list[str] = []
    for rep in reps:
        columns += [c for c in rep.columns if c not in columns]
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(["table", "row", "sequence", *columns, *(f"{c}_published" for c in columns)])
    for rep in reps:
        for r in rep.rows:
            writer.writerow(
                [rep.table_id, r.row, " ".join(r.sequence)]
                + [repr(r.computed[c]) if c in r.computed else "" for c in columns]
                + [repr(r.published[c]) if c in r.published else "" for c in columns]
            )


def write_errata_csv(reps: Sequence[Reproduction], fh: TextIO) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(["table", "row", "column", "published", "computed", "discrepancy", "note"])
    for rep in reps:
        for e in rep.errata:
            writer.writerow(
                [e.table, e.row, e.column, repr(e.published_value), repr(e.computed_value), repr(e.discrepancy), e.note]
            )
