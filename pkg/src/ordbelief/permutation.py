"""Ordinal entropy of an unordered frame, averaged over every confirmation order."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations
from typing import Iterator

from .frames import BasicProbabilityAssignment, FrameError
from .ordinal import OrdinalAssignment, compute_ordinal_entropy

MAX_FOCAL_ELEMENTS = 10


class TooManyFocalElements(FrameError):
    pass


@dataclass(frozen=True)
class OrderingRecord:
    sequence: tuple[int, ...]  # entry indices, in position order
    labels: tuple[str, ...]
    inu: float


@dataclass(frozen=True)
class PermutationReport:
    records: tuple[OrderingRecord, ...]
    mean_inu: float

    @property
    def count(self) -> int:
        return len(self.records)

    @property
    def inu_values(self) -> tuple[float, ...]:
        return tuple(r.inu for r in self.records)


def enumerate_orderings(bpa: BasicProbabilityAssignment) -> Iterator[OrdinalAssignment]:
    """Yield all n! orderings of the focal elements.

    Orderings come in lexicographic order of the entry-index sequence,
    so the identity ordering is first.
    """
    n = len(bpa)
    if n > MAX_FOCAL_ELEMENTS:
        raise TooManyFocalElements(
            f"{n} focal elements would need {math.factorial(n)} orderings; "
            f"limit is {MAX_FOCAL_ELEMENTS}"
        )
    for seq in permutations(range(n)):
        yield OrdinalAssignment.from_sequence(bpa, seq)


def average_inu(bpa: BasicProbabilityAssignment) -> PermutationReport:
    labels = [f.label for f in bpa.focals]
    records = []
    total = 0.0
    for seq, ordinal in zip(permutations(range(len(bpa))), enumerate_orderings(bpa)):
        inu = compute_ordinal_entropy(ordinal).inu
        records.append(OrderingRecord(seq, tuple(labels[i] for i in seq), inu))
        total += inu
    return PermutationReport(tuple(records), total / len(records))
