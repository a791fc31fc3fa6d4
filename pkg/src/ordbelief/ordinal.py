"""Ordinal relative belief entropy.

Propositions of an ordinal frame are confirmed one after another. Each
proposition's mass is scaled by a linear position weight and
renormalised; every proposition then accrues a relative entropy term
against each proposition confirmed after it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .frames import (
    MASS_TOLERANCE,
    BasicProbabilityAssignment,
    DuplicateFocal,
    FocalElement,
    FrameError,
    FrameOfDiscernment,
    MassSumViolation,
    NonpositiveMass,
    validate_bpa,
)


class PositionOutOfRange(FrameError):
    pass


class InvalidOrdering(FrameError):
    pass


class NonpositiveValue(FrameError):
    pass


class InvariantViolation(RuntimeError):
    """A computed report broke one of its structural guarantees."""


@dataclass(frozen=True)
class Slot:
    position: int
    focal: FocalElement
    mass: float


@dataclass(frozen=True)
class OrdinalAssignment:
    """A BPA whose focal elements are confirmed at positions 1..n.

    ``slots`` is sorted by position. The pairing of proposition and
    position is explicit; nothing is inferred from element names.
    """

    frame: FrameOfDiscernment
    slots: tuple[Slot, ...]

    def __post_init__(self):
        positions = [s.position for s in self.slots]
        if positions != list(range(1, len(self.slots) + 1)):
            raise InvalidOrdering(
                f"slot positions must be 1..{len(self.slots)} in order, got {positions}"
            )
        # same checks as a BPA (sum, positivity, distinctness) without building one
        seen = set()
        for s in self.slots:
            if s.focal.frame != self.frame:
                raise FrameError(f"focal element {s.focal} belongs to a different frame")
            if s.focal.mask in seen:
                raise DuplicateFocal(f"focal element {s.focal} listed twice")
            seen.add(s.focal.mask)
            if not s.mass > 0:
                raise NonpositiveMass(f"mass of {s.focal} must be > 0, got {s.mass!r}")
        if not self.slots:
            raise MassSumViolation("a BPA needs at least one focal element")
        total = sum(s.mass for s in self.slots)
        if abs(total - 1.0) > MASS_TOLERANCE:
            raise MassSumViolation(f"masses sum to {total!r}, expected 1")

    @classmethod
    def from_positions(
        cls, bpa: BasicProbabilityAssignment, positions: Sequence[int]
    ) -> OrdinalAssignment:
        """``positions[i]`` is the confirmation position of ``bpa.entries[i]``."""
        n = len(bpa)
        if sorted(positions) != list(range(1, n + 1)):
            raise InvalidOrdering(f"ordering must be a permutation of 1..{n}, got {list(positions)}")
        slots = sorted(
            (Slot(p, f, m) for p, (f, m) in zip(positions, bpa.entries)),
            key=lambda s: s.position,
        )
        return cls(bpa.frame, tuple(slots))

    @classmethod
    def from_sequence(
        cls, bpa: BasicProbabilityAssignment, sequence: Sequence[int]
    ) -> OrdinalAssignment:
        """``sequence[p]`` is the entry index confirmed at position ``p + 1``."""
        n = len(bpa)
        if sorted(sequence) != list(range(n)):
            raise InvalidOrdering(f"sequence must be a permutation of 0..{n - 1}, got {list(sequence)}")
        return cls(
            bpa.frame,
            tuple(Slot(p + 1, *bpa.entries[i]) for p, i in enumerate(sequence)),
        )

    @property
    def n(self) -> int:
        return len(self.slots)

    @property
    def masses(self) -> tuple[float, ...]:
        return tuple(s.mass for s in self.slots)

    @property
    def cardinalities(self) -> tuple[int, ...]:
        return tuple(s.focal.cardinality for s in self.slots)

    def labels(self) -> tuple[str, ...]:
        return tuple(s.focal.label for s in self.slots)

    def to_bpa(self) -> BasicProbabilityAssignment:
        return validate_bpa(self.frame, [(s.focal, s.mass) for s in self.slots])


@dataclass(frozen=True)
class NormalizedValues:
    """Position-weighted masses, indexed by position - 1."""

    weights: tuple[int, ...]
    intermediate: tuple[float, ...]
    values: tuple[float, ...]


@dataclass(frozen=True)
class OrdinalEntropyReport:
    """Everything computed for one ordering.

    ``pairwise[j][b]`` holds U for 0-based positions ``j < b`` and is 0.0
    on and below the diagonal.
    """

    normalized: NormalizedValues
    cardinalities: tuple[int, ...]
    pairwise: tuple[tuple[float, ...], ...]
    iu: tuple[float, ...]
    inu: float

    def u(self, j: int, b: int) -> float:
        """U between 1-based positions ``j < b``."""
        n = len(self.iu)
        if not 1 <= j < b <= n:
            raise PositionOutOfRange(f"need 1 <= j < b <= {n}, got j={j}, b={b}")
        return self.pairwise[j - 1][b - 1]


def assign_weights(n: int, position: int) -> int:
    if not 1 <= position <= n:
        raise PositionOutOfRange(f"position {position} outside 1..{n}")
    return n - position + 1


def normalize_values(ordinal: OrdinalAssignment) -> NormalizedValues:
    n = ordinal.n
    weights = tuple(assign_weights(n, s.position) for s in ordinal.slots)
    intermediate = tuple(s.mass * w for s, w in zip(ordinal.slots, weights))
    total = sum(intermediate)
    return NormalizedValues(weights, intermediate, tuple(x / total for x in intermediate))


def pairwise_relative_entropy(vj: float, card_j: int, vb: float, card_b: int) -> float:
    """Relative belief entropy of an earlier value ``vj`` against a later ``vb``.

    ``vj * ln(r + e)`` where ``r`` is the ratio of the two values, each
    divided by ``2**card - 1``. Never less than ``vj``.
    """
    if not (vj > 0 and vb > 0):
        raise NonpositiveValue(f"values must be > 0, got {vj!r} and {vb!r}")
    if card_j < 1 or card_b < 1:
        raise FrameError(f"cardinalities must be >= 1, got {card_j} and {card_b}")
    ratio = (vj / (2**card_j - 1)) / (vb / (2**card_b - 1))
    return vj * math.log(ratio + math.e)


def individual_iu(values: NormalizedValues, cards: Sequence[int], j: int) -> float:
    """Staged entropy of the proposition at 1-based position ``j``; 0 for the last one."""
    v = values.values
    n = len(v)
    if not 1 <= j <= n:
        raise PositionOutOfRange(f"position {j} outside 1..{n}")
    total = 0.0
    for b in range(j, n):
        total += pairwise_relative_entropy(v[j - 1], cards[j - 1], v[b], cards[b])
    return total


def integral_inu(iu: Sequence[float]) -> float:
    total = 0.0
    for x in iu:
        total += x
    return total


def compute_ordinal_entropy(ordinal: OrdinalAssignment) -> OrdinalEntropyReport:
    values = normalize_values(ordinal)
    cards = ordinal.cardinalities
    v = values.values
    n = ordinal.n
    if not all(x > 0 for x in v):
        raise NonpositiveValue(f"normalized values must be > 0, got {v}")
    # same operations as pairwise_relative_entropy, hoisted out of the pair loop
    scaled = [x / (2**c - 1) for x, c in zip(v, cards)]
    rows = []
    iu = []
    for j in range(n):
        row = [0.0] * n
        acc = 0.0
        for b in range(j + 1, n):
            row[b] = v[j] * math.log(scaled[j] / scaled[b] + math.e)
            acc += row[b]
        rows.append(tuple(row))
        iu.append(acc)
    return OrdinalEntropyReport(values, cards, tuple(rows), tuple(iu), integral_inu(iu))


def check_report(report: OrdinalEntropyReport) -> None:
    """Raise :class:`InvariantViolation` if ``report`` is internally inconsistent."""
    iu = report.iu
    n = len(iu)
    if n and iu[-1] != 0.0:
        raise InvariantViolation(f"last IU must be exactly 0, got {iu[-1]!r}")
    if abs(sum(report.normalized.values) - 1.0) > 1e-9:
        raise InvariantViolation("normalized values do not sum to 1")
    for j in range(n):
        row = report.pairwise[j]
        if abs(sum(row[j + 1:]) - iu[j]) > 1e-12:
            raise InvariantViolation(f"IU at position {j + 1} differs from its pairwise sum")
        for b in range(j + 1, n):
            if not row[b] >= report.normalized.values[j]:
                raise InvariantViolation(f"U({j + 1},{b + 1}) below its floor")
    if abs(sum(iu) - report.inu) > 1e-12:
        raise InvariantViolation("INU differs from the IU sum")
