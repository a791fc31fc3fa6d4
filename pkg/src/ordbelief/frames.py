"""Frames of discernment, focal elements and basic probability assignments.

Focal elements are stored as bitmasks over the frame's element order, so
subset equality is integer equality and cardinality is a popcount.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_FRAME_SIZE = 20
MASS_TOLERANCE = 1e-9


class FrameError(ValueError):
    """Base class for every validation failure in this package.

    ``path`` optionally locates the offending value inside an input
    document (for example ``$.focals[2].mass``).
    """

    def __init__(self, message: str, path: str | None = None):
        super().__init__(message)
        self.path = path

    def __str__(self) -> str:
        msg = super().__str__()
        return f"{self.path}: {msg}" if self.path else msg


class EmptyFrame(FrameError):
    pass


class DuplicateElement(FrameError):
    pass


class FrameTooLarge(FrameError):
    pass


class UnknownElement(FrameError):
    pass


class EmptySubset(FrameError):
    pass


class MassSumViolation(FrameError):
    pass


class NonpositiveMass(FrameError):
    pass


class DuplicateFocal(FrameError):
    pass


@dataclass(frozen=True)
class FrameOfDiscernment:
    """Ordered, finite set of named base elements."""

    elements: tuple[str, ...]

    def __post_init__(self):
        if not self.elements:
            raise EmptyFrame("a frame needs at least one element")
        if len(self.elements) > MAX_FRAME_SIZE:
            raise FrameTooLarge(
                f"frame has {len(self.elements)} elements, limit is {MAX_FRAME_SIZE}"
            )
        seen = set()
        for name in self.elements:
            if not isinstance(name, str) or not name:
                raise FrameError(f"element names must be nonempty strings, got {name!r}")
            if name in seen:
                raise DuplicateElement(f"duplicate element {name!r}")
            seen.add(name)

    @property
    def k(self) -> int:
        return len(self.elements)

    def index(self, name: str) -> int:
        try:
            return self.elements.index(name)
        except ValueError:
            raise UnknownElement(f"{name!r} is not an element of the frame") from None

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)


@dataclass(frozen=True)
class FocalElement:
    """Nonempty subset of a frame, held as a bitmask.

    Bit ``i`` of ``mask`` is set when ``frame.elements[i]`` is a member.
    """

    frame: FrameOfDiscernment
    mask: int

    def __post_init__(self):
        if self.mask <= 0:
            raise EmptySubset("the empty set cannot be a focal element")
        if self.mask >> self.frame.k:
            raise UnknownElement(f"mask {self.mask:#b} has bits outside the frame")

    @property
    def cardinality(self) -> int:
        return self.mask.bit_count()

    @property
    def members(self) -> tuple[str, ...]:
        return tuple(e for i, e in enumerate(self.frame.elements) if self.mask >> i & 1)

    @property
    def label(self) -> str:
        m = self.members
        return m[0] if len(m) == 1 else "{" + ",".join(m) + "}"

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class BasicProbabilityAssignment:
    """Validated mass function: distinct focal elements with positive masses summing to one.

    Entries keep their input order. Use :meth:`canonical` when a
    summation must not depend on that order.
    """

    frame: FrameOfDiscernment
    entries: tuple[tuple[FocalElement, float], ...]

    def __post_init__(self):
        if not self.entries:
            raise MassSumViolation("a BPA needs at least one focal element")
        seen = set()
        for focal, mass in self.entries:
            if focal.frame != self.frame:
                raise FrameError(f"focal element {focal} belongs to a different frame")
            if focal.mask in seen:
                raise DuplicateFocal(f"focal element {focal} listed twice")
            seen.add(focal.mask)
            if not mass > 0:
                raise NonpositiveMass(f"mass of {focal} must be > 0, got {mass!r}")
        total = sum(m for _, m in self.entries)
        if abs(total - 1.0) > MASS_TOLERANCE:
            raise MassSumViolation(f"masses sum to {total!r}, expected 1")

    @property
    def focals(self) -> tuple[FocalElement, ...]:
        return tuple(f for f, _ in self.entries)

    @property
    def masses(self) -> tuple[float, ...]:
        return tuple(m for _, m in self.entries)

    def canonical(self) -> list[tuple[FocalElement, float]]:
        """Entries sorted by ascending bitmask."""
        return sorted(self.entries, key=lambda e: e[0].mask)

    def __len__(self) -> int:
        return len(self.entries)


def build_frame(names: Iterable[str]) -> FrameOfDiscernment:
    return FrameOfDiscernment(tuple(names))


def make_focal(frame: FrameOfDiscernment, members: Iterable[str]) -> FocalElement:
    """Focal element for ``members``; repeated names collapse to one bit."""
    mask = 0
    for name in members:
        mask |= 1 << frame.index(name)
    if not mask:
        raise EmptySubset("a focal element needs at least one member")
    return FocalElement(frame, mask)


def validate_bpa(
    frame: FrameOfDiscernment,
    entries: Sequence[tuple[FocalElement, float]],
) -> BasicProbabilityAssignment:
    return BasicProbabilityAssignment(frame, tuple((f, float(m)) for f, m in entries))


def bpa_from_masses(
    masses: dict[str, float] | Sequence[tuple[Sequence[str] | str, float]],
    frame: FrameOfDiscernment | None = None,
) -> BasicProbabilityAssignment:
    """Convenience constructor from labels, e.g. ``{"P1": 0.5, ("P1", "P2"): 0.5}``.

    A string key is a singleton; any other key is a member sequence. The
    frame defaults to every member mentioned, in first-seen order.
    """
    items = list(masses.items()) if isinstance(masses, dict) else list(masses)
    groups = [(m,) if isinstance(m, str) else tuple(m) for m, _ in items]
    if frame is None:
        names: dict[str, None] = {}
        for g in groups:
            names.update(dict.fromkeys(g))
        frame = build_frame(names)
    return validate_bpa(frame, [(make_focal(frame, g), v) for g, (_, v) in zip(groups, items)])
