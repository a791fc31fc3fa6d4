"""JSON frame documents.

A document looks like::

    {
      "elements": ["P1", "P2", "P3"],
      "focals": [
        {"members": ["P1"], "mass": "1/3"},
        {"members": ["P2"], "mass": "1/3"},
        {"members": ["P3"], "mass": "1/3"}
      ],
      "ordering": [1, 2, 3]
    }

Masses are decimal or ``p/q`` strings. ``ordering`` is optional and gives
the confirmation position of each focal entry, in entry order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .frames import (
    BasicProbabilityAssignment,
    FrameError,
    NonpositiveMass,
    build_frame,
    make_focal,
    validate_bpa,
)
from .ordinal import OrdinalAssignment


class ParseError(FrameError):
    pass


class SchemaError(FrameError):
    pass


def parse_mass(raw: str | int | float, path: str | None = None) -> float:
    """Parse ``"0.25"``, ``"1/3"`` or a JSON number into a double."""
    if isinstance(raw, bool) or not isinstance(raw, (str, int, float)):
        raise SchemaError(f"mass must be a string or number, got {raw!r}", path)
    try:
        value = Fraction(raw.strip()) if isinstance(raw, str) else Fraction(raw)
    except (ValueError, ZeroDivisionError, OverflowError):
        raise SchemaError(f"cannot parse mass {raw!r}", path) from None
    if value <= 0:
        raise NonpositiveMass(f"mass must be > 0, got {raw!r}", path)
    return float(value)


@dataclass(frozen=True)
class FocalSpec:
    members: tuple[str, ...]
    mass: str | int | float  # kept verbatim for round-tripping


@dataclass(frozen=True)
class FrameDocument:
    elements: tuple[str, ...]
    focals: tuple[FocalSpec, ...]
    ordering: tuple[int, ...] | None = None

    @classmethod
    def from_json(cls, text: str | bytes) -> FrameDocument:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
        return cls.from_dict(data)

    @classmethod
    def from_dict(cls, data: Any) -> FrameDocument:
        if not isinstance(data, dict):
            raise SchemaError("document must be a JSON object", "$")
        unknown = set(data) - {"elements", "focals", "ordering"}
        if unknown:
            raise SchemaError(f"unexpected keys {sorted(unknown)}", "$")

        elements = data.get("elements")
        if not isinstance(elements, list) or not all(isinstance(e, str) for e in elements):
            raise SchemaError("'elements' must be a list of strings", "$.elements")

        focals = data.get("focals")
        if not isinstance(focals, list) or not focals:
            raise SchemaError("'focals' must be a nonempty list", "$.focals")
        specs = []
        for i, item in enumerate(focals):
            where = f"$.focals[{i}]"
            if not isinstance(item, dict) or set(item) != {"members", "mass"}:
                raise SchemaError("focal entries need exactly 'members' and 'mass'", where)
            members = item["members"]
            if not isinstance(members, list) or not all(isinstance(m, str) for m in members):
                raise SchemaError("'members' must be a list of strings", where + ".members")
            specs.append(FocalSpec(tuple(members), item["mass"]))

        ordering = data.get("ordering")
        if ordering is not None:
            if not isinstance(ordering, list) or not all(
                isinstance(p, int) and not isinstance(p, bool) for p in ordering
            ):
                raise SchemaError("'ordering' must be a list of integers", "$.ordering")
            ordering = tuple(ordering)
        return cls(tuple(elements), tuple(specs), ordering)

    def build(self) -> tuple[BasicProbabilityAssignment, OrdinalAssignment | None]:
        """Validate into a BPA plus, when ``ordering`` is present, an ordinal assignment.

        Validation errors carry a JSON path to the offending value.
        """
        try:
            frame = build_frame(self.elements)
        except FrameError as exc:
            exc.path = "$.elements"
            raise
        entries = []
        for i, spec in enumerate(self.focals):
            where = f"$.focals[{i}]"
            try:
                focal = make_focal(frame, spec.members)
            except FrameError as exc:
                exc.path = where + ".members"
                raise
            entries.append((focal, parse_mass(spec.mass, where + ".mass")))
        try:
            bpa = validate_bpa(frame, entries)
        except FrameError as exc:
            exc.path = "$.focals"
            raise
        if self.ordering is None:
            return bpa, None
        if len(self.ordering) != len(bpa):
            raise SchemaError(
                f"'ordering' has {len(self.ordering)} positions for {len(bpa)} focals",
                "$.ordering",
            )
        try:
            return bpa, OrdinalAssignment.from_positions(bpa, self.ordering)
        except FrameError as exc:
            exc.path = "$.ordering"
            raise

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "elements": list(self.elements),
            "focals": [{"members": list(f.members), "mass": f.mass} for f in self.focals],
        }
        if self.ordering is not None:
            out["ordering"] = list(self.ordering)
        return out

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def parse_frame_document(
    text: str | bytes,
) -> tuple[BasicProbabilityAssignment, OrdinalAssignment | None]:
    return FrameDocument.from_json(text).build()
