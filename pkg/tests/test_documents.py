import json
from pathlib import Path

import pytest

from ordbelief.documents import FrameDocument, ParseError, SchemaError, parse_frame_document, parse_mass
from ordbelief.frames import DuplicateFocal, MassSumViolation, NonpositiveMass, UnknownElement
from ordbelief.ordinal import InvalidOrdering

DATA = Path(__file__).resolve().parent.parent / "data"

EXAMPLE1 = {
    "elements": ["P1", "P2", "P3"],
    "focals": [
        {"members": ["P1"], "mass": "1/3"},
        {"members": ["P2"], "mass": "1/3"},
        {"members": ["P3"], "mass": "1/3"},
    ],
    "ordering": [1, 2, 3],
}


def doc(**changes):
    d = json.loads(json.dumps(EXAMPLE1))
    d.update(changes)
    return json.dumps(d)


def test_example1_document():
    bpa, ordinal = parse_frame_document(doc())
    assert bpa.masses == (1 / 3, 1 / 3, 1 / 3)
    assert ordinal.labels() == ("P1", "P2", "P3")


def test_ordering_optional():
    d = dict(EXAMPLE1)
    del d["ordering"]
    bpa, ordinal = parse_frame_document(json.dumps(d))
    assert ordinal is None
    assert len(bpa) == 3


def test_ordering_is_position_per_focal():
    _, ordinal = parse_frame_document(doc(ordering=[1, 3, 2]))
    assert ordinal.labels() == ("P1", "P3", "P2")


@pytest.mark.parametrize("raw, value", [("1/3", 1 / 3), ("0.25", 0.25), (" 7/12 ", 7 / 12), (0.5, 0.5), (1, 1.0)])
def test_parse_mass(raw, value):
    assert parse_mass(raw) == value


@pytest.mark.parametrize("raw", ["abc", "1/0", "", None, True, [1]])
def test_parse_mass_rejects(raw):
    with pytest.raises(SchemaError):
        parse_mass(raw)


def test_zero_mass_reports_path():
    d = json.loads(doc())
    d["focals"][0]["mass"] = "0/1"
    with pytest.raises(NonpositiveMass) as info:
        parse_frame_document(json.dumps(d))
    assert info.value.path == "$.focals[0].mass"
    assert "$.focals[0].mass" in str(info.value)


def test_unknown_member_reports_path():
    d = json.loads(doc())
    d["focals"][2]["members"] = ["P9"]
    with pytest.raises(UnknownElement) as info:
        parse_frame_document(json.dumps(d))
    assert info.value.path == "$.focals[2].members"


def test_mass_sum_reports_path():
    d = json.loads(doc())
    d["focals"][2]["mass"] = "1/4"
    with pytest.raises(MassSumViolation) as info:
        parse_frame_document(json.dumps(d))
    assert info.value.path == "$.focals"


def test_duplicate_focal():
    d = json.loads(doc())
    d["focals"][2]["members"] = ["P1"]
    with pytest.raises(DuplicateFocal):
        parse_frame_document(json.dumps(d))


@pytest.mark.parametrize("ordering", [[1, 1, 2], [0, 1, 2], [2, 3, 4]])
def test_bad_ordering(ordering):
    with pytest.raises(InvalidOrdering) as info:
        parse_frame_document(doc(ordering=ordering))
    assert info.value.path == "$.ordering"


def test_ordering_length_mismatch():
    with pytest.raises(SchemaError):
        parse_frame_document(doc(ordering=[1, 2]))


def test_invalid_json():
    with pytest.raises(ParseError):
        parse_frame_document("{not json")


@pytest.mark.parametrize(
    "bad",
    [
        "[]",
        json.dumps({"elements": "P1", "focals": []}),
        json.dumps({"elements": ["P1"], "focals": []}),
        json.dumps({"elements": ["P1"], "focals": [{"members": "P1", "mass": "1"}]}),
        json.dumps({"elements": ["P1"], "focals": [{"members": ["P1"]}]}),
        json.dumps({"elements": ["P1"], "focals": [{"members": ["P1"], "mass": "1"}], "ordering": ["1"]}),
        json.dumps({"elements": ["P1"], "focals": [{"members": ["P1"], "mass": "1"}], "extra": 1}),
    ],
)
def test_schema_errors(bad):
    with pytest.raises(SchemaError):
        parse_frame_document(bad)


def test_round_trip_keeps_mass_strings_and_bits():
    original = FrameDocument.from_json(doc())
    again = FrameDocument.from_json(original.to_json())
    assert again == original
    assert [f.mass for f in again.focals] == ["1/3", "1/3", "1/3"]
    assert again.build()[0].masses == original.build()[0].masses


@pytest.mark.parametrize("name", ["example1.json", "table5_row1.json", "case5.json", "table4.json"])
def test_shipped_data_files_parse(name):
    bpa, _ = parse_frame_document((DATA / name).read_text())
    assert abs(sum(bpa.masses) - 1) < 1e-9
