"""Published numeric tables for the ordinal relative belief entropy, kept verbatim.

Values are copied exactly as printed, typos included; :mod:`reproduce`
recomputes them and reports disagreements instead of correcting them.

Row notation ``P_i^j`` puts proposition ``j`` at position ``i``, so each
row stores its superscripts as ``props``: the 1-based proposition held at
positions 1..n.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Proposition:
    members: tuple[str, ...]
    mass: str


@dataclass(frozen=True)
class PublishedRow:
    label: str
    props: tuple[int, ...]
    iu: tuple[float, ...]
    inu: float
    deng: float
    dp: float


@dataclass(frozen=True)
class PublishedTable:
    table_id: str
    caption: str
    elements: tuple[str, ...]
    propositions: tuple[Proposition, ...]
    rows: tuple[PublishedRow, ...]


def _p(members: str, mass: str) -> Proposition:
    return Proposition(tuple(members.split(",")), mass)


_SINGLETONS = ("P1", "P2", "P3")

# Table 1 summarises the six-ordering average for masses (1/6, 1/2, 1/3).
TABLE_1_PROPOSITIONS = (_p("P1", "1/6"), _p("P2", "1/2"), _p("P3", "1/3"))
TABLE_1_ORDERING_INU = (1.6624, 1.3267, 2.9388, 3.1569, 2.0190, 2.6049)
TABLE_1 = {"DP": 0.0, "Deng": 1.0113, "Proposed": 2.1181}

TABLE_2 = PublishedTable(
    "2",
    "Results of six conditions",
    _SINGLETONS,
    (_p("P1", "1/4"), _p("P2", "1/6"), _p("P3", "7/12")),
    (
        PublishedRow("P1^1, P2^2, P3^3", (1, 2, 3), (1.3456, 0.2381, 0), 1.5838, 1.3844, 0),
        PublishedRow("P1^1, P2^3, P3^2", (1, 3, 2), (1.1480, 1.2734, 0), 2.4214, 1.3844, 0),
        PublishedRow("P1^2, P2^1, P3^3", (2, 1, 3), (0.8170, 0.4023, 0), 1.2194, 1.3844, 0),
        PublishedRow("P1^2, P2^3, P3^1", (2, 3, 1), (0.7037, 1.2170, 0), 1.9208, 1.3844, 0),
        PublishedRow("P1^3, P2^1, P3^2", (3, 1, 2), (3.1927, 0.3607, 0), 3.5535, 1.3844, 0),
        PublishedRow("P1^3, P2^2, P3^1", (3, 2, 1), (3.2621, 0.1998, 0), 3.4619, 1.3844, 0),
    ),
)

TABLE_3 = PublishedTable(
    "3",
    "Results of six conditions",
    _SINGLETONS,
    (_p("P1", "1/2"), _p("P2", "5/12"), _p("P3", "1/12")),
    (
        PublishedRow("P1^1, P2^2, P3^3", (1, 2, 3), (2.8174, 0.8769, 0), 3.6943, 1.3250, 0),
        PublishedRow("P1^1, P2^3, P3^2", (1, 3, 2), (3.0993, 0.0909, 0), 3.1903, 1.3250, 0),
        PublishedRow("P1^2, P2^1, P3^3", (2, 1, 3), (2.2783, 1.1524, 0), 3.4308, 1.3250, 0),
        PublishedRow("P1^2, P2^3, P3^1", (2, 3, 1), (2.5932, 0.0970, 0), 2.6902, 1.3250, 0),
        PublishedRow("P1^3, P2^1, P3^2", (3, 1, 2), (0.3431, 0.9796, 0), 1.3228, 1.3250, 0),
        PublishedRow("P1^3, P2^2, P3^1", (3, 2, 1), (0.3376, 0.7111, 0), 1.0488, 1.3250, 0),
    ),
)

TABLE_4 = PublishedTable(
    "4",
    "Results of twenty-four conditions",
    _SINGLETONS,
    (_p("P1", "4/13"), _p("P2", "3/13"), _p("P3", "5/13"), _p("P1,P2", "1/13")),
    (
        PublishedRow("P1^1, P2^2, P3^3, P4{P1,P2}^4", (1, 2, 3, 4), (3.0632, 1.1694, 0.9688, 0), 5.2015, 1.8262, 0.0769),
        PublishedRow("P1^1, P2^2, P3{P1,P2}^4, P4^3", (1, 2, 4, 3), (3.2833, 1.2077, 0.0654, 0), 4.5565, 1.8262, 0.0769),
        PublishedRow("P1^1, P2^3, P3^2, P4{P1,P2}^4", (1, 3, 2, 4), (2.9225, 2.1779, 0.4785, 0), 5.5790, 1.8262, 0.0769),
        PublishedRow("P1^1, P2^3, P3{P1,P2}^4, P4^2", (1, 3, 4, 2), (2.9787, 2.1963, 0.0599, 0), 5.2350, 1.8262, 0.0769),
        PublishedRow("P1^1, P2{P1,P2}^4, P3^2, P4^3", (1, 4, 2, 3), (3.4086, 0.2130, 0.2731, 0), 3.8948, 1.3250, 0.0769),
        PublishedRow("P1^1, P2{P1,P2}^4, P3^3, P4^2", (1, 4, 3, 2), (2.8173, 0.2266, 0.5626, 0), 3.6065, 1.8262, 0.0769),
        PublishedRow("P1^2, P2^1, P3^3, P4{P1,P2}^4", (2, 1, 3, 4), (2.1720, 1.7218, 0.9965, 0), 4.8904, 1.8262, 0.0769),
        PublishedRow("P1^2, P2^1, P3{P1,P2}^4, P4^3", (2, 1, 4, 3), (2.3137, 1.8053, 0.0676, 0), 4.1866, 1.8262, 0.0769),
        PublishedRow("P1^2, P2^3, P3^1, P4{P1,P4}^4", (2, 3, 1, 4), (2.1179, 2.2458, 0.7300, 0), 2.8004, 1.8262, 0.0769),
        PublishedRow("P1^2, P2^3, P3{P1,P2}^4, P4^1", (2, 3, 4, 1), (2.1936, 2.3156, 0.0642, 0), 4.5735, 1.8262, 0.0769),
        PublishedRow("P1^2, P2{P1,P2}^4, P3^1, P4^3", (2, 4, 1, 3), (2.4691, 0.2267, 0.4179, 0), 3.1138, 1.8262, 0.0769),
        PublishedRow("P1^2, P2{P1,P2}^4, P3^3, P4^1", (2, 4, 3, 1), (2.3993, 0.2197, 0.5697, 0), 3.1887, 1.8262, 0.0769),
        PublishedRow("P1^3, P2^1, P3^2, P4{P1,P2}^4", (3, 1, 2, 4), (3.8036, 1.6023, 0.46631, 0), 5.8723, 1.8262, 0.0769),
        PublishedRow("P1^3, P2^1, P3{P1,P2}^4, P4^2", (3, 1, 4, 2), (3.8947, 1.6008, 0.0583, 0), 5.5538, 1.8262, 0.0769),
        PublishedRow("P1^3, P2^2, P3^1, P4{P1,P2}^4", (3, 2, 1, 4), (3.8885, 1.1221, 0.6916, 0), 5.7024, 1.8262, 0.0769),
        PublishedRow("P1^3, P2^2, P3{P1,P2}^4, P4^1", (3, 2, 4, 1), (4.0737, 1.1286, 0.0605, 0), 5.2629, 1.8262, 0.0769),
        PublishedRow("P1^3, P2{P1,P2}^4, P3^1, P4^2", (3, 4, 1, 2), (4.1261, 0.1906, 0.3961, 0), 4.7129, 1.8262, 0.0769),
        PublishedRow("P1^3, P2{P1,P2}^4, P3^2, P4^1", (3, 4, 2, 1), (4.2224, 0.1952, 0.2617, 0), 4.6794, 1.8262, 0.0769),
        PublishedRow("P1{P1,P2}^4, P2^1, P3^2, P4^3", (4, 1, 2, 3), (0.4758, 1.4152, 0.3034, 0), 2.1945, 1.8262, 0.0769),
        PublishedRow("P1{P1,P2}^4, P2^1, P3^3, P4^2", (4, 1, 3, 2), (0.4932, 0.9880, 0.4501, 0), 1.9314, 1.8262, 0.0769),
        PublishedRow("P1{P1,P2}^4, P2^2, P3^1, P4^3", (4, 2, 1, 3), (0.4932, 0.9880, 0.4501, 0), 1.9314, 1.8262, 0.0769),
        PublishedRow("P1{P1,P2}^4, P2^2, P3^3, P4^1", (4, 2, 3, 1), (0.4765, 0.9630, 0.6119, 0), 2.0514, 1.8262, 0.0769),
        PublishedRow("P1{P1,P2}^4, P2^3, P3^1, P4^2", (4, 3, 1, 2), (0.4324, 1.7840, 0.4489, 0), 2.6654, 1.3250, 0.0769),
        PublishedRow("P1{P1,P2}^4, P2^3, P3^2, P4^1", (4, 3, 2, 1), (0.4450, 1.8202, 0.2978, 0), 2.5630, 1.8262, 0.0769),
    ),
)

TABLE_5 = PublishedTable(
    "5",
    "Results of six conditions",
    ("P1", "P2"),
    (_p("P1", "6/17"), _p("P2", "4/17"), _p("P1,P2", "7/17")),
    (
        PublishedRow("P1^1, P2^2, P3{P1,P2}^3", (1, 2, 3), (2.1534, 0.4402, 0), 2.5936, 1.5485, 0.4117),
        PublishedRow("P1^1, P2{P1,P2}^3, P3^2", (1, 3, 2), (2.0867, 1.0039, 0), 3.0906, 1.5485, 0.4117),
        PublishedRow("P1^2, P2^1, P3{P1,P2}^3", (2, 1, 3), (1.3065, 0.7981, 0), 2.1046, 1.5485, 0.4117),
        PublishedRow("P1^2, P2{P1,P2}^3, P3^1", (2, 3, 1), (1.2898, 0.9948, 0), 2.2846, 1.5485, 0.4117),
        PublishedRow("P1{P1,P2}^3, P2^1, P3^2", (3, 1, 2), (2.5047, 0.7982, 0), 3.3029, 1.5485, 0.4117),
        PublishedRow("P1{P1,P2}^3, P2^2, P3^1", (3, 2, 1), (2.5544, 0.4353, 0), 2.9898, 1.5485, 0.4117),
    ),
)

TABLES = {t.table_id: t for t in (TABLE_2, TABLE_3, TABLE_4, TABLE_5)}
