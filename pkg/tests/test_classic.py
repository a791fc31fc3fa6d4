import math
from fractions import Fraction

import pytest

import oracle
from ordbelief import bpa_from_masses, deng_entropy, dp_hartley_entropy

TABLE2 = [("P1", 1 / 4), ("P2", 1 / 6), ("P3", 7 / 12)]
TABLE3 = [("P1", 1 / 2), ("P2", 5 / 12), ("P3", 1 / 12)]
TABLE4 = [("P1", 4 / 13), ("P2", 3 / 13), ("P3", 5 / 13), (("P1", "P2"), 1 / 13)]
TABLE5 = [("P1", 6 / 17), ("P2", 4 / 17), (("P1", "P2"), 7 / 17)]


def test_dp_zero_for_singletons():
    assert dp_hartley_entropy(bpa_from_masses(TABLE2)) == 0.0


def test_dp_with_union():
    assert dp_hartley_entropy(bpa_from_masses(TABLE4)) == pytest.approx(0.0769, abs=1e-4)
    assert dp_hartley_entropy(bpa_from_masses(TABLE5)) == pytest.approx(0.4117, abs=1e-4)
    # log2|{P1,P2}| = 1, so DP is just the union's mass
    assert dp_hartley_entropy(bpa_from_masses(TABLE5)) == pytest.approx(7 / 17, abs=1e-15)


@pytest.mark.parametrize(
    "entries, expected",
    [
        (TABLE2, 1.384431504340598),
        (TABLE3, 1.325011210824177),
        # with the 2^|A|-1 factor; the printed 1.5485 / 1.8262 omit it
        (TABLE5, 2.201196843974923),
        (TABLE4, 1.948165450765775),
    ],
)
def test_deng_against_frozen_oracle(entries, expected):
    assert deng_entropy(bpa_from_masses(entries)) == pytest.approx(expected, abs=1e-12)


def test_deng_printed_values_for_singleton_tables():
    assert deng_entropy(bpa_from_masses(TABLE2)) == pytest.approx(1.3844, abs=1e-3)
    assert deng_entropy(bpa_from_masses(TABLE3)) == pytest.approx(1.3250, abs=1e-3)


def test_deng_single_focal_is_zero():
    assert deng_entropy(bpa_from_masses({"P1": 1.0})) == 0.0


def test_deng_certain_pair_is_log2_3():
    assert deng_entropy(bpa_from_masses([(("P1", "P2"), 1.0)])) == pytest.approx(math.log2(3), abs=1e-15)


def test_deng_nats():
    bpa = bpa_from_masses([("P1", 1 / 6), ("P2", 1 / 2), ("P3", 1 / 3)])
    assert deng_entropy(bpa, base=math.e) == pytest.approx(1.011404264707352, abs=1e-12)


def test_oracle_agrees_on_frozen_deng():
    masses = [Fraction(6, 17), Fraction(4, 17), Fraction(7, 17)]
    assert float(oracle.deng(masses, [1, 1, 2])) == pytest.approx(2.201196843974923, abs=1e-14)


def test_entry_order_does_not_change_bits():
    a = bpa_from_masses(TABLE4)
    b = bpa_from_masses(list(reversed(TABLE4)), a.frame)
    assert deng_entropy(a) == deng_entropy(b)
    assert dp_hartley_entropy(a) == dp_hartley_entropy(b)
