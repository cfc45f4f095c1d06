from fractions import Fraction

import pytest

from expaddr import (
    AddressError,
    AddressSyntaxError,
    InfiniteAddress,
    IntermediateAddress,
    TERMINATOR,
    circular_order,
    compare,
    intermediate,
    parse,
    periodic,
    prepend,
    shift,
)


H = Fraction(1, 2)


def test_parse_infinite():
    a = parse("(0 1 1 0 0 2)")
    assert a == InfiniteAddress((), (0, 1, 1, 0, 0, 2))
    assert str(a) == "(0 1 1 0 0 2)"


def test_parse_intermediate():
    a = parse("0 1 1 0 1/2 inf")
    assert a == IntermediateAddress((0, 1, 1, 0), H)
    assert a.length == 6
    assert str(a) == "0 1 1 0 1/2 inf"


def test_parse_preperiodic_canonicalizes():
    # pre=[2,1], per=[0,1] absorbs its tail: same circle point as 2 (1 0)
    a = parse("2 1 (0 1)")
    assert a == InfiniteAddress((2,), (1, 0))
    assert [a.entry(k) for k in range(1, 6)] == [2, 1, 0, 1, 0]


def test_parse_terminator_and_negative_tail():
    assert parse("inf") is not None and parse("inf").is_terminator
    assert parse("-3/2 inf") == IntermediateAddress((), Fraction(-3, 2))


@pytest.mark.parametrize("bad", ["", "0 1", "1/2 0 inf", "()", "( )", "0 (1", "1/3 inf", "x inf"])
def test_parse_rejects(bad):
    with pytest.raises(AddressSyntaxError):
        parse(bad)


def test_format_parse_roundtrip():
    for text in ["(0 1 1 0 0 2)", "0 3 0 1/2 inf", "inf", "-1 (2 -2)", "1/2 inf"]:
        assert str(parse(text)) == text


def test_canonical_absorption():
    assert InfiniteAddress((0,), (0,)) == periodic([0])
    assert InfiniteAddress((), (1, 1, 1)) == periodic([1])
    assert str(InfiniteAddress((0,), (0,))) == "(0)"


def test_compare_paper_examples():
    s = parse("0 1 1 0 1/2 inf")
    assert compare(periodic([0, 1, 1, 0, 0, 2]), s) < 0  # first diff at entry 5: 0 < 1/2
    assert compare(periodic([0, 1]), periodic([0, 1])) == 0
    assert compare(s, periodic([0, 2, 0, 1, 0, 1])) < 0  # entry 2: 1 < 2


def test_compare_mixed_lengths():
    assert compare(parse("0 1/2 inf"), parse("0 0 1/2 inf")) > 0
    assert compare(parse("1/2 inf"), periodic([1])) < 0
    assert compare(periodic([0]), parse("1/2 inf")) < 0


def test_compare_terminator_rejected():
    with pytest.raises(AddressError):
        compare(TERMINATOR, periodic([0]))


def test_circular_order():
    half = parse("1/2 inf")
    assert circular_order(periodic([0]), half, TERMINATOR)
    assert circular_order(TERMINATOR, periodic([0]), half)
    # reversal of the ascending triple is negatively oriented
    assert not circular_order(periodic([1]), half, periodic([0]))
    # and any cyclic rotation of an oriented triple keeps its orientation
    assert circular_order(periodic([1]), periodic([0]), half) == circular_order(
        periodic([0]), half, periodic([1])
    )


def test_circular_order_distinct():
    with pytest.raises(AddressError):
        circular_order(periodic([0]), periodic([0]), TERMINATOR)


def test_shift():
    assert shift(periodic([0, 1, 1, 0, 0, 2])) == periodic([1, 1, 0, 0, 2, 0])
    assert shift(parse("0 1 1 0 1/2 inf")) == parse("1 1 0 1/2 inf")
    assert shift(parse("1/2 inf")) == TERMINATOR
    with pytest.raises(AddressError):
        shift(TERMINATOR)


def test_prepend():
    assert prepend(1, parse("0 1 1 0 1/2 inf")) == parse("1 0 1 1 0 1/2 inf")
    assert prepend(H, TERMINATOR) == parse("1/2 inf")
    assert prepend(0, periodic([0])) == periodic([0])
    with pytest.raises(AddressError):
        prepend(H, periodic([0]))
    with pytest.raises(AddressError):
        prepend(1, TERMINATOR)


def test_shift_prepend_inverse():
    for a in [periodic([0, 1]), parse("0 3 0 1/2 inf"), InfiniteAddress((2,), (1, 0))]:
        for j in (-2, 0, 5):
            assert shift(prepend(j, a)) == a


def test_entries_unbounded_magnitude():
    big = 10**30
    a = periodic([big, -big])
    assert a.entry(1) == big and a.entry(2) == -big
    assert compare(a, periodic([big - 1])) > 0


def test_intermediate_helper():
    assert intermediate(0, 3, 0, H) == parse("0 3 0 1/2 inf")
    assert intermediate() is not None and intermediate().is_terminator
