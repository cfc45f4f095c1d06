from fractions import Fraction

import pytest

from expaddr import (
    Boundary,
    INF,
    InfiniteInternalAddressError,
    InternalAddress,
    Itinerary,
    STAR,
    finite_itinerary,
    internal_from_kneading,
    kneading_from_internal,
    parse_angled,
    parse_internal,
    periodic_itinerary,
)


def test_worked_example():
    k = finite_itinerary((0, 2, 0, 0, STAR))
    ia = internal_from_kneading(k)
    assert ia == InternalAddress([(1, 0), (2, 2), (4, -2), (5, INF)])
    assert kneading_from_internal(ia) == k


def test_second_example():
    k = finite_itinerary((0, 1, 0, 0, 0, STAR))
    assert internal_from_kneading(k) == InternalAddress([(1, 0), (2, 1), (4, -1), (6, INF)])


def test_constant_kneading():
    assert internal_from_kneading(periodic_itinerary((0,))) == InternalAddress([(1, 0)])
    assert kneading_from_internal(InternalAddress([(1, 0)])) == periodic_itinerary((0,))


def test_single_step():
    assert kneading_from_internal(InternalAddress([(1, 0), (2, INF)])) == finite_itinerary((0, STAR))


def test_boundary_symbol_gives_half_integer():
    # kneading of per(01): 0 then the boundary symbol 1|0
    k = periodic_itinerary((0, Boundary(1)))
    ia = internal_from_kneading(k)
    assert ia == InternalAddress([(1, 0), (2, Fraction(1, 2))])
    assert kneading_from_internal(ia) == k


def test_boundary_at_position_one():
    k = periodic_itinerary((Boundary(0),))
    ia = internal_from_kneading(k)
    assert ia == InternalAddress([(1, Fraction(-1, 2))])
    assert kneading_from_internal(ia) == k


def test_star_terminated_always_finite():
    k = finite_itinerary((5, -3, 5, STAR))
    ia = internal_from_kneading(k)
    assert ia.entries[-1] == (4, INF)
    assert kneading_from_internal(ia) == k


def test_preperiodic_kneading_is_infinite():
    with pytest.raises(InfiniteInternalAddressError):
        internal_from_kneading(Itinerary((0,), (1,)))


def test_periodic_kneading_terminates():
    k = periodic_itinerary((0, 1, 0, 0))
    ia = internal_from_kneading(k)
    assert ia.periods[-1] == 4
    assert kneading_from_internal(ia) == k


def test_literal_roundtrip():
    for text in ["(1,0)->(2,2)->(4,-2)->(5,inf)", "(1,0)", "(1,-1)->(3,inf)", "(1,0)->(2,1+1/2)"]:
        assert str(parse_internal(text)) == text


def test_angled_literal_roundtrip():
    for text in ["(1,1/3)->(3,inf)", "(1,1/2)->(2,1/2)->(4,-1/2)->(6,inf)", "(1,-1-1/3)->(3,inf)"]:
        assert str(parse_angled(text)) == text


def test_angled_literal_mixed_numbers():
    a = parse_angled("(1,1+1/3)->(3,inf)")
    assert a.entries[0][1] == Fraction(4, 3)
    b = parse_angled("(1,-2-1/2)->(2,inf)")
    assert b.entries[0][1] == Fraction(-5, 2)


def test_validation():
    with pytest.raises(ValueError):
        InternalAddress([(2, 1)])  # must start at period 1
    with pytest.raises(ValueError):
        InternalAddress([(1, 0), (2, INF), (3, 1)])  # INF only final
    with pytest.raises(ValueError):
        InternalAddress([(1, 0), (2, 0)])  # sector number zero
    with pytest.raises(ValueError):
        parse_angled("(1,2)->(3,inf)")  # integer height
