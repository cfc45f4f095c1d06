from fractions import Fraction
from itertools import product

import pytest

from expaddr import (
    HyperbolicComponent,
    INF,
    InternalAddress,
    PeriodOneError,
    TERMINATOR,
    TuningBlockTable,
    Variant,
    circular_order,
    intermediate,
    internal_from_kneading,
    kneading,
    parse,
    periodic,
    shift_iter,
    tune,
    tuning_block,
)

H = Fraction(1, 2)
T_HALF = TuningBlockTable("1/2 inf")
T_030 = TuningBlockTable("0 3 0 1/2 inf")


def test_blocks():
    assert tuning_block(T_HALF, 1) == (0, 1)
    assert tuning_block(T_HALF, 0) == (1, 0)
    # index u(W)+1 is the lower characteristic address of the base
    t0110 = TuningBlockTable("0 1 1 0 1/2 inf")
    assert tuning_block(t0110, 2) == (0, 1, 1, 0, 0, 2)
    assert tuning_block(t0110, 1) == (0, 2, 0, 1, 0, 1)


def test_period_one_base_rejected():
    with pytest.raises(PeriodOneError):
        TuningBlockTable("inf")


def test_wrap_point_maps_to_base():
    assert tune(T_HALF, TERMINATOR, Variant.UPPER) == parse("1/2 inf")
    assert tune(T_HALF, TERMINATOR, Variant.LOWER) == parse("1/2 inf")


def test_anchor_choices():
    assert tune(T_HALF, periodic([0]), Variant.UPPER) == periodic([0, 1])
    assert tune(T_HALF, periodic([0]), Variant.LOWER) == periodic([1, 0])


def test_intermediate_image():
    out = tune(T_HALF, parse("1/2 inf"), Variant.UPPER)
    assert out.length == 4
    ia = internal_from_kneading(kneading(out))
    assert ia == InternalAddress([(1, 0), (2, 1), (4, INF)])


def _expected_tuned_internal(base: HyperbolicComponent, r) -> InternalAddress:
    """Tuning-theorem formula for the internal address of tau(r)."""
    n = base.period
    base_entries = base.internal_address.entries
    if r == TERMINATOR:
        return base.internal_address
    r_entries = HyperbolicComponent(r).internal_address.entries
    m1 = r_entries[0][1]
    m1p = m1 + 1 if m1 >= 0 else m1
    tail = tuple((n * ni, mi) for ni, mi in r_entries[1:])
    return InternalAddress(base_entries[:-1] + ((n, m1p),) + tail)


@pytest.mark.parametrize("table", [T_HALF, T_030], ids=["half", "030"])
def test_tuning_theorem_over_small_intermediates(table):
    base = table.base
    n = base.period
    cases = [TERMINATOR]
    for tail in (Fraction(-1, 2), H):
        cases.append(intermediate(tail))
        for b in (-1, 0, 1):
            cases.append(intermediate(b, tail))
    for r in cases:
        out = tune(table, r, Variant.UPPER)
        assert out.length == r.length * n  # length law
        got = internal_from_kneading(kneading(out)) if out.length > 1 else None
        if out.length > 1:
            assert got == _expected_tuned_internal(base, r), f"r={r}"


def test_tuning_shift_commutes():
    lhs = shift_iter(tune(T_HALF, periodic([0, 1, 1]), Variant.UPPER), 2)
    rhs = tune(T_HALF, periodic([1, 1, 0]), Variant.UPPER)
    assert lhs == rhs


def test_tuning_preserves_circular_order():
    pts = [periodic([0]), parse("1/2 inf"), periodic([1]), TERMINATOR, periodic([-1])]
    images = [tune(T_HALF, p, Variant.UPPER) for p in pts]
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            for k in range(j + 1, len(pts)):
                assert circular_order(pts[i], pts[j], pts[k]) == circular_order(
                    images[i], images[j], images[k]
                )


def test_tuning_periodic_period_multiplies():
    out = tune(T_030, periodic([0, 1]), Variant.UPPER)
    assert len(out.per) % len(T_030.base.addr.body + (1,)) != 0 or out.pre == ()
    assert out.pre == ()
    assert len(out.per) in (5, 10)  # divides m*n


def test_tuning_eventually_periodic_input():
    r = parse("2 (0 1)")  # canonical preperiodic address
    out = tune(T_HALF, r, Variant.UPPER)
    assert out.pre != () or len(out.per) <= 6
    # sigma^{2*pre} of the image equals the image of the periodic part
    core = tune(T_HALF, periodic(r.per), Variant.UPPER)
    assert shift_iter(out, 2 * len(r.pre)) == core
