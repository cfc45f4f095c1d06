"""Desk-scale exhaustive enumeration of addresses and components."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .addresses import (
    InfiniteAddress,
    IntermediateAddress,
    TERMINATOR,
    compare,
)
from .components import HyperbolicComponent


@dataclass(frozen=True)
class EnumerationBounds:
    """Lengths/periods up to max_size, entries in [-entry_bound, entry_bound]."""

    max_size: int = 5
    entry_bound: int = 2

    def __post_init__(self):
        if self.max_size < 1 or self.entry_bound < 0:
            raise ValueError("bounds must be positive")


DEFAULT_BOUNDS = EnumerationBounds()


def enumerate_intermediate(bounds: EnumerationBounds) -> list[IntermediateAddress]:
    """All intermediate addresses within bounds, linearly ordered, end marker last.

    Tails range over the half-integers strictly between -entry_bound and
    entry_bound, so each length n >= 2 contributes (2B+1)^(n-2) * 2B addresses.
    """
    b = bounds.entry_bound
    ints = range(-b, b + 1)
    tails = [Fraction(2 * k + 1, 2) for k in range(-b, b)]
    out = []
    for n in range(2, bounds.max_size + 1):
        for body in product(ints, repeat=n - 2):
            for tail in tails:
                out.append(IntermediateAddress(body, tail))
    out.sort(key=_linear_key)
    out.append(TERMINATOR)
    return out


def enumerate_periodic(bounds: EnumerationBounds) -> list[InfiniteAddress]:
    """All periodic addresses of exact period <= max_size within bounds, sorted.

    Distinct sequences are distinct circle points (rotations are not identified);
    words that repeat a shorter word collapse to the same address and are merged.
    """
    b = bounds.entry_bound
    ints = range(-b, b + 1)
    seen = set()
    for p in range(1, bounds.max_size + 1):
        for word in product(ints, repeat=p):
            seen.add(InfiniteAddress((), word))
    out = sorted(seen, key=_linear_key)
    return out


def enumerate_components(bounds: EnumerationBounds) -> list[HyperbolicComponent]:
    """One component per enumerated intermediate address (the end marker included)."""
    return [HyperbolicComponent(a) for a in enumerate_intermediate(bounds)]


class _LinearKey:
    __slots__ = ("addr",)

    def __init__(self, addr):
        self.addr = addr

    def __lt__(self, other):
        return compare(self.addr, other.addr) < 0

    def __eq__(self, other):
        return self.addr == other.addr


def _linear_key(a):
    return _LinearKey(a)
