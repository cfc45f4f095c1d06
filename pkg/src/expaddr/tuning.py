"""Combinatorial tuning: block substitution into the wake of a base component.

Tuning replaces every entry k of an address by the n-entry word of the sector
boundary with kneading index u(W)+k (shifted by one when the partially tuned
tail sits below the base address), sending the whole address circle into the
closure of the base component's wake and multiplying periods by n.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction

from .addresses import (
    Address,
    InfiniteAddress,
    IntermediateAddress,
    compare,
    is_terminator,
)
from .components import HyperbolicComponent, sector_boundary
from .errors import CombinatoricsError, PeriodOneError


class Variant(Enum):
    """Which of the two tuning maps: fixes the image of per(0) (below/above the base)."""

    UPPER = "upper"
    LOWER = "lower"


class TuningBlockTable:
    """Base component plus the memoized words of its sector boundaries."""

    def __init__(self, base):
        if not isinstance(base, HyperbolicComponent):
            base = HyperbolicComponent(base)
        if base.period < 2:
            raise PeriodOneError("tuning needs a base component of period at least two")
        self.base = base
        self._blocks: dict[int, tuple[int, ...]] = {}

    def block(self, i: int) -> tuple[int, ...]:
        if i not in self._blocks:
            word = sector_boundary(self.base, i).per
            n = self.base.period
            # sector boundaries have exact period n; store the full n-window
            self._blocks[i] = tuple(word[k % len(word)] for k in range(n))
        return self._blocks[i]


def tuning_block(table: TuningBlockTable, i: int) -> tuple[int, ...]:
    """First n entries of the sector boundary with kneading index i."""
    return table.block(i)


def _tune_intermediate(table: TuningBlockTable, r: IntermediateAddress) -> IntermediateAddress:
    s = table.base.addr
    u_n = table.base.forbidden_entry
    if r.tail is None:
        return s
    x: Address = s  # image of the end marker
    # entries from the tail leftward; the half-integer entry meets tau(tail) = s
    for k in range(r.length - 1, 0, -1):
        e = r.entry(k)
        if isinstance(e, Fraction):
            i = u_n + e + Fraction(1, 2)
        else:
            c = compare(x, s)
            i = u_n + e if c > 0 else u_n + e + 1
        block = table.block(int(i))
        if isinstance(x, IntermediateAddress):
            x = IntermediateAddress(block + x.body, x.tail)
        else:
            x = InfiniteAddress(block + x.pre, x.per)
    return x


def _cycle_words(table, word, signs):
    """Tuned period words for one sign assignment over the periodic part."""
    p = len(word)
    u_n = table.base.forbidden_entry
    blocks = []
    for k in range(p):
        below = signs[(k + 1) % p] < 0
        blocks.append(table.block(u_n + word[k] + (1 if below else 0)))
    return [
        InfiniteAddress((), sum((blocks[(k + i) % p] for i in range(p)), ()))
        for k in range(p)
    ]


def _tune_infinite(table: TuningBlockTable, r: InfiniteAddress, variant: Variant) -> InfiniteAddress:
    s = table.base.addr
    u_n = table.base.forbidden_entry
    word = r.per
    p = len(word)
    init = -1 if variant is Variant.UPPER else 1
    images = None
    for start in (init, -init):
        signs = [start] * p
        for _ in range(2 * p + 2):
            images = _cycle_words(table, word, signs)
            new = [compare(img, s) for img in images]
            if new == signs:
                break
            signs = new
        else:
            images = None
            continue
        break
    if images is None:
        raise CombinatoricsError("tuning sign assignment did not stabilize")
    x: Address = images[0]
    for e in reversed(r.pre):
        c = compare(x, s)
        block = table.block(u_n + e + (0 if c > 0 else 1))
        x = InfiniteAddress(block + x.pre, x.per)
    return x


def tune(table: TuningBlockTable, r: Address, variant: Variant = Variant.UPPER) -> Address:
    """Tuned image of r; the end marker maps to the base address itself."""
    if isinstance(table, HyperbolicComponent) or isinstance(table, str):
        table = TuningBlockTable(table)
    if isinstance(r, IntermediateAddress):
        return _tune_intermediate(table, r)
    return _tune_infinite(table, r, variant)
