"""Itineraries, kneading sequences, and the inverse problem.

The itinerary of an address r relative to a base address s records, entry by
entry, which strip of the partition {j·s : j} the shift orbit of r visits.
Symbols are integers, boundary marks ``j|j-1`` (orbit lands exactly on the
partition curve j·s), and ``*`` (orbit reaches the end marker).  With the end
marker as base the partition points are (j±1/2)·inf and the itinerary of an
infinite address is the address itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import lcm
from typing import Optional, Union

from .addresses import (
    Address,
    AddressError,
    InfiniteAddress,
    IntermediateAddress,
    TERMINATOR,
    compare,
    first_entry,
    is_half,
    is_terminator,
    prepend,
    shift,
    _canonical,
)
from .errors import NotRealizedError


@dataclass(frozen=True)
class Boundary:
    """The symbol ``upper|upper-1``: the orbit sits on the partition curve."""

    upper: int

    def __str__(self) -> str:
        return f"{self.upper}|{self.upper - 1}"


class _Star:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "*"

    def __str__(self):
        return "*"


STAR = _Star()

Symbol = Union[int, Boundary, _Star]


class Side(Enum):
    UPPER = "upper"
    LOWER = "lower"


class SeedSide(Enum):
    FROM_BELOW = "below"
    FROM_ABOVE = "above"


def resolve(symbol: Symbol, side: Side) -> Symbol:
    """Resolve a boundary symbol upward or downward; other symbols pass through."""
    if isinstance(symbol, Boundary):
        return symbol.upper if side is Side.UPPER else symbol.upper - 1
    return symbol


@dataclass(frozen=True)
class Itinerary:
    """Finite (Star-terminated, ``per == ()``) or eventually periodic symbol sequence."""

    pre: tuple[Symbol, ...]
    per: tuple[Symbol, ...]

    def __init__(self, pre=(), per=()):
        pre, per = tuple(pre), tuple(per)
        if per:
            if any(s is STAR for s in pre + per):
                raise ValueError("* cannot occur in an eventually periodic itinerary")
            pre, per = _canonical(pre, per)
        else:
            if not pre or pre[-1] is not STAR or any(s is STAR for s in pre[:-1]):
                raise ValueError("finite itinerary must end in * and contain no other *")
        object.__setattr__(self, "pre", pre)
        object.__setattr__(self, "per", per)

    @property
    def is_finite(self) -> bool:
        return not self.per

    @property
    def length(self) -> Optional[int]:
        return len(self.pre) if self.is_finite else None

    def entry(self, k: int) -> Symbol:
        if k <= 0:
            raise IndexError(k)
        if k <= len(self.pre):
            return self.pre[k - 1]
        if not self.per:
            raise IndexError(k)
        return self.per[(k - len(self.pre) - 1) % len(self.per)]

    def __str__(self) -> str:
        head = " ".join(str(s) for s in self.pre)
        if self.is_finite:
            return head
        tail = "(" + " ".join(str(s) for s in self.per) + ")"
        return f"{head} {tail}" if head else tail

    def __repr__(self) -> str:
        return f"<itin {self}>"


def finite_itinerary(symbols) -> Itinerary:
    return Itinerary(tuple(symbols), ())

def periodic_itinerary(symbols) -> Itinerary:
    return Itinerary((), tuple(symbols))


def _symbol(x: Address, s: Address) -> Symbol:
    """Partition symbol of the point x relative to base s."""
    if is_terminator(x):
        return STAR
    f = first_entry(x)
    if is_terminator(s):
        # partition points are (j±1/2)·inf
        if is_half(f):
            return Boundary(int(f + Fraction(1, 2)))
        return f
    if is_half(f):
        # x = (k+1/2)·inf sits strictly inside strip k
        return int(f - Fraction(1, 2))
    t = shift(x)
    c = compare(t, s)
    if c > 0:
        return f
    if c < 0:
        return f - 1
    return Boundary(f)


def itinerary(r: Address, s: Address) -> Itinerary:
    """Itinerary of r relative to s (s may be the end marker; then itin(r) = r)."""
    if isinstance(r, IntermediateAddress):
        syms = []
        x = r
        while not is_terminator(x):
            syms.append(_symbol(x, s))
            x = shift(x)
        syms.append(STAR)
        return finite_itinerary(syms)
    syms = []
    x = r
    for _ in range(len(r.pre) + len(r.per)):
        syms.append(_symbol(x, s))
        x = shift(x)
    return Itinerary(tuple(syms[: len(r.pre)]), tuple(syms[len(r.pre):]))


def kneading(s: Address) -> Itinerary:
    """Self-itinerary K(s) = itin_s(s)."""
    if is_terminator(s):
        raise AddressError("the end marker has no kneading sequence")
    return itinerary(s, s)


def kneading_pm(s: Address, side: Side) -> Itinerary:
    """K+ / K-: kneading with boundary symbols resolved up or down."""
    k = kneading(s)
    return Itinerary(tuple(resolve(x, side) for x in k.pre), tuple(resolve(x, side) for x in k.per))


def first_difference(u: Itinerary, v: Itinerary) -> Optional[int]:
    """1-based position of the first differing symbol, or None if equal."""
    if u == v:
        return None
    if u.is_finite and v.is_finite:
        bound = max(len(u.pre), len(v.pre))
    elif u.is_finite:
        bound = len(u.pre)
    elif v.is_finite:
        bound = len(v.pre)
    else:
        bound = len(u.pre) + len(v.pre) + lcm(len(u.per), len(v.per)) + 1
    for k in range(1, bound + 1):
        try:
            a = u.entry(k)
        except IndexError:
            return k
        try:
            b = v.entry(k)
        except IndexError:
            return k
        if a != b:
            return k
    raise AssertionError("distinct itineraries must differ within the bound")


def shift_itinerary(u: Itinerary) -> Itinerary:
    if u.is_finite:
        if len(u.pre) == 1:
            raise ValueError("cannot shift past *")
        return finite_itinerary(u.pre[1:])
    if u.pre:
        return Itinerary(u.pre[1:], u.per)
    return Itinerary((), u.per[1:] + u.per[:1])


def _check_realizable(u: Itinerary, s: Address) -> None:
    """Reject targets whose shift orbit hits K+(s) or K-(s)."""
    kp = kneading_pm(s, Side.UPPER)
    km = kneading_pm(s, Side.LOWER)
    x = u
    steps = (len(u.pre) - 1) if u.is_finite else (len(u.pre) + len(u.per))
    for _ in range(steps):
        x = shift_itinerary(x)
        if x == kp or x == km:
            raise NotRealizedError(f"shifted target equals a one-sided kneading sequence of {s}")


def _forced_prepend(entry: int, x: Address, s: Address) -> Address:
    """Preimage of x whose first itinerary entry (w.r.t. s) is the given integer."""
    if is_terminator(x):
        return prepend(Fraction(2 * entry + 1, 2), x)
    c = compare(x, s)
    if c == 0:
        raise NotRealizedError("pullback hit the base address (boundary obstruction)")
    return prepend(entry if c > 0 else entry + 1, x)


def _solve_finite(symbols: tuple, s: Address) -> IntermediateAddress:
    x = TERMINATOR
    for u in reversed(symbols[:-1]):
        x = _forced_prepend(u, x, s)
    return x


def _address_prefix(x: Address, count: int) -> Optional[tuple]:
    if isinstance(x, IntermediateAddress) and count > x.length - 1:
        return None
    return tuple(x.entry(k) for k in range(1, count + 1))


def _solve_periodic(word: tuple, s: Address, seed_side: SeedSide):
    """Monotone pullback fixpoint for a periodic target word, seeded at s.

    The block prepended per step is the target word; its innermost entry is
    pinned to the word's last entry (FROM_ABOVE) or that plus one (FROM_BELOW),
    the rest are forced by the strip rule.  Solutions can have exact period
    l*len(word) for l > 1 (satellite situation), so block lengths l*m are tried
    in turn; a candidate is the stabilized block prefix, verified by its
    itinerary.  Returns None when no block length yields a verified fixpoint.
    """
    m = len(word)
    s_size = (s.length - 1) if isinstance(s, IntermediateAddress) else len(s.pre) + len(s.per)
    max_mult = (2 * m + s_size + 4) // m + 2
    target = periodic_itinerary(word)
    for mult in range(1, max_mult + 1):
        block = word * mult
        pin = block[-1] if seed_side is SeedSide.FROM_ABOVE else block[-1] + 1
        cap = 2 * len(block) * (s_size + len(block)) + 16
        x: Address = s
        prev = None
        for _ in range(cap):
            try:
                x = prepend(pin, x)
                for u in reversed(block[:-1]):
                    x = _forced_prepend(u, x, s)
            except (NotRealizedError, AddressError):
                break
            w = _address_prefix(x, len(block))
            if w is None or any(not isinstance(e, int) for e in w):
                continue
            if w == prev:
                cand = InfiniteAddress((), w)
                if itinerary(cand, s) == target:
                    return cand
                break  # stable but wrong: larger block needed
            prev = w
    return None


def solve_itinerary(u: Itinerary, s: Address, seed_side: SeedSide = SeedSide.FROM_BELOW) -> Address:
    """Address r with itin_s(r) = u.

    Finite targets give intermediate addresses (backward prepending with the
    forced strip choice); periodic targets are solved by monotone fixpoint
    iteration.  When two periodic addresses share the itinerary (characteristic
    pair) FROM_BELOW returns the smaller and FROM_ABOVE the larger; otherwise
    both sides return the unique solution.  Raises NotRealizedError if the
    target hits a kneading obstruction or no fixpoint verifies.
    """
    if is_terminator(s):
        raise AddressError("solve needs a base address with a linear position")
    if u.is_finite:
        if any(not isinstance(x, int) for x in u.pre[:-1]):
            raise ValueError("finite targets must be integers terminated by *")
    elif any(not isinstance(x, int) for x in u.pre + u.per):
        raise ValueError("periodic targets must consist of integer symbols")
    _check_realizable(u, s)

    if u.is_finite:
        try:
            r = _solve_finite(u.pre, s)
        except NotRealizedError:
            raise NotRealizedError(f"itinerary {u} is not realized over base {s}")
        if itinerary(r, s) != u:
            raise NotRealizedError(f"itinerary {u} is not realized over base {s}")
        return r

    other = SeedSide.FROM_ABOVE if seed_side is SeedSide.FROM_BELOW else SeedSide.FROM_BELOW
    core = _solve_periodic(u.per, s, seed_side)
    if core is None:
        core = _solve_periodic(u.per, s, other)
    if core is None:
        raise NotRealizedError(f"itinerary {u} is not realized over base {s}")
    r: Address = core
    try:
        for e in reversed(u.pre):
            r = _forced_prepend(e, r, s)
    except NotRealizedError:
        raise NotRealizedError(f"itinerary {u} is not realized over base {s}")
    if itinerary(r, s) != u:
        raise NotRealizedError(f"itinerary {u} is not realized over base {s}")
    return r
