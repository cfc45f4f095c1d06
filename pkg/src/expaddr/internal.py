"""Internal addresses: (period, sector number) chains equivalent to kneading data.

The internal address of an address records the periods of the components met
along the combinatorial arc from the period-one component, each decorated with
the sector number of the sector the address sits in.  A final infinity mark
means the address is the component's own intermediate address; a half-integer
sector number marks a sector boundary.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import InfiniteInternalAddressError
from .itineraries import Boundary, Itinerary, STAR, finite_itinerary, periodic_itinerary


class _InfMark:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"

    def __str__(self):
        return "inf"


INF = _InfMark()

SectorNumber = Union[int, Fraction, _InfMark]


def _check_periods(entries) -> None:
    periods = [n for n, _ in entries]
    if not periods or periods[0] != 1:
        raise ValueError("internal address must start with period 1")
    if any(a >= b for a, b in zip(periods, periods[1:])):
        raise ValueError("periods must be strictly increasing")


@dataclass(frozen=True)
class InternalAddress:
    """Chain (1,m_1) -> (n_2,m_2) -> ...; INF or a half-integer only at the end."""

    entries: tuple[tuple[int, SectorNumber], ...]

    def __init__(self, entries):
        entries = tuple((int(n), m) for n, m in entries)
        _check_periods(entries)
        for i, (_, m) in enumerate(entries):
            last = i == len(entries) - 1
            if m is INF or (isinstance(m, Fraction) and m.denominator == 2):
                if not last:
                    raise ValueError("infinity/half-integer marks only the final entry")
            elif not isinstance(m, int) or (m == 0 and i > 0):
                raise ValueError(f"sector numbers are nonzero integers, got {m!r}")
        object.__setattr__(self, "entries", entries)

    @property
    def periods(self) -> tuple[int, ...]:
        return tuple(n for n, _ in self.entries)

    def __str__(self) -> str:
        return "->".join(f"({n},{_format_number(m)})" for n, m in self.entries)

    def __repr__(self) -> str:
        return f"<internal {self}>"


@dataclass(frozen=True)
class AngledInternalAddress:
    """Chain (n_1,h_1) -> ... -> (n_k,inf) with non-integer rational heights."""

    entries: tuple[tuple[int, Union[Fraction, _InfMark]], ...]

    def __init__(self, entries):
        norm = []
        for n, h in entries:
            if h is not INF:
                h = Fraction(h)
                if h.denominator == 1:
                    raise ValueError(f"heights are rationals outside the integers, got {h}")
            norm.append((int(n), h))
        _check_periods(norm)
        if norm[-1][1] is not INF or any(h is INF for _, h in norm[:-1]):
            raise ValueError("exactly the final entry carries the infinity mark")
        object.__setattr__(self, "entries", tuple(norm))

    @property
    def periods(self) -> tuple[int, ...]:
        return tuple(n for n, _ in self.entries)

    def __str__(self) -> str:
        return "->".join(f"({n},{_format_number(h)})" for n, h in self.entries)

    def __repr__(self) -> str:
        return f"<angled {self}>"


def _format_number(m) -> str:
    """Mixed notation: 4/3 -> "1+1/3", -4/3 -> "-1-1/3", 3/2 -> "1+1/2"."""
    if m is INF:
        return "inf"
    if isinstance(m, int):
        return str(m)
    f = Fraction(m)
    sign = "-" if f < 0 else ""
    a = abs(f)
    whole, frac = a.numerator // a.denominator, a - a.numerator // a.denominator
    if whole and frac:
        return f"{sign}{whole}{sign or '+'}{frac.numerator}/{frac.denominator}"
    if whole:
        return f"{sign}{whole}"
    return f"{sign}{frac.numerator}/{frac.denominator}"


_NUM = re.compile(
    r"(?P<sign>-?)(?:(?P<whole>\d+)(?P<op>[+-]))?(?P<num>\d+)(?:/(?P<den>\d+))?\Z"
)


def _parse_number(text: str):
    if text == "inf":
        return INF
    m = _NUM.match(text.strip())
    if not m:
        raise ValueError(f"bad sector number or height literal: {text!r}")
    whole = int(m.group("whole") or 0)
    num = int(m.group("num"))
    den = int(m.group("den") or 1)
    value = Fraction(whole) + Fraction(num, den)
    if m.group("sign"):
        value = -value
    if m.group("whole") and m.group("op") != ("-" if m.group("sign") else "+"):
        raise ValueError(f"mixed literal must be m+p/q or -m-p/q: {text!r}")
    return int(value) if value.denominator == 1 else value


_ENTRY = re.compile(r"\(\s*(\d+)\s*,\s*([^)]+)\)")


def _parse_chain(text: str):
    out = []
    rest = text.strip()
    while rest:
        m = _ENTRY.match(rest)
        if not m:
            raise ValueError(f"bad internal-address literal near {rest!r}")
        out.append((int(m.group(1)), _parse_number(m.group(2))))
        rest = rest[m.end():].lstrip()
        if rest.startswith("->"):
            rest = rest[2:].lstrip()
        elif rest:
            raise ValueError(f"expected '->' near {rest!r}")
    return out

def parse_internal(text: str) -> InternalAddress:
    return InternalAddress(_parse_chain(text))

def parse_angled(text: str) -> AngledInternalAddress:
    return AngledInternalAddress(_parse_chain(text))


_MAX_SCAN = 512  # safety net for non-realizable periodic inputs


def internal_from_kneading(k: Itinerary) -> InternalAddress:
    """Internal address of an address with kneading sequence k.

    Iterates: extend the first n_i entries periodically and find the first
    difference; the difference symbol yields the next sector number (integer
    offset, INF at a Star, half-integer at a boundary symbol).
    """
    if not k.is_finite and k.pre:
        raise InfiniteInternalAddressError(
            "kneading sequence is preperiodic; the internal address does not terminate"
        )
    first = k.entry(1)
    if first is STAR:
        return InternalAddress([(1, INF)])
    if isinstance(first, Boundary):
        return InternalAddress([(1, Fraction(2 * first.upper - 1, 2))])
    entries: list[tuple[int, SectorNumber]] = [(1, first)]
    n = 1
    while True:
        word = tuple(k.entry(i) for i in range(1, n + 1))
        if not k.is_finite and periodic_itinerary(word) == k:
            return InternalAddress(entries)
        if n > _MAX_SCAN:
            raise InfiniteInternalAddressError(
                "no terminating difference; not a realizable kneading sequence?"
            )
        pos = n + 1
        while k.entry(pos) == word[(pos - 1) % n]:
            pos += 1  # finite sequences stop at * at the latest
        sym = k.entry(pos)
        ref = word[(pos - 1) % n]
        if sym is STAR:
            entries.append((pos, INF))
            return InternalAddress(entries)
        if isinstance(sym, Boundary):
            entries.append((pos, sym.upper - 1 - ref + Fraction(1, 2)))
            return InternalAddress(entries)
        entries.append((pos, sym - ref))
        n = pos


def kneading_from_internal(a: InternalAddress) -> Itinerary:
    """Inverse of internal_from_kneading on its image."""
    n1, m1 = a.entries[0]
    if m1 is INF:
        return finite_itinerary((STAR,))
    if isinstance(m1, Fraction):
        return periodic_itinerary((Boundary(int(m1 + Fraction(1, 2))),))
    word: list = [m1]
    n = 1
    for n_next, m in a.entries[1:]:
        ext = [word[i % n] for i in range(n_next)]
        if m is INF:
            return finite_itinerary(tuple(ext[:-1]) + (STAR,))
        if isinstance(m, Fraction):
            b = ext[-1] + m + Fraction(1, 2)
            return periodic_itinerary(tuple(ext[:-1]) + (Boundary(int(b)),))
        ext[-1] += m
        word, n = ext, n_next
    return periodic_itinerary(tuple(word))
