"""Exact external addresses and their circle order.

An infinite address is an eventually periodic sequence of integers, an
intermediate address is a finite integer word followed by one half-integer
entry and the end marker ``inf``.  The bare end marker is a single extra
point that closes the line of addresses into a circle.  All values are
immutable and canonical on construction, so equality is structural.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Iterator, Optional, Union


class AddressError(ValueError):
    """Domain error on address operations (wrong kind of argument)."""


class AddressSyntaxError(ValueError):
    """Literal does not match the address grammar."""

    def __init__(self, message: str, position: Optional[int] = None):
        if position is not None:
            message = f"{message} (token {position})"
        super().__init__(message)
        self.position = position


Entry = Union[int, Fraction]


def as_entry(value) -> Entry:
    """Normalize an entry: integers stay ``int``, half-integers become ``Fraction``."""
    if isinstance(value, bool):
        raise AddressError("boolean is not an address entry")
    if isinstance(value, int):
        return value
    f = Fraction(value)
    if f.denominator == 1:
        return int(f)
    if f.denominator == 2:
        return f
    raise AddressError(f"address entries are integers or half-integers, got {value!r}")


def is_half(entry: Entry) -> bool:
    return isinstance(entry, Fraction) and entry.denominator == 2


def _minimal_word(word: tuple) -> tuple:
    n = len(word)
    for d in range(1, n + 1):
        if n % d == 0 and word == word[:d] * (n // d):
            return word[:d]
    return word


def _canonical(pre: tuple, per: tuple) -> tuple[tuple, tuple]:
    """Minimal period word, then absorb a preperiod tail that repeats it."""
    per = _minimal_word(per)
    pre = list(pre)
    per = list(per)
    while pre and pre[-1] == per[-1]:
        pre.pop()
        per = per[-1:] + per[:-1]
    return tuple(pre), tuple(per)


@dataclass(frozen=True)
class InfiniteAddress:
    """Eventually periodic integer sequence; canonical form is computed eagerly."""

    pre: tuple[int, ...]
    per: tuple[int, ...]

    def __init__(self, pre=(), per=()):
        pre = tuple(as_entry(x) for x in pre)
        per = tuple(as_entry(x) for x in per)
        if not per:
            raise AddressError("infinite address needs a nonempty period")
        if any(is_half(x) for x in pre + per):
            raise AddressError("infinite addresses have integer entries only")
        pre, per = _canonical(pre, per)
        object.__setattr__(self, "pre", pre)
        object.__setattr__(self, "per", per)

    def entry(self, k: int) -> int:
        """1-based entry of the sequence."""
        if k <= 0:
            raise IndexError(k)
        if k <= len(self.pre):
            return self.pre[k - 1]
        return self.per[(k - len(self.pre) - 1) % len(self.per)]

    @property
    def is_periodic(self) -> bool:
        return not self.pre

    @property
    def exact_period(self) -> Optional[int]:
        return len(self.per) if not self.pre else None

    def __str__(self) -> str:
        inner = " ".join(format_entry(x) for x in self.per)
        if self.pre:
            return " ".join(format_entry(x) for x in self.pre) + f" ({inner})"
        return f"({inner})"

    def __repr__(self) -> str:
        return f"<{self}>"

    def __lt__(self, other):
        return compare(self, other) < 0

    def __le__(self, other):
        return compare(self, other) <= 0

    def __gt__(self, other):
        return compare(self, other) > 0

    def __ge__(self, other):
        return compare(self, other) >= 0


@dataclass(frozen=True)
class IntermediateAddress:
    """Finite address ``s_1 .. s_{n-2} (k+1/2) inf``; ``tail is None`` marks the bare ``inf``."""

    body: tuple[int, ...]
    tail: Optional[Fraction]

    def __init__(self, body=(), tail=None):
        body = tuple(as_entry(x) for x in body)
        if any(is_half(x) for x in body):
            raise AddressError("half-integer allowed only in the final numeric entry")
        if tail is not None:
            tail = as_entry(tail)
            if not is_half(tail):
                raise AddressError(f"intermediate tail must be a half-integer, got {tail!r}")
        elif body:
            raise AddressError("the end marker alone has no body entries")
        object.__setattr__(self, "body", body)
        object.__setattr__(self, "tail", tail)

    @property
    def is_terminator(self) -> bool:
        return self.tail is None

    @property
    def length(self) -> int:
        return 1 if self.tail is None else len(self.body) + 2

    def entry(self, k: int) -> Entry:
        """1-based numeric entry; valid for k <= length-1."""
        if k <= 0 or k > self.length - 1:
            raise IndexError(k)
        if k <= len(self.body):
            return self.body[k - 1]
        return self.tail

    def __str__(self) -> str:
        if self.tail is None:
            return "inf"
        parts = [format_entry(x) for x in self.body]
        parts.append(format_entry(self.tail))
        parts.append("inf")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"<{self}>"

    def __lt__(self, other):
        return compare(self, other) < 0

    def __le__(self, other):
        return compare(self, other) <= 0

    def __gt__(self, other):
        return compare(self, other) > 0

    def __ge__(self, other):
        return compare(self, other) >= 0


Address = Union[InfiniteAddress, IntermediateAddress]

TERMINATOR = IntermediateAddress((), None)


def is_terminator(a: Address) -> bool:
    return isinstance(a, IntermediateAddress) and a.tail is None


def format_entry(x: Entry) -> str:
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return str(x)


def periodic(*word) -> InfiniteAddress:
    """Shorthand for the purely periodic address per(word)."""
    if len(word) == 1 and isinstance(word[0], (list, tuple, str)):
        word = word[0]
    if isinstance(word, str):
        word = [int(c) for c in word]
    return InfiniteAddress((), tuple(word))


def intermediate(*entries) -> IntermediateAddress:
    """Shorthand for the intermediate address with the given numeric entries."""
    if len(entries) == 1 and isinstance(entries[0], (list, tuple)):
        entries = tuple(entries[0])
    if not entries:
        return TERMINATOR
    return IntermediateAddress(entries[:-1], as_entry(entries[-1]))


def _numeric_length(a: Address) -> Optional[int]:
    """Number of numeric entries, or None if infinite."""
    if isinstance(a, InfiniteAddress):
        return None
    return a.length - 1


def compare(a: Address, b: Address) -> int:
    """Three-way comparison in the lexicographic order on the line of addresses.

    The bare end marker has no linear position; use :func:`circular_order`.
    """
    if is_terminator(a) or is_terminator(b):
        raise AddressError("the end marker has no position in the linear order")
    if a == b:
        return 0
    la, lb = _numeric_length(a), _numeric_length(b)
    if la is None and lb is None:
        bound = len(a.pre) + len(b.pre) + lcm(len(a.per), len(b.per)) + 1
    else:
        # mixed comparisons always resolve at or before the shorter
        # address's half-integer entry (integer never equals half-integer)
        bound = min(x for x in (la, lb) if x is not None)
    for k in range(1, bound + 1):
        ea, eb = a.entry(k), b.entry(k)
        if ea != eb:
            return -1 if ea < eb else 1
    raise AssertionError("distinct addresses must differ within the comparison bound")


def circular_order(a: Address, b: Address, c: Address) -> bool:
    """True iff (a, b, c) is positively oriented on the circle of addresses."""
    if a == b or b == c or a == c:
        raise AddressError("circular order needs pairwise distinct points")
    # rotate the terminator, if present, into the last slot
    if is_terminator(a):
        a, b, c = b, c, a
    elif is_terminator(b):
        a, b, c = c, a, b
    if is_terminator(c):
        return compare(a, b) < 0
    ascents = (compare(a, b) < 0) + (compare(b, c) < 0) + (compare(c, a) < 0)
    return ascents >= 2


def shift(a: Address) -> Address:
    """Drop the first entry (the shift map); undefined on the end marker."""
    if isinstance(a, InfiniteAddress):
        if a.pre:
            return InfiniteAddress(a.pre[1:], a.per)
        return InfiniteAddress((), a.per[1:] + a.per[:1])
    if a.tail is None:
        raise AddressError("the end marker cannot be shifted")
    if a.body:
        return IntermediateAddress(a.body[1:], a.tail)
    return TERMINATOR


def shift_iter(a: Address, n: int) -> Address:
    for _ in range(n):
        a = shift(a)
    return a


def prepend(j, a: Address) -> Address:
    """Left-inverse of shift: integer onto any non-marker address, half-integer onto the marker."""
    j = as_entry(j)
    if is_terminator(a):
        if not is_half(j):
            raise AddressError("only a half-integer can precede the end marker")
        return IntermediateAddress((), j)
    if is_half(j):
        raise AddressError("half-integer allowed only directly before the end marker")
    if isinstance(a, InfiniteAddress):
        return InfiniteAddress((j,) + a.pre, a.per)
    return IntermediateAddress((j,) + a.body, a.tail)


def first_entry(a: Address) -> Entry:
    if isinstance(a, InfiniteAddress):
        return a.entry(1)
    if a.tail is None:
        raise AddressError("the end marker has no entries")
    return a.entry(1)


_TOKEN = re.compile(r"\(|\)|[^\s()]+")
_INT = re.compile(r"-?\d+\Z")
_HALF = re.compile(r"-?\d+/2\Z")


def parse(text: str) -> Address:
    """Parse an address literal, e.g. ``"(0 1 1 0 0 2)"``, ``"0 3 0 1/2 inf"``, ``"inf"``."""
    tokens = _TOKEN.findall(text)
    if not tokens:
        raise AddressSyntaxError("empty address literal")

    def bad(i, why):
        raise AddressSyntaxError(f"{why}: {tokens[i] if i < len(tokens) else 'end of input'}", i)

    if "(" in tokens:
        i = tokens.index("(")
        pre = []
        for k in range(i):
            if not _INT.match(tokens[k]):
                bad(k, "expected integer before '('")
            pre.append(int(tokens[k]))
        if tokens[-1] != ")":
            bad(len(tokens) - 1, "expected ')' at end")
        per = []
        for k in range(i + 1, len(tokens) - 1):
            if not _INT.match(tokens[k]):
                bad(k, "expected integer inside period")
            per.append(int(tokens[k]))
        if not per:
            bad(i + 1, "empty period")
        return InfiniteAddress(tuple(pre), tuple(per))

    if tokens[-1] != "inf":
        bad(len(tokens) - 1, "expected 'inf' or a parenthesized period at end")
    if len(tokens) == 1:
        return TERMINATOR
    body = []
    for k in range(len(tokens) - 2):
        if not _INT.match(tokens[k]):
            if _HALF.match(tokens[k]):
                bad(k, "half-integer in non-final position")
            bad(k, "expected integer")
        body.append(int(tokens[k]))
    tail_tok = tokens[-2]
    if not _HALF.match(tail_tok):
        bad(len(tokens) - 2, "expected half-integer before 'inf'")
    tail = Fraction(int(tail_tok.split("/")[0]), 2)
    return IntermediateAddress(tuple(body), tail)


def format_address(a: Address) -> str:
    return str(a)


def entries(a: Address, count: int) -> Iterator[Entry]:
    """First ``count`` numeric entries (fewer if the address is shorter)."""
    n = _numeric_length(a)
    stop = count if n is None else min(count, n)
    for k in range(1, stop + 1):
        yield a.entry(k)
