"""Hyperbolic components as combinatorial objects.

A component is keyed by its intermediate address; everything else (kneading
sequence, forbidden kneading, sector boundaries, characteristic addresses,
child components) is derived exactly.  Derived fields are cached; all caches
are recomputed idempotently, so instances are safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Optional, Union

from .addresses import (
    Address,
    AddressError,
    InfiniteAddress,
    IntermediateAddress,
    TERMINATOR,
    circular_order,
    compare,
    is_half,
    is_terminator,
    parse,
    prepend,
    shift_iter,
)
from .errors import CombinatoricsError, PeriodOneError
from .internal import INF, InternalAddress, internal_from_kneading
from .itineraries import (
    Itinerary,
    STAR,
    _forced_prepend,
    itinerary,
    kneading,
    periodic_itinerary,
)


class HyperbolicComponent:
    """The unique hyperbolic component at a given intermediate address."""

    def __init__(self, addr: Union[IntermediateAddress, str]):
        if isinstance(addr, str):
            addr = parse(addr)
        if not isinstance(addr, IntermediateAddress):
            raise AddressError("components are keyed by intermediate addresses")
        self.addr = addr

    @property
    def period(self) -> int:
        return self.addr.length

    @cached_property
    def kneading(self) -> Itinerary:
        if self.period == 1:
            return itinerary(TERMINATOR, TERMINATOR)  # the single symbol *
        return kneading(self.addr)

    @cached_property
    def kneading_prefix(self) -> tuple[int, ...]:
        return self.kneading.pre[:-1]

    @cached_property
    def internal_address(self) -> InternalAddress:
        return internal_from_kneading(self.kneading)

    @cached_property
    def forbidden_kneading(self) -> Itinerary:
        return forbidden_kneading(self)

    @property
    def forbidden_entry(self) -> int:
        return self.forbidden_kneading.entry(self.period)

    @cached_property
    def characteristic(self) -> tuple[InfiniteAddress, InfiniteAddress]:
        return characteristic_addresses(self)

    def __eq__(self, other):
        return isinstance(other, HyperbolicComponent) and self.addr == other.addr

    def __hash__(self):
        return hash(self.addr)

    def __repr__(self):
        return f"Hyp({self.addr})"


@dataclass(frozen=True)
class SectorWake:
    lower: InfiniteAddress
    upper: InfiniteAddress


@dataclass(frozen=True)
class SectorRef:
    """One sector of a component under all four labelings."""

    component: HyperbolicComponent
    height_index: int
    label: Union[int, Fraction]
    kneading_entry: int
    sector_number: int
    wake: SectorWake

    @property
    def kneading_sequence(self) -> Itinerary:
        w = self.component
        if w.period == 1:
            return periodic_itinerary((self.kneading_entry,))
        return periodic_itinerary(w.kneading_prefix + (self.kneading_entry,))


@dataclass(frozen=True)
class Classification:
    kind: str  # "primitive" | "satellite"
    parent: Optional[IntermediateAddress] = None
    rotation: Optional[Fraction] = None


def forbidden_kneading(w: HyperbolicComponent) -> Itinerary:
    """K-(lower char) = K+(upper char): the one sector kneading no sector realizes.

    Computed by extending the first n_{k-1} entries of K(W) periodically and
    re-periodizing the first n entries (n_{k-1} = penultimate internal-address
    period); the characteristic-pair route is kept as a test oracle.
    """
    n = w.period
    if n == 1:
        raise PeriodOneError("the period-one component has no forbidden kneading sequence")
    periods = w.internal_address.periods
    m = periods[-2]
    prefix = w.kneading_prefix
    word = tuple(prefix[i % m] for i in range(n))
    return periodic_itinerary(word)


def sector_boundary(w: HyperbolicComponent, s_star) -> InfiniteAddress:
    """Sector boundary with kneading sequence per(u_1 .. u_{n-1} s_star|s_star-1).

    Prepend s_star to addr(W), pull back n-1 steps forcing the kneading prefix,
    and periodize the first n entries.  Period one: the boundaries are per(m).
    """
    n = w.period
    if n == 1:
        if is_half(Fraction(s_star)):
            raise AddressError("period-one boundaries are indexed by integers")
        return InfiniteAddress((), (int(s_star),))
    s_star = int(s_star)
    x: Address = prepend(s_star, w.addr)
    for u in reversed(w.kneading_prefix):
        x = _forced_prepend(u, x, w.addr)
    word = tuple(x.entry(k) for k in range(1, n + 1))
    return InfiniteAddress((), word)


def characteristic_addresses(
    w: HyperbolicComponent,
) -> tuple[InfiniteAddress, InfiniteAddress]:
    """The pair (s-, s+) bounding the wake; boundary indices u(W)+1 and u(W)."""
    if w.period == 1:
        raise PeriodOneError("the period-one wake is the whole circle")
    u = w.forbidden_entry
    lower = sector_boundary(w, u + 1)
    upper = sector_boundary(w, u)
    if not (lower < w.addr < upper):
        raise AssertionError(f"characteristic pair out of order for {w}")
    return lower, upper


def wake_contains(w: HyperbolicComponent, r: Address) -> bool:
    """Strict wake membership; the period-one wake is the whole circle."""
    if w.period == 1:
        return True
    if is_terminator(r):
        return False
    lower, upper = w.characteristic
    if r == lower or r == upper:
        return False
    return lower < r < upper


def _sector_wake(w: HyperbolicComponent, entry: int) -> SectorWake:
    return SectorWake(sector_boundary(w, entry), sector_boundary(w, entry + 1))


def _sector_label(w: HyperbolicComponent, entry: int, wake: SectorWake):
    """Label read off the boundary itineraries (no global closed form)."""
    if w.period == 1:
        return entry + Fraction(1, 2)
    it = itinerary(wake.upper, w.addr)
    label = it.entry(w.period)
    if not isinstance(label, int):
        raise AssertionError(f"boundary itinerary of {wake.upper} has a non-integer label entry")
    low = itinerary(wake.lower, w.addr).entry(w.period)
    if low != label - 1:
        raise AssertionError("sector boundaries disagree about the sector label")
    return label


def sector_info(
    w: HyperbolicComponent,
    *,
    height_index: Optional[int] = None,
    label=None,
    kneading_entry: Optional[int] = None,
    sector_number: Optional[int] = None,
) -> SectorRef:
    """Resolve a sector from any one of its four labelings."""
    keys = [height_index, label, kneading_entry, sector_number]
    if sum(k is not None for k in keys) != 1:
        raise ValueError("specify exactly one sector key")
    n = w.period

    if n == 1:
        if label is not None:
            lab = Fraction(label)
            if lab.denominator != 2:
                raise AddressError("period-one sector labels are half-integers")
            entry = int(lab - Fraction(1, 2))
        elif height_index is not None:
            entry = height_index
        elif kneading_entry is not None:
            entry = kneading_entry
        else:
            entry = sector_number
        wake = _sector_wake(w, entry)
        return SectorRef(w, entry, entry + Fraction(1, 2), entry, entry, wake)

    u_w = w.forbidden_entry
    if kneading_entry is not None:
        if kneading_entry == u_w:
            raise CombinatoricsSectorError(w, "the forbidden kneading entry names no sector")
        m = kneading_entry - u_w
    elif sector_number is not None:
        if sector_number == 0:
            raise CombinatoricsSectorError(w, "sector numbers are nonzero")
        m = sector_number
    elif height_index is not None:
        m = height_index + 1 if height_index >= 0 else height_index
    else:
        lab = Fraction(label)
        if lab.denominator != 1:
            raise AddressError("sector labels of period >= 2 components are integers")
        # the label-to-sector map is evaluated, not assumed: try both candidates
        for m in (int(lab) - u_w, int(lab) - u_w - 1):
            if m == 0:
                continue
            entry = u_w + m
            wake = _sector_wake(w, entry)
            if _sector_label(w, entry, wake) == lab:
                return SectorRef(w, m - 1 if m > 0 else m, lab, entry, m, wake)
        raise CombinatoricsSectorError(w, f"no sector has label {label}")

    entry = u_w + m
    wake = _sector_wake(w, entry)
    lab = _sector_label(w, entry, wake)
    return SectorRef(w, m - 1 if m > 0 else m, lab, entry, m, wake)


class CombinatoricsSectorError(CombinatoricsError):
    def __init__(self, w, msg):
        super().__init__(f"{w}: {msg}")


def _bifurcation_digits(label, alpha: Fraction) -> list:
    """The m_j of the block itinerary: label-or-below along the rotation orbit."""
    q = alpha.denominator
    digits = []
    for j in range(1, q - 1):
        frac = (j * alpha) % 1
        digits.append(label if frac == 0 or frac >= 1 - alpha else label - 1)
    return digits


def bifurcate(w: HyperbolicComponent, label, pq) -> IntermediateAddress:
    """Address of the child component in the sector with the given label at angle p/q."""
    alpha = Fraction(pq)
    if not 0 < alpha < 1 or alpha.denominator < 2:
        raise ValueError(f"bifurcation angle must be a non-integer rational in (0,1), got {pq}")
    n = w.period
    q = alpha.denominator

    if n == 1:
        lab = Fraction(label)
        if lab.denominator != 2:
            raise AddressError("period-one sector labels are half-integers")
        digits = _bifurcation_digits(lab + Fraction(1, 2), alpha)
        x: Address = prepend(lab, TERMINATOR)
        for d in reversed(digits):
            x = prepend(int(d), x)
        child = x
    else:
        lab = Fraction(label)
        if lab.denominator != 1:
            raise AddressError("sector labels of period >= 2 components are integers")
        lab = int(lab)
        prefix = w.kneading_prefix
        digits = _bifurcation_digits(lab, alpha)
        entries: list[int] = []
        for d in digits:
            entries.extend(prefix)
            entries.append(d)
        entries.extend(prefix)
        x = prepend(lab, w.addr)
        for e in reversed(entries):
            x = _forced_prepend(e, x, w.addr)
        child = x

    if child.length != q * n:
        raise AssertionError("bifurcation produced a child of the wrong length")
    result = classify(child)
    if result.kind != "satellite" or result.parent != w.addr or result.rotation != alpha:
        raise AssertionError(f"bifurcation verification failed for {w}, {label}, {pq}")
    return child


def height_to_sector_key(w: HyperbolicComponent, h: Fraction):
    """Sector label and internal angle of the internal ray height h."""
    h = Fraction(h)
    if h.denominator == 1:
        raise ValueError("integer heights are sector boundaries, not sectors")
    floor = h.numerator // h.denominator
    alpha = h - floor
    if w.period == 1:
        return floor + Fraction(1, 2), alpha
    m = floor + 1 if h > 0 else floor
    return sector_info(w, sector_number=m).label, alpha


def bifurcate_height(w: HyperbolicComponent, h) -> IntermediateAddress:
    """Child component at internal-ray height h (rational, not an integer)."""
    label, alpha = height_to_sector_key(w, Fraction(h))
    return bifurcate(w, label, alpha)


def rotation_rank(points: list[Address]) -> int:
    """Circular rank of points[1] seen from points[0] among all the points.

    For the orbit of a rotation number p/q this rank is p.
    """
    base, target = points[0], points[1]
    rank = 1
    for pt in points[2:]:
        if circular_order(base, pt, target):
            rank += 1
    return rank


def classify(s: Union[IntermediateAddress, HyperbolicComponent]) -> Classification:
    """Primitive/satellite test: does the kneading word admit a shorter-period completion?"""
    if isinstance(s, HyperbolicComponent):
        s = s.addr
    n = s.length
    if n < 2:
        raise PeriodOneError("the period-one component is not classified")
    prefix = kneading(s).pre[:-1]
    for j in range(1, n):
        if n % j:
            continue
        if all(prefix[i] == prefix[i + j] for i in range(n - 1 - j)):
            parent = shift_iter(s, n - j)
            q = n // j
            orbit = [shift_iter(s, k * j) for k in range(q)]
            p = rotation_rank(orbit)
            return Classification("satellite", parent, Fraction(p, q))
    return Classification("primitive")
