"""Angled internal addresses, arc queries, and component recovery.

These are the conversions that walk the bifurcation structure: reading the
angled internal address off an intermediate address, rebuilding the address
from an angled internal address by descending through wakes, recovering a
component from one of its sector boundaries, and locating the lowest-period
component between a sector and a point of its wake.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .addresses import (
    Address,
    InfiniteAddress,
    IntermediateAddress,
    compare,
    is_terminator,
    shift_iter,
)
from .components import (
    HyperbolicComponent,
    SectorRef,
    bifurcate_height,
    rotation_rank,
    sector_boundary,
)
from .errors import CombinatoricsError, InvalidAngledAddressError, NotRealizedError
from .internal import INF, AngledInternalAddress, InternalAddress
from .itineraries import (
    Boundary,
    Itinerary,
    STAR,
    SeedSide,
    finite_itinerary,
    first_difference,
    itinerary,
    kneading,
    periodic_itinerary,
    solve_itinerary,
)


@dataclass(frozen=True)
class ArcQueryResult:
    period: int
    component: IntermediateAddress
    sector_kneading_entry: Optional[int]


@dataclass(frozen=True)
class OrbitCount:
    finite: bool
    count: Optional[int] = None


def component_from_boundary(r: InfiniteAddress) -> HyperbolicComponent:
    """The component having the periodic address r as a sector boundary."""
    if not isinstance(r, InfiniteAddress) or r.pre:
        raise CombinatoricsError("sector boundaries are purely periodic addresses")
    n = len(r.per)
    k = kneading(r)
    target = tuple(k.entry(i) for i in range(1, n)) + (STAR,)
    if any(not isinstance(x, int) for x in target[:-1]):
        raise CombinatoricsError(f"{r} has a boundary symbol before position {n}")
    addr = solve_itinerary(finite_itinerary(target), r)
    w = HyperbolicComponent(addr)
    last = k.entry(n)
    if not isinstance(last, Boundary) or sector_boundary(w, last.upper) != r:
        raise CombinatoricsError(f"could not verify {r} as a sector boundary")
    return w


def _chain_denominator(prefix_word: tuple[int, ...], n_next: int, nj: int) -> int:
    """Period of the child component containing the analyzed address (B.3 step 2).

    The chain climbs first-difference positions of the periodized kneading
    prefix against its own truncations until a multiple of nj is hit.
    """
    ubar = periodic_itinerary(prefix_word)
    ell = n_next
    while ell % nj:
        trunc = periodic_itinerary(tuple(ubar.entry(i) for i in range(1, ell + 1)))
        nxt = first_difference(ubar, trunc)
        if nxt is None or nxt <= ell:
            raise CombinatoricsError("denominator chain failed to advance")
        ell = nxt
    return ell // nj


def angled_internal(s: Union[IntermediateAddress, HyperbolicComponent]) -> AngledInternalAddress:
    """Angled internal address of a component: sector numbers refined to heights."""
    if isinstance(s, HyperbolicComponent):
        s = s.addr
    w = HyperbolicComponent(s)
    plain = w.internal_address
    n = s.length
    k = w.kneading
    entries = []
    for idx, (nj, mj) in enumerate(plain.entries[:-1]):
        n_next = plain.entries[idx + 1][0]
        word = tuple(k.entry(i) for i in range(1, nj + 1))
        q = _chain_denominator(word, n_next, nj)
        if q == 2:
            p = 1
        else:
            orbit = [shift_iter(s, i * nj) for i in range(q)]
            p = rotation_rank(orbit)
        alpha = Fraction(p, q)
        if idx == 0 or mj < 0:
            h = mj + alpha
        else:
            h = mj - 1 + alpha
        entries.append((nj, h))
    entries.append((n, INF))
    return AngledInternalAddress(entries)


def _max_periodic_at_most(x: InfiniteAddress, max_period: int, strict: bool) -> InfiniteAddress:
    """Largest periodic address of period <= max_period that is <= x (or < x)."""
    best = None
    for q in range(1, max_period + 1):
        word = tuple(x.entry(k) for k in range(1, q + 1))
        cand = InfiniteAddress((), word)
        c = compare(cand, x)
        if c > 0 or (strict and c == 0):
            cand = InfiniteAddress((), word[:-1] + (word[-1] - 1,))
        if best is None or best < cand:
            best = cand
    return best


_DESCENT_CAP = 4096


def addr_from_angled(a: AngledInternalAddress) -> IntermediateAddress:
    """The unique intermediate address with the given angled internal address.

    Walks the chain: bifurcate at each height, then descend from the child's
    upper characteristic address through maximal periodic addresses, skipping
    the wake of every component met, until the target period appears.
    """
    w = HyperbolicComponent("inf")
    for (nj, h), (n_next, _) in zip(a.entries, a.entries[1:]):
        if w.period != nj:
            raise InvalidAngledAddressError(f"period {nj} does not match the chain")
        try:
            child = bifurcate_height(w, h)
        except (ValueError, CombinatoricsError) as e:
            raise InvalidAngledAddressError(f"no bifurcation at height {h}: {e}")
        if child.length == n_next:
            w = HyperbolicComponent(child)
            continue
        if child.length < n_next:
            raise InvalidAngledAddressError(
                f"child period {child.length} undercuts requested period {n_next}"
            )
        v = HyperbolicComponent(child)
        v_lower, v_upper = v.characteristic
        t = _max_periodic_at_most(v_upper, n_next, strict=False)
        for _ in range(_DESCENT_CAP):
            if not (v_lower < t):
                raise InvalidAngledAddressError("descent left the wake of the child component")
            if len(t.per) == n_next:
                break
            c = component_from_boundary(t)
            if c.period >= 2 and t == c.characteristic[1]:
                # skip the whole wake of the component we just met
                t = _max_periodic_at_most(c.characteristic[0], n_next, strict=True)
            else:
                # co-root or lower boundary: should not happen for valid input
                t = _max_periodic_at_most(t, n_next, strict=True)
        else:
            raise InvalidAngledAddressError("descent iteration cap exceeded")
        w = component_from_boundary(t)
    if w.period != a.entries[-1][0]:
        raise InvalidAngledAddressError("chain ended at the wrong period")
    if angled_internal(w.addr) != a:
        raise InvalidAngledAddressError(f"no component has angled internal address {a}")
    return w.addr


def addr_from_internal_entries(entries) -> IntermediateAddress:
    return addr_from_angled(AngledInternalAddress(entries))


def lowest_period_on_arc(sector: SectorRef, s: Address) -> Optional[ArcQueryResult]:
    """Unique lowest-period component between a sector and an address of its wake.

    Returns None when the kneading sequences never differ (no component below).
    """
    from .components import wake_contains  # local: avoid cycle at import time

    w = sector.component
    wake = sector.wake
    if is_terminator(s) or not (wake.lower < s < wake.upper):
        raise CombinatoricsError(f"{s} is not inside the sector wake")
    k_sector = sector.kneading_sequence
    k_s = kneading(s)
    j = first_difference(k_sector, k_s)
    if j is None:
        return None
    word = tuple(k_sector.entry(i) for i in range(1, j + 1))
    lower = solve_itinerary(periodic_itinerary(word), s, SeedSide.FROM_BELOW)
    v = component_from_boundary(lower)
    if v.period != j:
        raise CombinatoricsError("arc query found a component of unexpected period")
    entry = k_s.entry(j)
    return ArcQueryResult(j, v.addr, entry if isinstance(entry, int) else None)


def essential_orbit_count(w: HyperbolicComponent) -> OrbitCount:
    """Finite(k-1) iff consecutive internal-address periods divide; Infinite otherwise."""
    periods = w.internal_address.periods
    if all(b % a == 0 for a, b in zip(periods, periods[1:])):
        return OrbitCount(True, len(periods) - 1)
    return OrbitCount(False)
