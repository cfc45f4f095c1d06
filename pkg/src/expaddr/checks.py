"""Named exhaustive property suites over the desk-scale enumeration.

Every suite runs a paper invariant over all enumerated cases and reports the
counterexamples found (an empty list is a pass).  These are the independent
ground-truth runs behind the derived values in the unit tests.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .addresses import (
    InfiniteAddress,
    TERMINATOR,
    circular_order,
    compare,
    first_entry,
    is_terminator,
    prepend,
    shift,
    shift_iter,
)
from .arcs import angled_internal, addr_from_angled, component_from_boundary
from .components import (
    HyperbolicComponent,
    bifurcate,
    classify,
    sector_boundary,
    wake_contains,
)
from .enumeration import EnumerationBounds, enumerate_components, enumerate_intermediate, enumerate_periodic
from .errors import CombinatoricsError
from .internal import internal_from_kneading, kneading_from_internal
from .itineraries import (
    Side,
    itinerary,
    kneading,
    kneading_pm,
)


@dataclass
class CheckReport:
    suite: str
    bounds: EnumerationBounds
    cases: int
    counterexamples: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples


def _nontrivial_components(bounds):
    return [w for w in enumerate_components(bounds) if w.period >= 2]


def check_char_pair_laws(bounds: EnumerationBounds) -> CheckReport:
    """lower < addr < upper, shift reversal, and the kneading identities."""
    report = CheckReport("char-pair-laws", bounds, 0)
    for w in _nontrivial_components(bounds):
        report.cases += 1
        n = w.period
        lo, hi = w.characteristic
        fk = w.forbidden_kneading
        if not (lo < w.addr < hi):
            report.counterexamples.append(f"{w}: pair not around the address")
        if not (shift_iter(hi, n - 1) < shift_iter(lo, n - 1)):
            report.counterexamples.append(f"{w}: shifted pair order not reversed")
        if kneading_pm(lo, Side.LOWER) != fk or kneading_pm(hi, Side.UPPER) != fk:
            report.counterexamples.append(f"{w}: one-sided kneadings differ from forbidden")
        if itinerary(lo, w.addr) != fk or itinerary(hi, w.addr) != fk:
            report.counterexamples.append(f"{w}: boundary itineraries differ from forbidden")
    return report


def check_char_pair_membership(bounds: EnumerationBounds, samples: int = 100) -> CheckReport:
    """itin_s'(lower) = itin_s'(upper) iff s' lies strictly between them."""
    report = CheckReport("char-pair-membership", bounds, 0)
    comps = _nontrivial_components(bounds)
    probes = [a for a in enumerate_intermediate(bounds) if not is_terminator(a)]
    probes += enumerate_periodic(EnumerationBounds(min(3, bounds.max_size), bounds.entry_bound))
    rng = random.Random(20260809)
    for _ in range(samples):
        w = rng.choice(comps)
        probe = rng.choice(probes)
        lo, hi = w.characteristic
        if probe == lo or probe == hi:
            continue
        report.cases += 1
        inside = lo < probe < hi
        agree = itinerary(lo, probe) == itinerary(hi, probe)
        if inside != agree:
            report.counterexamples.append(f"{w} probe {probe}: inside={inside} agree={agree}")
    return report


def check_itinerary_injectivity(bounds: EnumerationBounds) -> CheckReport:
    """Distinct intermediate addresses have distinct itineraries w.r.t. any base."""
    report = CheckReport("itinerary-injectivity", bounds, 0)
    inters = enumerate_intermediate(bounds)
    bases = [a for a in inters if not is_terminator(a)]
    for s in bases:
        seen = {}
        for r in inters:
            report.cases += 1
            it = itinerary(r, s)
            if it in seen:
                report.counterexamples.append(f"base {s}: {seen[it]} and {r} share {it}")
            seen[it] = r
    return report


def check_change_of_partition(bounds: EnumerationBounds) -> CheckReport:
    """Entries of itineraries w.r.t. s1 < s2 agree iff the orbit avoids [s1, s2]."""
    report = CheckReport("change-of-partition", bounds, 0)
    pool = [a for a in enumerate_intermediate(bounds) if not is_terminator(a)]
    pool += enumerate_periodic(bounds)
    bases = sorted(pool, key=lambda a: _SortKey(a))
    for i, s1 in enumerate(bases):
        for s2 in bases[i + 1:]:
            for t in pool:
                steps = t.length - 1 if hasattr(t, "length") else len(t.pre) + len(t.per)
                it1, it2 = itinerary(t, s1), itinerary(t, s2)
                x = t
                for j in range(1, steps + 1):
                    x = shift(x)
                    report.cases += 1
                    if is_terminator(x):
                        inside = False
                    else:
                        inside = (compare(s1, x) <= 0) and (compare(x, s2) <= 0)
                    agree = it1.entry(j) == it2.entry(j)
                    if agree != (not inside):
                        report.counterexamples.append(
                            f"s1={s1} s2={s2} t={t} j={j}: agree={agree} inside={inside}"
                        )
                    if is_terminator(x):
                        break
    return report


class _SortKey:
    __slots__ = ("a",)

    def __init__(self, a):
        self.a = a

    def __lt__(self, other):
        return compare(self.a, other.a) < 0


def check_shift_order(bounds: EnumerationBounds) -> CheckReport:
    """The shift preserves circular order on [a, (a_1+1)tail(a))."""
    report = CheckReport("shift-order", bounds, 0)
    pool = [a for a in enumerate_intermediate(bounds) if not is_terminator(a) and a.length > 2]
    pool += [a for a in enumerate_periodic(bounds) if len(a.per) > 1]
    rng = random.Random(20260809)
    for a in pool:
        lo = a
        hi = prepend(first_entry(a) + 1, shift(a))
        inside = [x for x in pool if _in_interval(lo, x, hi)]
        if len(inside) < 3:
            continue
        for _ in range(20):
            t = rng.sample(inside, 3)
            report.cases += 1
            before = circular_order(*t)
            after = circular_order(*(shift(x) for x in t))
            if before != after:
                report.counterexamples.append(f"interval [{lo},{hi}): triple {t}")
    return report


def _in_interval(lo, x, hi):
    if x == lo:
        return True
    if x == hi:
        return False
    return circular_order(lo, x, hi)


def check_internal_roundtrip(bounds: EnumerationBounds) -> CheckReport:
    """kneading <-> internal address are mutually inverse; collisions match kneadings."""
    report = CheckReport("internal-roundtrip", bounds, 0)
    by_internal = {}
    for w in enumerate_components(bounds):
        report.cases += 1
        k = w.kneading
        ia = w.internal_address
        if kneading_from_internal(ia) != k:
            report.counterexamples.append(f"{w}: kneading_from_internal(internal) != kneading")
        if internal_from_kneading(k) != ia:
            report.counterexamples.append(f"{w}: not idempotent")
        by_internal.setdefault(ia, []).append(w)
    for ia, ws in by_internal.items():
        for w in ws[1:]:
            if w.kneading != ws[0].kneading:
                report.counterexamples.append(f"{ws[0]} vs {w}: same internal, different kneading")
    return report


def check_angled_uniqueness(bounds: EnumerationBounds) -> CheckReport:
    """Angled internal addresses are injective and invert onto the enumeration."""
    report = CheckReport("angled-uniqueness", bounds, 0)
    seen = {}
    for w in enumerate_components(bounds):
        report.cases += 1
        a = angled_internal(w.addr) if w.period > 1 else None
        if w.period == 1:
            continue
        if a in seen:
            report.counterexamples.append(f"{seen[a]} and {w} share {a}")
        seen[a] = w
        back = addr_from_angled(a)
        if back != w.addr:
            report.counterexamples.append(f"{w}: angled round trip gave {back}")
    return report


def check_nested_wakes(bounds: EnumerationBounds) -> CheckReport:
    """W inside V's wake: kneadings differ and V's entries all occur in W's."""
    report = CheckReport("nested-wakes", bounds, 0)
    comps = _nontrivial_components(bounds)
    for v in comps:
        for w in comps:
            if v is w or not wake_contains(v, w.addr):
                continue
            report.cases += 1
            if v.kneading == w.kneading:
                report.counterexamples.append(f"{v} contains {w} with equal kneading")
            inner = set(w.kneading.pre[:-1])
            outer = set(v.kneading.pre[:-1])
            if not outer.issubset(inner):
                report.counterexamples.append(f"{v} entries {outer} missing from {w} {inner}")
    return report


def check_bifurcate_roundtrip(bounds: EnumerationBounds) -> CheckReport:
    """classify(bifurcate(W, label, p/q)) recovers the parent and the rotation."""
    report = CheckReport("bifurcate-roundtrip", bounds, 0)
    angles = [Fraction(1, 2), Fraction(1, 3), Fraction(2, 3), Fraction(1, 4), Fraction(3, 4)]
    comps = [w for w in enumerate_components(EnumerationBounds(min(3, bounds.max_size), bounds.entry_bound))]
    for w in comps:
        labels = (
            [Fraction(2 * k + 1, 2) for k in range(-2, 2)]
            if w.period == 1
            else range(-2, 3)
        )
        for label in labels:
            for alpha in angles:
                report.cases += 1
                try:
                    child = bifurcate(w, label, alpha)
                except (CombinatoricsError, AssertionError) as e:
                    report.counterexamples.append(f"{w} label {label} angle {alpha}: {e}")
                    continue
                if child.length != alpha.denominator * w.period:
                    report.counterexamples.append(f"{w} label {label} angle {alpha}: wrong length")
                res = classify(child)
                if res.kind != "satellite" or res.parent != w.addr or res.rotation != alpha:
                    report.counterexamples.append(f"{w} label {label} angle {alpha}: bad classify")
    return report


def check_sector_boundaries(bounds: EnumerationBounds) -> CheckReport:
    """Boundaries have exact period n, avoid the wake under shifting, and invert.

    Characteristic addresses avoid the open wake only: for satellites of the
    period-one component every portrait ray lands at the same orbit point and
    the shift carries one characteristic address onto the other.
    """
    report = CheckReport("sector-boundaries", bounds, 0)
    for w in _nontrivial_components(bounds):
        n = w.period
        lo, hi = w.characteristic
        for idx in range(w.forbidden_entry - 2, w.forbidden_entry + 3):
            report.cases += 1
            r = sector_boundary(w, idx)
            if len(r.per) != n or r.pre:
                report.counterexamples.append(f"{w} Bdy({idx}): period {len(r.per)} != {n}")
                continue
            characteristic = r == lo or r == hi
            x = r
            for j in range(1, n):
                x = shift(x)
                if lo < x < hi:
                    report.counterexamples.append(f"{w} Bdy({idx}): shift^{j} enters the wake")
                elif not characteristic and (x == lo or x == hi):
                    report.counterexamples.append(f"{w} Bdy({idx}): shift^{j} hits the wake boundary")
            back = component_from_boundary(r)
            if back.addr != w.addr:
                report.counterexamples.append(f"{w} Bdy({idx}): recovered {back}")
    return report


SUITES = {
    "char-pair-laws": check_char_pair_laws,
    "char-pair-membership": check_char_pair_membership,
    "itinerary-injectivity": check_itinerary_injectivity,
    "change-of-partition": check_change_of_partition,
    "shift-order": check_shift_order,
    "internal-roundtrip": check_internal_roundtrip,
    "angled-uniqueness": check_angled_uniqueness,
    "nested-wakes": check_nested_wakes,
    "bifurcate-roundtrip": check_bifurcate_roundtrip,
    "sector-boundaries": check_sector_boundaries,
}


def exhaustive_check(suite: str, bounds: EnumerationBounds = None) -> CheckReport:
    """Run one named suite; the report lists counterexamples (must be empty)."""
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}; available: {', '.join(sorted(SUITES))}")
    if bounds is None:
        bounds = EnumerationBounds(4, 1)
    return SUITES[suite](bounds)
