"""Command-line front end: one subcommand per conversion plus tree export.

Exit codes: 0 success, 1 domain error (unrealizable itinerary, period-one
precondition, ...), 2 bad syntax (address literals, unknown commands).
Addresses are passed as single quoted arguments in the literal grammar;
``--json`` switches every command to a JSON record with exact rationals
emitted as strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .addresses import (
    AddressError,
    AddressSyntaxError,
    IntermediateAddress,
    compare,
    is_terminator,
    parse,
)
from .arcs import (
    angled_internal,
    addr_from_angled,
    component_from_boundary,
    essential_orbit_count,
    lowest_period_on_arc,
)
from .checks import SUITES, exhaustive_check
from .components import (
    HyperbolicComponent,
    bifurcate,
    classify,
    sector_boundary,
    sector_info,
    wake_contains,
)
from .enumeration import EnumerationBounds, enumerate_components
from .errors import CombinatoricsError, PeriodOneError
from .internal import INF, _format_number, parse_angled, parse_internal
from .itineraries import (
    Boundary,
    Itinerary,
    STAR,
    SeedSide,
    Side,
    finite_itinerary,
    itinerary,
    kneading,
    kneading_pm,
    periodic_itinerary,
    solve_itinerary,
)
from .tuning import TuningBlockTable, Variant, tune


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise AddressSyntaxError(f"not a rational: {text!r}")


def _parse_itinerary_literal(text: str) -> Itinerary:
    toks = text.replace("(", " ( ").replace(")", " ) ").split()
    syms, per_start = [], None
    for t in toks:
        if t == "(":
            per_start = len(syms)
        elif t == ")":
            continue
        elif t == "*":
            syms.append(STAR)
        elif "|" in t:
            syms.append(Boundary(int(t.split("|")[0])))
        else:
            try:
                syms.append(int(t))
            except ValueError:
                raise AddressSyntaxError(f"bad itinerary symbol {t!r}")
    if per_start is None:
        return finite_itinerary(syms)
    return Itinerary(tuple(syms[:per_start]), tuple(syms[per_start:]))


def _component(text: str) -> HyperbolicComponent:
    a = parse(text)
    if not isinstance(a, IntermediateAddress):
        raise AddressSyntaxError(f"expected an intermediate address, got {text!r}")
    return HyperbolicComponent(a)


def _emit(args, text: str, payload) -> None:
    if args.json:
        print(json.dumps(payload, indent=None, sort_keys=True))
    elif not args.quiet:
        print(text)


def describe_record(w: HyperbolicComponent) -> dict:
    if w.period == 1:
        char = None
        forbidden = None
        cls = None
    else:
        lo, hi = w.characteristic
        char = {"lower": str(lo), "upper": str(hi)}
        forbidden = str(w.forbidden_kneading)
        res = classify(w.addr)
        cls = {"type": res.kind}
        if res.kind == "satellite":
            cls["parent"] = str(res.parent)
            cls["rotation"] = str(res.rotation)
    return {
        "address": str(w.addr),
        "period": w.period,
        "kneading": str(w.kneading),
        "forbidden_kneading": forbidden,
        "characteristic": char,
        "internal_address": str(w.internal_address),
        "angled_internal_address": str(angled_internal(w.addr)) if w.period > 1 else "(1,inf)",
        "classification": cls,
    }


def _cmd_kneading(args):
    s = parse(args.address)
    if args.pm:
        k = kneading_pm(s, Side(args.pm))
    else:
        k = kneading(s)
    _emit(args, str(k), {"address": args.address, "kneading": str(k)})


def _cmd_itinerary(args):
    it = itinerary(parse(args.address), parse(args.base))
    _emit(args, str(it), {"itinerary": str(it)})


def _cmd_internal(args):
    from .internal import internal_from_kneading

    a = parse(args.address)
    if isinstance(a, IntermediateAddress):
        ia = HyperbolicComponent(a).internal_address
    else:
        ia = internal_from_kneading(kneading(a))
    _emit(args, str(ia), {"internal_address": str(ia)})


def _cmd_angled(args):
    a = angled_internal(_component(args.address).addr)
    _emit(args, str(a), {"angled_internal_address": str(a)})


def _cmd_char(args):
    lo, hi = _component(args.address).characteristic
    _emit(args, f"lower={lo} upper={hi}", {"lower": str(lo), "upper": str(hi)})


def _cmd_sector_boundary(args):
    r = sector_boundary(_component(args.address), int(args.index))
    _emit(args, str(r), {"boundary": str(r)})


def _cmd_sector(args):
    w = _component(args.address)
    kwargs = {}
    if args.key == "height":
        kwargs["height_index"] = int(args.value)
    elif args.key == "label":
        kwargs["label"] = _fraction(args.value)
    elif args.key == "entry":
        kwargs["kneading_entry"] = int(args.value)
    else:
        kwargs["sector_number"] = int(args.value)
    ref = sector_info(w, **kwargs)
    text = (
        f"height={ref.height_index} label={_format_number(ref.label)} "
        f"entry={ref.kneading_entry} number={ref.sector_number} "
        f"wake=({ref.wake.lower}, {ref.wake.upper})"
    )
    _emit(args, text, {
        "height_index": ref.height_index,
        "label": _format_number(ref.label),
        "kneading_entry": ref.kneading_entry,
        "sector_number": ref.sector_number,
        "wake": {"lower": str(ref.wake.lower), "upper": str(ref.wake.upper)},
    })


def _cmd_bifurcate(args):
    w = _component(args.address)
    child = bifurcate(w, _fraction(args.label), _fraction(args.angle))
    _emit(args, str(child), {"child": str(child)})


def _cmd_classify(args):
    res = classify(parse(args.address))
    if res.kind == "primitive":
        _emit(args, "primitive", {"type": "primitive"})
    else:
        _emit(
            args,
            f"satellite parent={res.parent} rotation={res.rotation}",
            {"type": "satellite", "parent": str(res.parent), "rotation": str(res.rotation)},
        )


def _cmd_parent(args):
    res = classify(parse(args.address))
    if res.kind != "satellite":
        raise CombinatoricsError("a primitive component has no parent")
    _emit(args, str(res.parent), {"parent": str(res.parent), "rotation": str(res.rotation)})


def _cmd_compare(args):
    c = compare(parse(args.a), parse(args.b))
    text = {-1: "less", 0: "equal", 1: "greater"}[c]
    _emit(args, text, {"order": text})


def _cmd_wake_contains(args):
    inside = wake_contains(_component(args.address), parse(args.point))
    _emit(args, "true" if inside else "false", {"contains": inside})


def _cmd_from_internal(args):
    from .internal import kneading_from_internal

    k = kneading_from_internal(parse_internal(args.chain))
    _emit(args, str(k), {"kneading": str(k)})


def _cmd_from_angled(args):
    addr = addr_from_angled(parse_angled(args.chain))
    _emit(args, str(addr), {"address": str(addr)})


def _cmd_tune(args):
    table = TuningBlockTable(_component(args.base))
    out = tune(table, parse(args.address), Variant(args.variant))
    _emit(args, str(out), {"tuned": str(out)})


def _cmd_arc(args):
    w = _component(args.address)
    ref = sector_info(w, kneading_entry=int(args.entry))
    res = lowest_period_on_arc(ref, parse(args.point))
    if res is None:
        _emit(args, "none", {"result": None})
        return
    entry = res.sector_kneading_entry
    _emit(
        args,
        f"period={res.period} component={res.component} entry={entry if entry is not None else '-'}",
        {"period": res.period, "component": str(res.component), "sector_kneading_entry": entry},
    )


def _cmd_orbits(args):
    res = essential_orbit_count(_component(args.address))
    if res.finite:
        _emit(args, f"finite {res.count}", {"finite": True, "count": res.count})
    else:
        _emit(args, "infinite", {"finite": False, "count": None})


def _cmd_solve(args):
    side = SeedSide.FROM_ABOVE if args.side == "above" else SeedSide.FROM_BELOW
    r = solve_itinerary(_parse_itinerary_literal(args.itinerary), parse(args.base), side)
    _emit(args, str(r), {"address": str(r)})


def _cmd_describe(args):
    rec = describe_record(_component(args.address))
    if args.json:
        print(json.dumps(rec, sort_keys=True))
    elif not args.quiet:
        for key in (
            "address", "period", "kneading", "forbidden_kneading",
            "characteristic", "internal_address", "angled_internal_address",
            "classification",
        ):
            print(f"{key}: {rec[key]}")


def tree_document(max_period: int, entry_bound: int, fmt: str) -> str:
    """Bifurcation tree over the enumeration: satellite edges parent -> child."""
    comps = enumerate_components(EnumerationBounds(max_period, entry_bound))
    comps.sort(key=lambda w: (w.period, str(w.addr)))
    nodes = []
    edges = []
    for w in comps:
        ia = str(w.internal_address)
        nodes.append((str(w.addr), w.period, ia))
        if w.period >= 2:
            res = classify(w.addr)
            if res.kind == "satellite":
                edges.append((str(res.parent), str(w.addr), str(res.rotation)))
    if fmt == "json":
        return json.dumps(
            {
                "nodes": [
                    {"address": a, "period": p, "internal_address": ia} for a, p, ia in nodes
                ],
                "edges": [
                    {"parent": p, "child": c, "rotation": r} for p, c, r in edges
                ],
            },
            sort_keys=True,
        )
    lines = ["digraph bifurcations {"]
    for a, p, ia in nodes:
        lines.append(f'  "{a}" [label="{a}\\nperiod {p}\\n{ia}"];')
    for p, c, r in edges:
        lines.append(f'  "{p}" -> "{c}" [label="{r}"];')
    lines.append("}")
    return "\n".join(lines)


def _cmd_tree(args):
    doc = tree_document(args.max, args.bound, args.format)
    if not args.quiet:
        print(doc)


def _cmd_check(args):
    rep = exhaustive_check(args.suite, EnumerationBounds(args.max, args.bound))
    if args.json:
        print(json.dumps({
            "suite": rep.suite,
            "cases": rep.cases,
            "counterexamples": rep.counterexamples,
        }))
    elif not args.quiet:
        print(f"{rep.suite}: {rep.cases} cases, {len(rep.counterexamples)} counterexamples")
        for c in rep.counterexamples:
            print(f"  {c}")
    return 0 if rep.passed else 1


COMMANDS = {
    "kneading": _cmd_kneading,
    "itinerary": _cmd_itinerary,
    "internal": _cmd_internal,
    "angled": _cmd_angled,
    "char": _cmd_char,
    "sector-boundary": _cmd_sector_boundary,
    "sector": _cmd_sector,
    "bifurcate": _cmd_bifurcate,
    "classify": _cmd_classify,
    "parent": _cmd_parent,
    "compare": _cmd_compare,
    "wake-contains": _cmd_wake_contains,
    "from-internal": _cmd_from_internal,
    "from-angled": _cmd_from_angled,
    "tune": _cmd_tune,
    "arc": _cmd_arc,
    "orbits": _cmd_orbits,
    "solve": _cmd_solve,
    "describe": _cmd_describe,
    "tree": _cmd_tree,
    "check": _cmd_check,
}


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="expaddr",
        description="exact combinatorics of exponential-map parameter space",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def cmd(name, help_, *specs):
        p = sub.add_parser(name, help=help_)
        for spec in specs:
            flags, kw = spec
            p.add_argument(*flags, **kw)
        p.add_argument("--json", action="store_true", help="emit a JSON record")
        p.add_argument("--quiet", action="store_true", help="suppress normal output")
        return p

    A = lambda *flags, **kw: (flags, kw)
    cmd("kneading", "kneading sequence of an address",
        A("address"), A("--pm", choices=["upper", "lower"], default=None))
    cmd("itinerary", "itinerary of an address relative to a base", A("address"), A("base"))
    cmd("internal", "internal address of an address", A("address"))
    cmd("angled", "angled internal address of a component", A("address"))
    cmd("char", "characteristic addresses of a component", A("address"))
    cmd("sector-boundary", "sector boundary by kneading index", A("address"), A("index"))
    cmd("sector", "sector lookup by one of the four labelings",
        A("address"), A("key", choices=["height", "label", "entry", "number"]), A("value"))
    cmd("bifurcate", "child component at a sector label and angle p/q",
        A("address"), A("label"), A("angle"))
    cmd("classify", "primitive or satellite (with parent and rotation)", A("address"))
    cmd("parent", "parent component of a satellite", A("address"))
    cmd("compare", "linear order of two addresses", A("a"), A("b"))
    cmd("wake-contains", "is a point inside a component's wake", A("address"), A("point"))
    cmd("from-internal", "kneading sequence from an internal address", A("chain"))
    cmd("from-angled", "component address from an angled internal address", A("chain"))
    cmd("tune", "image of an address under the tuning map of a base component",
        A("base"), A("address"), A("--variant", choices=["upper", "lower"], default="upper"))
    cmd("arc", "lowest-period component between a sector and a wake point",
        A("address"), A("entry"), A("point"))
    cmd("orbits", "essential orbit count of a component", A("address"))
    cmd("solve", "address realizing an itinerary over a base",
        A("itinerary"), A("base"), A("--side", choices=["below", "above"], default="below"))
    cmd("describe", "full JSON-able record of a component", A("address"))
    cmd("tree", "bifurcation tree over the enumeration",
        A("--max", type=int, default=3), A("--bound", type=int, default=1),
        A("--format", choices=["dot", "json"], default="dot"))
    cmd("check", "run a named exhaustive property suite",
        A("suite", choices=sorted(SUITES)), A("--max", type=int, default=4),
        A("--bound", type=int, default=1))
    return top


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        rc = COMMANDS[args.command](args)
        return rc or 0
    except AddressSyntaxError as e:
        print(f"syntax error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
