"""Exact combinatorics of exponential-map parameter space.

External and intermediate external addresses, itineraries and kneading
sequences, hyperbolic components with their characteristic ray pairs and
sectors, combinatorial bifurcation, internal and angled internal addresses,
and the combinatorial tuning map -- all in exact integer/rational arithmetic.
"""

from .addresses import (
    Address,
    AddressError,
    AddressSyntaxError,
    InfiniteAddress,
    IntermediateAddress,
    TERMINATOR,
    circular_order,
    compare,
    format_address,
    intermediate,
    is_terminator,
    parse,
    periodic,
    prepend,
    shift,
    shift_iter,
)
from .arcs import (
    ArcQueryResult,
    OrbitCount,
    addr_from_angled,
    angled_internal,
    component_from_boundary,
    essential_orbit_count,
    lowest_period_on_arc,
)
from .checks import SUITES, CheckReport, exhaustive_check
from .components import (
    Classification,
    HyperbolicComponent,
    SectorRef,
    SectorWake,
    bifurcate,
    bifurcate_height,
    characteristic_addresses,
    classify,
    forbidden_kneading,
    sector_boundary,
    sector_info,
    wake_contains,
)
from .enumeration import (
    EnumerationBounds,
    enumerate_components,
    enumerate_intermediate,
    enumerate_periodic,
)
from .errors import (
    CombinatoricsError,
    InfiniteInternalAddressError,
    InvalidAngledAddressError,
    NotRealizedError,
    PeriodOneError,
)
from .internal import (
    INF,
    AngledInternalAddress,
    InternalAddress,
    internal_from_kneading,
    kneading_from_internal,
    parse_angled,
    parse_internal,
)
from .itineraries import (
    Boundary,
    Itinerary,
    STAR,
    SeedSide,
    Side,
    finite_itinerary,
    first_difference,
    itinerary,
    kneading,
    kneading_pm,
    periodic_itinerary,
    solve_itinerary,
)
from .tuning import TuningBlockTable, Variant, tune, tuning_block

__version__ = "1.0.0"

__all__ = [
    "Address", "AddressError", "AddressSyntaxError", "InfiniteAddress",
    "IntermediateAddress", "TERMINATOR", "circular_order", "compare",
    "format_address", "intermediate", "is_terminator", "parse", "periodic",
    "prepend", "shift", "shift_iter",
    "ArcQueryResult", "OrbitCount", "addr_from_angled", "angled_internal",
    "component_from_boundary", "essential_orbit_count", "lowest_period_on_arc",
    "SUITES", "CheckReport", "exhaustive_check",
    "Classification", "HyperbolicComponent", "SectorRef", "SectorWake",
    "bifurcate", "bifurcate_height", "characteristic_addresses", "classify",
    "forbidden_kneading", "sector_boundary", "sector_info", "wake_contains",
    "EnumerationBounds", "enumerate_components", "enumerate_intermediate",
    "enumerate_periodic",
    "CombinatoricsError", "InfiniteInternalAddressError",
    "InvalidAngledAddressError", "NotRealizedError", "PeriodOneError",
    "INF", "AngledInternalAddress", "InternalAddress", "internal_from_kneading",
    "kneading_from_internal", "parse_angled", "parse_internal",
    "Boundary", "Itinerary", "STAR", "SeedSide", "Side", "finite_itinerary",
    "first_difference", "itinerary", "kneading", "kneading_pm",
    "periodic_itinerary", "solve_itinerary",
    "TuningBlockTable", "Variant", "tune", "tuning_block",
]
