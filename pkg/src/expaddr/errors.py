"""Shared domain exceptions."""


class CombinatoricsError(ValueError):
    """Base class for domain errors (precondition violations, unrealizable data)."""


class NotRealizedError(CombinatoricsError):
    """No address realizes the requested itinerary."""


class InvalidAngledAddressError(CombinatoricsError):
    """The given angled internal address belongs to no hyperbolic component."""


class InfiniteInternalAddressError(CombinatoricsError):
    """The kneading sequence generates an unbounded internal address."""


class PeriodOneError(CombinatoricsError):
    """Operation undefined on the period-one component."""
