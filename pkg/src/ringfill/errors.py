"""Exception types raised by ringfill."""


class RingfillError(ValueError):
    """Base class for all ringfill input errors."""


class DomainError(RingfillError):
    """An argument lies outside the domain where a formula is defined."""


class ParseError(RingfillError):
    """Malformed serialized input (CSV row or JSON document)."""


class ValidationError(RingfillError):
    """Well-formed input whose values break a data invariant."""
