"""Exception hierarchy shared across the package."""


class ReinhardtError(Exception):
    """Base class for all library errors."""


class SpecError(ReinhardtError):
    """Malformed or inconsistent domain specification."""


class EmptyDomainError(SpecError):
    """The constraint system describes an empty open domain."""


class BoundaryIndeterminate(ReinhardtError):
    """A sign could not be resolved at the maximum working precision.

    Raised instead of guessing when an interval comparison still straddles
    zero after the precision ladder is exhausted.
    """


class MonteCarloError(ReinhardtError):
    """Monte-Carlo estimation failed (unbounded domain, zero acceptance)."""
