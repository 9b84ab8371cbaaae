"""Exception types shared across the library.

The CLI maps these onto its exit codes: OutOfScopeError -> 2,
UnknownValueError -> 3.  Plain ValueError marks misuse of an API.
"""


class BundleGaugeError(Exception):
    """Base class for domain errors raised by this library."""


class OutOfScopeError(BundleGaugeError):
    """The inputs fall outside the hypotheses of any implemented criterion.

    Raised instead of guessing: the library only answers questions the
    underlying classification results actually cover.
    """


class UnknownValueError(BundleGaugeError):
    """A required fact is not in the curated tables.

    Table lookups never extrapolate; a missing entry is reported as
    unknown rather than computed heuristically.
    """


class LocalityError(ValueError):
    """Arithmetic attempted across incompatible localizations."""
