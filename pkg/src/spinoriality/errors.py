"""Exception hierarchy shared by all modules."""


class SpinorError(Exception):
    """Base class for all package errors."""


class SpecificationError(SpinorError):
    """Malformed group/weight/lattice specification."""


class IntegralityError(SpinorError):
    """A certificate value that is an integer by theorem came out non-integral.

    This signals an upstream classification or lattice bug; values are never
    rounded or guessed.
    """


class GuardExceededError(SpinorError):
    """A configured resource bound (dimension / Weyl group size) was exceeded."""
