class SteinerError(ValueError):
    """Base class for all errors raised by this package."""


class InvalidInput(SteinerError):
    pass


class DuplicateBlock(SteinerError):
    pass


class OutOfRange(SteinerError):
    pass


class BadDifference(SteinerError):
    pass


class InvalidTriple(SteinerError):
    pass


class OddOrder(SteinerError):
    pass


class SizeMismatch(SteinerError):
    pass


class NotAnSTS(SteinerError):
    pass


class CardinalityMismatch(SteinerError):
    pass


class NotIndependent(SteinerError):
    pass


class TooLarge(SteinerError):
    pass


class VerificationFailed(SteinerError):
    """A constructed object failed its own verifier."""
