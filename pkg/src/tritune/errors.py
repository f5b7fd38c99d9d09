"""Exception types shared across the package."""


class TuningError(ValueError):
    """Base class for all domain errors raised by this package."""


class ExponentBoundError(TuningError):
    """A prime exponent fell outside the configured safety bound."""


class UnsupportedDivisionError(TuningError):
    """An operation required a specific octave division (e.g. 12) and got another."""


class CoverageError(TuningError):
    """A degree of the reference equal scale did not receive exactly two approximants."""

    def __init__(self, degree: int, count: int):
        self.degree = degree
        self.count = count
        super().__init__(f"degree {degree} has {count} approximants, expected 2")


class PropositionViolationError(TuningError):
    """An exhaustive search did not confirm a uniqueness claim it was asked to verify."""
