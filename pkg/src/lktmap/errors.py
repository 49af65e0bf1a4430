"""Exceptions and warnings raised by the LKT engine."""


class LKTError(Exception):
    """Base class for engine failures."""


class TruncationError(LKTError):
    """The truncation radius is too small to capture a tempiric expansion."""


class EmptyError(LKTError):
    """A virtual module with no terms was given where one is required."""


class TieError(LKTError):
    """Two distinct canonical parameters share the largest norm."""

    def __init__(self, message, candidates=()):
        super().__init__(message)
        self.candidates = tuple(candidates)


class AmbiguityError(LKTError):
    """Minimizing lifts disagree on the largest tempiric parameter."""

    def __init__(self, message, candidates=()):
        super().__init__(message)
        self.candidates = tuple(candidates)


class BoxTooSmall(UserWarning):
    """The minimizing lift sits on the boundary of the search box."""
