"""Exception types raised by the geodesic engine."""


class GeodesicError(Exception):
    """Base class for every error raised by this package."""


class EllipsoidError(GeodesicError, ValueError):
    """Invalid ellipsoid parameters. ``field`` names the offending parameter."""

    def __init__(self, field, message):
        super().__init__(f"{field}: {message}")
        self.field = field


class DomainError(GeodesicError, ValueError):
    """Input outside the domain of an operation (e.g. a point far off the surface)."""


class PoleSingularityError(GeodesicError):
    """The geodetic formulation was asked to evaluate at (or cross) a pole."""

    def __init__(self, message, step=None):
        super().__init__(message)
        self.step = step


class DegenerateStateError(GeodesicError):
    """A state carries no usable direction (zero tangent vector)."""


class FrameError(GeodesicError):
    """Frame vectors failed the orthonormality check."""


class NumericOverflowError(GeodesicError, ArithmeticError):
    """A Runge-Kutta stage produced a non-finite value."""

    def __init__(self, step, message=None):
        super().__init__(message or f"non-finite state in RK4 step {step}")
        self.step = step


class TestsetParseError(GeodesicError, ValueError):
    """A line of a test-set file could not be parsed."""

    __test__ = False  # keep pytest from collecting this as a test class

    def __init__(self, line, column, message):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class SafeDomainWarning(UserWarning):
    """A geodetic-system trajectory left the latitude band where it is reliable."""
