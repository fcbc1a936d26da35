"""Exception hierarchy shared by every module of the package."""


class CircpatError(Exception):
    """Base class for all package errors."""


class InvalidPatternError(CircpatError, ValueError):
    """A pattern or word is malformed (repeated entries, not standard, ...)."""


class ResourceLimitError(CircpatError):
    """An enumeration would exceed the configured size cap."""


class SingularDivisionError(CircpatError, ZeroDivisionError):
    """Division by a series whose constant term vanishes."""


class UnsupportedDivisionError(CircpatError, ValueError):
    """Division by a series whose constant term is not a rational constant."""


class TheoremNotApplicableError(CircpatError, ValueError):
    """No member of the symmetry orbit of the pattern begins with 1."""


class PatternNotSupportedError(CircpatError, ValueError):
    """The requested ODE or closed form does not cover this pattern."""


class DomainError(CircpatError, ValueError):
    """A closed-form expression was evaluated at (or numerically at) a pole."""
