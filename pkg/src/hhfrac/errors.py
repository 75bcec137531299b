"""Exception hierarchy shared by every module."""


class HHFracError(Exception):
    """Base class for all errors raised by :mod:`hhfrac`."""


class DomainError(HHFracError, ValueError):
    """An argument lies outside the domain where the quantity is defined."""


class NumericalError(HHFracError, ArithmeticError):
    """A numerical procedure could not deliver the requested accuracy."""


class QuadratureError(NumericalError):
    """Adaptive quadrature exhausted its refinement budget."""


class NumericalConsistencyError(NumericalError):
    """Two independent evaluation routes of the same quantity disagree."""
