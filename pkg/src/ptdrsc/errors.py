"""Exception hierarchy shared by all ptdrsc modules.

Every error raised by the public API derives from :class:`PtdrscError`,
so callers can catch one base class.  The CLI maps these onto exit
codes: domain/usage problems are distinguished from numerical failures.
"""


class PtdrscError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(PtdrscError, ValueError):
    """Input lies outside the mathematical domain of the operation."""


class PoleError(DomainError):
    """Evaluation requested at (or too close to) a pole."""


class ParameterPole(DomainError):
    """A series parameter sits on a forbidden non-positive integer."""


class ComplexBranch(DomainError):
    """A real-valued branch was requested where the root is complex."""


class NumericalError(PtdrscError, ArithmeticError):
    """An algorithm failed to reach its accuracy contract."""


class NoConvergence(NumericalError):
    """Neither series nor asymptotic evaluation met tolerance."""


class Overflow(NumericalError, OverflowError):
    """A result exceeds the representable floating-point range."""


class RealnessViolation(NumericalError):
    """A provably real quantity came back with a large imaginary part."""


class NonIntegrable(NumericalError):
    """Adaptive quadrature failed to converge on the supplied integrand."""


class NoRoot(NumericalError):
    """Root bracketing failed: no solution in the attainable range."""
