"""Exception and warning types shared across the package."""


class CircpowError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(CircpowError, ValueError):
    """Invalid construction parameters (bad n, d, jump set, ...)."""


class CompleteGraphError(CircpowError, ValueError):
    """A theorem operation was applied to a complete distance power.

    The multiplicity theorems assume a non-complete circuit power; calling
    them on a complete graph would silently return wrong values, so we
    raise instead.
    """


class TheoremDomainError(CircpowError, ValueError):
    """Parameters outside the validity range of a specific theorem."""


class EigenvalueAbsentError(CircpowError, ValueError):
    """A basis was requested for an eigenvalue of multiplicity zero."""


class NonConvergenceError(CircpowError, RuntimeError):
    """The dense eigensolver failed to converge."""


class InternalConsistencyError(CircpowError, AssertionError):
    """Two case conditions fired with conflicting values.

    The multiplicity case splits partition the (n, d) grid; seeing this
    error means an implementation bug, not bad input.
    """


class AmbiguousToleranceWarning(UserWarning):
    """Two quantities are separated by less than 10x the tolerance in use."""
