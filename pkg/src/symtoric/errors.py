"""Exception hierarchy shared by every module of the package."""


class SymtoricError(Exception):
    """Base class for all errors raised by symtoric."""


class DomainError(SymtoricError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class DimensionError(SymtoricError, ValueError):
    """Shapes of vectors or matrices do not fit together."""


class LatticeError(SymtoricError, ArithmeticError):
    """A lattice computation produced a non-integral or inconsistent result."""


class InvalidBasis(LatticeError):
    pass


class NotInSpan(LatticeError):
    pass


class NotInLattice(LatticeError):
    pass


class ResourceError(SymtoricError, RuntimeError):
    """A bounded enumeration would exceed its configured size cutoff."""


class InternalError(SymtoricError, AssertionError):
    """Two computation paths that must agree did not.

    Raised only when an identity that holds as a theorem is violated,
    which signals a bug (or a deliberately injected mutation).
    """
