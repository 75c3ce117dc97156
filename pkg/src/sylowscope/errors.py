"""Exception types shared across the package."""


class SylowscopeError(Exception):
    """Base class for all package-specific errors."""


class CapExceeded(SylowscopeError):
    """Group enumeration grew past the configured element cap."""


class ElementNotInGroup(SylowscopeError):
    pass


class NotAPGroup(SylowscopeError):
    pass


class NotASubgroup(SylowscopeError):
    pass


class NotNormal(SylowscopeError):
    pass


class NotAnAutomorphism(SylowscopeError):
    pass


class BadParameters(SylowscopeError):
    pass


class UnknownName(SylowscopeError):
    pass


class NotAUnit(SylowscopeError):
    pass


class NotInLattice(SylowscopeError):
    pass


class PreconditionViolation(SylowscopeError):
    pass


class InternalInconsistency(SylowscopeError):
    """Two procedures that must agree produced different answers."""
