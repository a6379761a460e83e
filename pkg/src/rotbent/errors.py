"""Exception types shared across the package."""


class CapacityError(Exception):
    """Raised when an input exceeds a documented size cap for an algorithm."""


class InternalInconsistencyError(Exception):
    """Raised when two routes that must agree produce different answers.

    Seeing this means an implementation bug, not a property of the input.
    """
