"""Exception hierarchy shared by every qlab module."""


class QlabError(Exception):
    """Base class for all errors raised by qlab."""


class StructuralError(QlabError):
    """A table, matrix or document is malformed (missing entries, unknown ids)."""


class BoundaryMismatch(QlabError):
    """Arrows, distributors or functors whose sources/targets do not line up."""


class PreconditionError(QlabError):
    """An operation was called on inputs that violate its stated precondition."""


class CapExceeded(QlabError):
    """A presheaf enumeration would exceed the configured object cap."""

    def __init__(self, estimate: int, cap: int):
        self.estimate = estimate
        self.cap = cap
        super().__init__(f"estimated {estimate} presheaves exceeds cap {cap}")


class NotContinuous(PreconditionError):
    """A functor between closure spaces fails the continuity inequality."""
