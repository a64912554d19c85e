"""Exception hierarchy. Every error names the invariant it guards."""


class TreeBijError(ValueError):
    """Base class for all errors raised by treebij."""


class InvalidTree(TreeBijError):
    pass


class NotConnected(InvalidTree):
    pass


class HasCycle(InvalidTree):
    pass


class WrongEdgeCount(InvalidTree):
    pass


class UnknownLabel(TreeBijError):
    pass


class NotAStrictDescendant(TreeBijError):
    pass


class InvalidCode(TreeBijError):
    pass


class TooSmall(TreeBijError):
    pass


class EmptyLabelSet(TreeBijError):
    pass


class EmptyCodomain(TreeBijError):
    pass


class EmptyGroundSet(TreeBijError):
    pass


class DomainCodomainMismatch(TreeBijError):
    pass


class EmptyTree(TreeBijError):
    pass


class OverlappingLabels(TreeBijError):
    pass


class BadDomain(TreeBijError):
    pass


class PoleAtZero(TreeBijError, ZeroDivisionError):
    pass


class CapExceeded(TreeBijError):
    pass
