"""Exception hierarchy shared by every structure and engine."""


class DynColorError(Exception):
    """Base class for all errors raised by this package."""


class VertexOutOfRange(DynColorError, IndexError):
    pass


class SelfLoop(DynColorError, ValueError):
    pass


class EdgeExists(DynColorError, KeyError):
    pass


class EdgeMissing(DynColorError, KeyError):
    pass


class NotARoot(DynColorError, ValueError):
    pass


class IsRoot(DynColorError, ValueError):
    pass


class SameTree(DynColorError, ValueError):
    pass


class SameRoot(DynColorError, ValueError):
    pass


class AlreadyPresent(DynColorError, KeyError):
    pass


class NotPresent(DynColorError, KeyError):
    pass


class CapacityExceeded(DynColorError, ValueError):
    """A degree or edge-count capacity declared at construction was exceeded."""


class PaletteExhausted(DynColorError, RuntimeError):
    """No admissible color remained; indicates a broken internal invariant."""


class AuxVertexInUse(DynColorError, RuntimeError):
    """The reserved auxiliary vertices of the connectivity reduction are not isolated."""


class OrientationError(DynColorError, RuntimeError):
    """The out-degree flush did not settle; the graph is far denser than declared."""
