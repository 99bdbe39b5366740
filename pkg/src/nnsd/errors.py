"""Exception hierarchy shared by every module."""


class NNSDError(Exception):
    """Base class for all library errors."""


class GraphInputError(NNSDError, ValueError):
    """Raised for malformed graph input (bad vertices or bad encodings)."""


class EmptyGraph(GraphInputError):
    pass


class IndexOutOfRange(GraphInputError):
    pass


class SelfLoop(GraphInputError):
    pass


class MalformedHeader(GraphInputError):
    pass


class TruncatedBitStream(GraphInputError):
    pass


class NonCanonicalPadding(GraphInputError):
    pass


class TooLarge(GraphInputError):
    pass


class BadHeader(GraphInputError):
    pass


class EdgeCountMismatch(GraphInputError):
    pass


class BadParams(NNSDError, ValueError):
    """A constructor or evaluator was given parameters outside its domain."""


class RetriesExhausted(NNSDError, RuntimeError):
    """Random generation hit its retry cap; reseed and try again."""


class SizeMismatch(NNSDError, ValueError):
    pass


class CapExceeded(NNSDError, RuntimeError):
    """The exhaustive oracle was asked to handle a graph above its vertex cap."""


class Infeasible(NNSDError, ValueError):
    """No feasible solution exists (k-tuple domination with delta < k - 1)."""


class NotATree(NNSDError, ValueError):
    pass


class NotRegular(NNSDError, ValueError):
    pass


class NotCubic(NotRegular):
    pass


class NotCliqueFree(NNSDError, ValueError):
    pass


class TooSmall(NNSDError, ValueError):
    pass
