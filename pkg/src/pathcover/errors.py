"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class PathCoverError(Exception):
    """Base class for all errors raised by this package."""


class GraphInputError(PathCoverError):
    pass


class ParseError(GraphInputError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class SelfLoop(GraphInputError):
    def __init__(self, u: int):
        super().__init__(f"self-loop at vertex {u}")
        self.u = u


class TwoCycle(GraphInputError):
    def __init__(self, u: int, v: int):
        super().__init__(f"2-cycle between {u} and {v}")
        self.u, self.v = u, v


class VertexOutOfRange(GraphInputError):
    def __init__(self, v: int, order: int):
        super().__init__(f"vertex {v} out of range for order {order}")
        self.v, self.order = v, order


class EmptyGraph(PathCoverError):
    pass


class NotAPseudoPath(PathCoverError):
    pass


class InvalidParameter(PathCoverError):
    pass


class TooLarge(PathCoverError):
    def __init__(self, order: int, cap: int):
        super().__init__(f"order {order} exceeds solver cap {cap}")
        self.order, self.cap = order, cap


class PreconditionViolated(PathCoverError):
    pass


class DecompositionContradiction(PathCoverError):
    pass


class ConstructionFailure(PathCoverError):
    """An arc or bound the construction relies on is missing.

    ``step`` names the construction stage, ``vertex`` the offending vertex
    (if any) and ``signal`` the forbidden structure the failure points at.
    When known, ``witness`` lists host vertices inducing that structure.
    """

    def __init__(self, step: str, message: str, vertex: int | None = None, signal: str | None = None,
                 witness: list[int] | None = None):
        super().__init__(f"{step}: {message}")
        self.step = step
        self.vertex = vertex
        self.signal = signal
        self.witness = witness


class CliqueCheckFailed(ConstructionFailure):
    def __init__(self, group: str, pair: tuple[int, int], types: tuple[int | None, int | None] = (None, None),
                 signal: str | None = None, witness: list[int] | None = None):
        super().__init__(f"clique check on {group}", f"vertices {pair[0]} and {pair[1]} are not adjacent",
                         vertex=pair[0], signal=signal, witness=witness)
        self.group = group
        self.pair = pair
        self.types = types


class ClaimViolated(ConstructionFailure):
    """Too many spread-out bad attachments; ``witness`` is an induced pseudo-path with large r."""

    def __init__(self, message: str, witness: list[int] | None, witness_r: int | None):
        super().__init__("bad-index selection", message, signal="pseudo-path", witness=witness)
        self.witness_r = witness_r


class ConditionViolated(PathCoverError):
    def __init__(self, report):
        super().__init__(f"condition {report.condition.value} violated: {report.witness}")
        self.report = report
