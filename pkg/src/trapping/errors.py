"""Exception hierarchy shared by every module of the package."""


class TrappingError(Exception):
    """Base class for all errors raised by :mod:`trapping`."""


class GraphError(TrappingError, ValueError):
    pass


class LoopEdge(GraphError):
    def __init__(self, vertex):
        super().__init__(f"self-loop on vertex {vertex}")
        self.vertex = vertex


class DuplicateEdge(GraphError):
    def __init__(self, edge):
        super().__init__(f"duplicate edge {edge[0]}-{edge[1]}")
        self.edge = edge


class Disconnected(GraphError):
    def __init__(self, vertex):
        super().__init__(f"graph is disconnected: vertex {vertex} unreachable from vertex 0")
        self.vertex = vertex


class InvalidSize(GraphError):
    pass


class EmptySpec(GraphError):
    pass


class UnknownSpec(GraphError):
    pass


class UnknownVertex(GraphError):
    def __init__(self, vertex):
        super().__init__(f"unknown vertex {vertex}")
        self.vertex = vertex


class EdgeListParseError(GraphError):
    def __init__(self, lineno, message):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class NumericalFailure(TrappingError, ArithmeticError):
    pass


class SingularSystem(NumericalFailure):
    pass


class ConvergenceFailure(NumericalFailure):
    pass


class DegenerateGap(NumericalFailure):
    pass


class UnverifiedSpectrum(NumericalFailure):
    pass


class NotRegular(TrappingError, ValueError):
    pass


class GammaOutOfRange(TrappingError, ValueError):
    pass


class AllWalksCapped(NumericalFailure):
    def __init__(self, vertex):
        super().__init__(f"every walk from vertex {vertex} hit max_steps")
        self.vertex = vertex


class InsufficientSizes(TrappingError, ValueError):
    pass


class MissingSidecar(TrappingError, FileNotFoundError):
    pass
