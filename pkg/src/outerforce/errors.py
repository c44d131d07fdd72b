"""Exception hierarchy shared by all modules."""


class OuterforceError(Exception):
    """Base class for every error raised by this package."""


# graph construction and structure

class GraphError(OuterforceError, ValueError):
    pass


class LoopEdge(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class NotTwoConnected(GraphError):
    pass


class NotOuterplanar(GraphError):
    pass


class EmptySet(GraphError):
    pass


class IdCollision(GraphError):
    pass


# matchings

class NoPerfectMatching(OuterforceError, ValueError):
    pass


class NotPerfectMatching(OuterforceError, ValueError):
    pass


class CapExceeded(OuterforceError):
    """Enumeration stopped at the cap while further matchings exist."""


class NotMatchingCovered(OuterforceError, ValueError):
    pass


# decomposition

class DecompositionError(OuterforceError):
    """Internal consistency failure in the tight cut decomposition."""


class BraceNotC4(DecompositionError):
    pass


class NotExactlyTwoCycleEdges(DecompositionError, ValueError):
    pass


class UnknownPseudoVertex(DecompositionError, KeyError):
    pass


# dynamic program

class SingleNodeTree(DecompositionError):
    pass


class BadBraceStructure(DecompositionError):
    pass


class EmptyW(DecompositionError):
    pass


class EmptyRootTable(DecompositionError):
    pass


class IntervalViolation(DecompositionError):
    """An open-edge set was not contiguous under its cut order."""


class EmptySpectrum(OuterforceError, ValueError):
    pass


# oracle

class InfeasibleF(OuterforceError, ValueError):
    pass


class OracleTooLarge(OuterforceError):
    pass


class GenerationFailed(OuterforceError):
    pass


# io

class ParseError(OuterforceError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
