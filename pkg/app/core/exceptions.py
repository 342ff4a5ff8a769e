"""
Exceptions shared by every app in the project.
"""


class GraphError(ValueError):
    """Invalid graph input or graph that violates a precondition"""


class EdgeListError(GraphError):
    """Malformed edge-list text"""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f'line {line}: {message}'
        super().__init__(message)


class SelfLoopError(EdgeListError):
    """Edge from a vertex to itself"""


class DisconnectedGraphError(GraphError):
    """Graph with an unreachable vertex"""


class IsolatedVertexError(GraphError):
    """Vertex of degree zero"""


class InvalidParameterError(GraphError):
    """Generator or model parameter outside its valid range"""


class VertexError(GraphError):
    """Vertex id outside the graph"""


class SignalError(ValueError):
    """Signal that is zero or does not match the graph dimension"""


class DomainError(ValueError):
    """Spectral spread outside the curve domain"""


class NumericalError(ArithmeticError):
    """Numerical method failed to produce a trustworthy answer"""


class EigenSolverError(NumericalError):
    """Eigensolver did not reach the requested residual"""

    def __init__(self, message, best_residual=None):
        self.best_residual = best_residual
        if best_residual is not None:
            message = f'{message} (best residual {best_residual:.3e})'
        super().__init__(message)


class SpectrumTooLargeError(NumericalError):
    """Dense decomposition requested above the dense threshold"""


class DistanceDistributionError(NumericalError):
    """Distance distribution tail does not converge"""


class InsufficientPointsError(NumericalError):
    """Too few curve points to estimate a derivative"""


class DocumentError(ValueError):
    """Curve document that cannot be emitted or parsed"""
