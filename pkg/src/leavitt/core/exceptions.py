"""Custom exception hierarchy for leavitt."""


class LeavittError(Exception):
    """Base exception for all leavitt errors."""


class GraphError(LeavittError):
    """Base for graph structure errors."""


class GraphValidationError(GraphError):
    """A graph description violates a structural invariant."""

    def __init__(self, message: str, token: str, location: str = ""):
        self.token = token
        self.location = location
        super().__init__(f"{message}: {token!r}" + (f" at {location}" if location else ""))


class UnknownVertexError(GraphError):
    """A vertex name does not occur in the graph."""

    def __init__(self, vertex: str):
        self.vertex = vertex
        super().__init__(f"Unknown vertex {vertex!r}")


class NotHereditarySaturatedError(GraphError):
    """A vertex set is not hereditary and saturated."""


class NotACycleError(GraphError):
    """An edge sequence is not a vertex-simple closed path of the graph."""


class NotAdmissibleError(GraphError):
    """An (H, S) pair is not admissible."""


class AlgebraError(LeavittError):
    """Base for algebra errors."""


class MalformedMonomialError(AlgebraError):
    """A monomial's paths are not composable or do not share their range."""


class AmbientMismatchError(AlgebraError):
    """Elements over different graphs or fields were combined."""


class NotBreakingVertexError(AlgebraError):
    """A vertex is not a breaking vertex of the given hereditary saturated set."""

    def __init__(self, vertex: str):
        self.vertex = vertex
        super().__init__(f"{vertex!r} is not a breaking vertex")


class FieldError(AlgebraError):
    """Unsupported field specification or a scalar outside the field."""


class IdealError(LeavittError):
    """Base for ideal engine errors."""


class ZeroPolynomialError(IdealError):
    """gcd requested for two zero polynomials."""


class GeneratorError(IdealError):
    """A structured generator does not resolve in the graph."""


class CanonicalFormError(IdealError):
    """A canonical ideal form violates its invariants."""


class CertificateError(IdealError):
    """A principal generator certificate failed exact verification."""


class AdmissibleLimitError(IdealError):
    """Admissible pair enumeration refused: too many vertices."""

    def __init__(self, vertices: int, limit: int):
        self.vertices = vertices
        self.limit = limit
        super().__init__(f"Graph has {vertices} vertices, enumeration limit is {limit}")


class ParseError(LeavittError):
    """Malformed expression or scalar text."""

    def __init__(self, message: str, position: int, token: str = ""):
        self.position = position
        self.token = token
        super().__init__(f"{message} at position {position}" + (f" ({token!r})" if token else ""))


class InputFileError(LeavittError):
    """An input document could not be read or does not match its schema."""

    def __init__(self, message: str, location: str = "", source: str = ""):
        self.location = location
        self.source = source
        super().__init__(message)
