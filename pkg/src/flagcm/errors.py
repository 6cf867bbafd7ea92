"""Exception types raised across the package."""


class ComplexError(ValueError):
    """Base class for invalid inputs to complex and graph operations."""


class VertexUncovered(ComplexError):
    def __init__(self, vertex: int):
        super().__init__(f"vertex {vertex} lies in no facet")
        self.vertex = vertex


class CapacityExceeded(ComplexError):
    pass


class DimensionMismatch(ComplexError):
    pass


class NotAFace(ComplexError):
    pass


class EmptyRestriction(ComplexError):
    pass


class NotASubcomplex(ComplexError):
    pass


class NotFlag(ComplexError):
    pass


class NotPure(ComplexError):
    pass


class NotAnEdge(ComplexError):
    pass


class NotAnFVector(ComplexError):
    pass


class NotVD(ComplexError):
    pass


class StructureConditionFailed(ComplexError):
    pass


class PropertyNotSatisfied(ComplexError):
    def __init__(self, message: str, vertex: int | None = None):
        super().__init__(message)
        self.vertex = vertex


class NPPropertyAbsent(ComplexError):
    def __init__(self, message: str, color: int | None = None):
        super().__init__(message)
        self.color = color


class PreconditionFailed(ComplexError):
    def __init__(self, message: str, failed: tuple[str, ...] = ()):
        super().__init__(message)
        self.failed = failed
