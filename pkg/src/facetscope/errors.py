"""Exception hierarchy shared by all facetscope modules."""


class FacetscopeError(Exception):
    """Base class for all errors raised by this package."""


class InvalidDimensionError(FacetscopeError, ValueError):
    """A solid generator was given non-positive or degenerate dimensions."""


class InvalidGeometryError(FacetscopeError, ValueError):
    """A mesh violates the invariants an operation relies on (open, inverted, ...)."""


class DegenerateViewError(FacetscopeError, ValueError):
    """A navigation step would place the eye on top of the viewed point."""


class BehindCameraError(FacetscopeError, ValueError):
    """A point lies behind the eye plane in perspective mode; the caller must clip."""


class ModeLockedError(FacetscopeError):
    """A drag gesture arrived while the view is locked to an axis/phi projection."""


class ParseError(FacetscopeError, ValueError):
    """Malformed XML input; carries line/column when known."""

    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


class SchemaError(FacetscopeError, ValueError):
    """Structurally valid XML that violates the documented schema subset."""


class DanglingReferenceError(SchemaError):
    """A positioner references a volume name that is never defined."""


class NodeNotFoundError(FacetscopeError, KeyError):
    """A tree or event operation addressed an id that does not exist."""


class InsufficientDataError(FacetscopeError, ValueError):
    """A fit was requested with fewer active hits than the model needs."""


class DegenerateFitError(FacetscopeError, ValueError):
    """The hit set has no principal direction (all points coincident)."""
