"""Exception taxonomy shared across the package."""


class MplaError(Exception):
    """Base class for all structured errors raised by this package."""


class MalformedTensor(MplaError):
    """A structure-constant or action tensor has inconsistent shape or content."""


class DimensionMismatch(MplaError):
    """Two objects that must live over the same spaces do not."""


class ArityMismatch(MplaError):
    """A multilinear map has the wrong number of arguments for an operation."""


class SpaceMismatch(MplaError):
    """Operands of a bracket do not share domain and codomain."""


class ShapeMismatch(MplaError):
    """Cochain components do not match the expected bidegree shapes."""


class CoefficientMismatch(MplaError):
    """A cochain does not carry the coefficient spaces an operation requires."""


class NotAComplex(MplaError):
    """The composite of two consecutive coboundary matrices is nonzero."""


class InvalidInput(MplaError):
    """A derived-object constructor received a structure that fails validation."""


class NotRotaBaxter(MplaError):
    """The weight-1 operator identity fails; carries a witness basis pair."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotACocycle(MplaError):
    """A cochain expected to be closed has a nonzero coboundary."""


class NotASection(MplaError):
    """A claimed section does not split the projection."""


class NotRestrictable(MplaError):
    """An action on a direct sum mixes blocks it is required to preserve."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NonzeroMiddleComponent(MplaError):
    """A degree-3 cochain meant to have shape (F1, 0, F3) has F2 != 0."""


class InputError(MplaError):
    """Malformed user input; remembers the offending path and field."""

    def __init__(self, message, path=None, field=None):
        super().__init__(message)
        self.path = path
        self.field = field

    def __str__(self):
        message = super().__str__()
        details = []
        if self.path is not None:
            details.append(f"path={self.path}")
        if self.field is not None:
            details.append(f"field={self.field}")
        if details:
            return f"{message} ({', '.join(details)})"
        return message
