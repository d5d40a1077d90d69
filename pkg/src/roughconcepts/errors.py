"""Exception types shared across the package."""


class RoughConceptsError(Exception):
    """Base class for every error this package raises on purpose."""


class UnknownNameError(RoughConceptsError):
    """An object or attribute name is not part of the universe."""


class DuplicateNameError(RoughConceptsError):
    """Object or attribute names must be unique within a context."""


class InvalidSetError(RoughConceptsError):
    """An index set refers outside the owning context or space."""


class PartitionError(RoughConceptsError):
    """Blocks must be nonempty, pairwise disjoint, and cover all objects."""


class UniverseMismatchError(RoughConceptsError):
    """A context and an approximation space name different object lists."""


class ShapeMismatchError(RoughConceptsError):
    """Two contexts being compared do not share objects and attributes."""


class LatticeMismatchError(RoughConceptsError):
    """A concept was used with a lattice it does not belong to."""


class ConceptLimitError(RoughConceptsError):
    """Concept enumeration exceeded the configured maximum."""


class UndefinedMeasureError(RoughConceptsError):
    """A rough measure with an empty premise extent has no value."""


class ParseError(RoughConceptsError):
    """Malformed input data; carries a 1-based position when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column})" if column is not None else ")")
        super().__init__(message + where)
