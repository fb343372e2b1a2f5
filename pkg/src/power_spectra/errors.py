"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


class InvalidElementError(DomainError):
    """Element index out of range for its group."""


class StructureError(ValueError):
    """Matrix does not have the structure required (e.g. diameter > 2)."""


class NumericError(RuntimeError):
    """An iterative numerical routine failed to converge."""


class DegenerateSubsetError(DomainError):
    """A vertex subset required to be non-empty was empty."""
