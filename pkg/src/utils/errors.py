"""
Error hierarchy for hiercost.

Every failure raised on purpose by the library derives from HierCostError so the
CLI can map it to an exit code in one place.
"""


class HierCostError(Exception):
    """Base class for all hiercost errors."""

    pass


class ValidationError(HierCostError, ValueError):
    """A precondition or invariant of a domain object was violated."""

    pass


class CapacityError(ValidationError):
    """An input exceeds the hard cap of an exhaustive routine."""

    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what}: size {size} exceeds cap {cap}")
        self.size = size
        self.cap = cap


class GraphParseError(ValidationError):
    """Raised when an edge-list document cannot be parsed."""

    def __init__(self, message: str, line_number: int | None = None):
        prefix = f"line {line_number}: " if line_number is not None else ""
        super().__init__(f"{prefix}{message}")
        self.line_number = line_number


class CnfParseError(ValidationError):
    """Raised when a DIMACS CNF document cannot be parsed."""

    def __init__(self, message: str, line_number: int | None = None):
        prefix = f"line {line_number}: " if line_number is not None else ""
        super().__init__(f"{prefix}{message}")
        self.line_number = line_number


class ConfigError(HierCostError):
    """Invalid experiment configuration."""

    pass


class UsageError(HierCostError):
    """Bad command-line usage (exit code 1)."""

    pass
