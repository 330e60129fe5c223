"""Exception types shared across the package."""


class CycseqError(Exception):
    """Base class for all cycseq errors."""


class DomainError(CycseqError, ValueError):
    """Input is outside the mathematical domain of an operation."""


class ResourceCapError(CycseqError, RuntimeError):
    """Requested computation exceeds the configured enumeration cap."""
