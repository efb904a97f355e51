"""Shared exception types."""


class InputError(ValueError):
    """Malformed input: unknown vertex, bad word syntax, bad file contents."""


class DegeneratePresentationError(InputError):
    """Presentation has a trivial vertex group or fewer than two vertices."""


class ResourceCapError(RuntimeError):
    """A bounded enumeration exceeded its configured element cap."""
