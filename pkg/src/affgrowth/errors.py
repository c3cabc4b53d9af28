class ValidationError(ValueError):
    """Input does not satisfy the documented preconditions."""


class InvariantError(RuntimeError):
    """An internal consistency check failed; this indicates a bug."""
