class QuiverError(ValueError):
    """Malformed quiver, dimension vector or root data."""


class UnsupportedQuiver(QuiverError):
    """The operation needs a quiver class the input does not belong to."""


class JobError(ValueError):
    """Invalid job description.  ``path`` is a JSON pointer to the offending node."""

    def __init__(self, message, path=""):
        self.path = path
        super().__init__(f"{path or '/'}: {message}")


class InvariantViolation(RuntimeError):
    """An internal consistency check failed; this signals a bug, not bad input."""
